"""Exact arithmetic kernel: sparse rational polynomials and truncated series.

Scalars are :class:`fractions.Fraction` throughout, which already keeps every
value in lowest terms with a positive denominator.  Everything here is
immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence, TypeVar

Exponent = tuple[int, ...]
T = TypeVar("T")


def as_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use int or Fraction")
    return Fraction(value)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class MultiPoly:
    """Sparse polynomial in ``num_vars`` variables with rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions.

    >>> x0, x1 = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    >>> (x0 + x1) * (x0 + x1) == x0**2 + 2 * x0 * x1 + x1**2
    True
    """

    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Sequence[int], object] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} does not have length {num_vars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = clean.get(exp, Fraction(0)) + as_scalar(coeff)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self.num_vars = num_vars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars: int, terms: dict[Exponent, Fraction]) -> "MultiPoly":
        # trusted constructor: terms already pruned and shaped
        obj = cls.__new__(cls)
        obj.num_vars = num_vars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls._raw(num_vars, {})

    @classmethod
    def const(cls, value, num_vars: int) -> "MultiPoly":
        value = as_scalar(value)
        return cls._raw(num_vars, {(0,) * num_vars: value} if value else {})

    @classmethod
    def var(cls, index: int, num_vars: int) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise IndexError(f"variable index {index} out of range for {num_vars} variables")
        exp = tuple(1 if i == index else 0 for i in range(num_vars))
        return cls._raw(num_vars, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): coeff})

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        """Smallest total degree of a term; -1 for the zero polynomial."""
        return min((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.num_vars, Fraction(0))

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other, self.num_vars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise ValueError(
                    f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.num_vars)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.num_vars)
            return MultiPoly._raw(self.num_vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.num_vars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / as_scalar(other))

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.const(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and substitution ----------------------------------------

    def diff(self, index: int) -> "MultiPoly":
        out = {}
        for exp, c in self.terms.items():
            e = exp[index]
            if e:
                new = list(exp)
                new[index] = e - 1
                out[tuple(new)] = c * e
        return MultiPoly._raw(self.num_vars, out)

    def diff_multi(self, orders: Sequence[int]) -> "MultiPoly":
        p = self
        for idx, k in enumerate(orders):
            for _ in range(k):
                p = p.diff(idx)
        return p

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.num_vars:
            raise ValueError("point dimension does not match variable count")
        pt = [as_scalar(v) for v in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(pt, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, values: Sequence[T], one: T) -> T:
        """Evaluate with ring elements: ``values[i]`` replaces variable ``i``.

        ``one`` is the unit of the target ring; coefficients multiply it.
        Powers are cached per variable so each is formed once.
        """
        if len(values) != self.num_vars:
            raise ValueError("substitution length does not match variable count")
        cache: dict[tuple[int, int], T] = {}

        def power(i: int, e: int) -> T:
            key = (i, e)
            if key not in cache:
                cache[key] = values[i] if e == 1 else power(i, e - 1) * values[i]
            return cache[key]

        total = one * 0
        for exp, c in self.terms.items():
            term = one * c
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def shift(self, point: Sequence) -> "MultiPoly":
        """Rewrite in the translated variables ``w = z - point``."""
        n = self.num_vars
        shifted = [MultiPoly.var(i, n) + as_scalar(point[i]) for i in range(n)]
        return self.substitute(shifted, MultiPoly.const(1, n))

    def truncate_degree(self, max_degree: int) -> "MultiPoly":
        return MultiPoly._raw(
            self.num_vars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree}
        )

    def embed(self, num_vars: int, positions: Sequence[int]) -> "MultiPoly":
        """Send variable ``i`` to variable ``positions[i]`` of a larger ring."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * num_vars
            for i, e in enumerate(exp):
                new[positions[i]] += e
            out[tuple(new)] = c
        return MultiPoly._raw(num_vars, out)

    def __repr__(self) -> str:
        return f"MultiPoly({self.num_vars}, {self.to_str()})"

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.num_vars)]
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if a.num_vars != b.num_vars:
        raise ValueError(f"variable count mismatch: {a.num_vars} vs {b.num_vars}")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def monomials(num_vars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, ``x0^degree`` first."""
    if num_vars == 0:
        return [()] if degree == 0 else []
    if num_vars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - first):
            out.append((first,) + rest)
    return out


def monomials_upto(num_vars: int, degree: int) -> list[Exponent]:
    return [e for d in range(degree + 1) for e in monomials(num_vars, d)]


# ---------------------------------------------------------------------------
# truncated power series


class TruncatedSeries:
    """Coefficients of ``t^0 .. t^order``; anything beyond is unknown, not zero.

    Binary operations between series of different order truncate to the
    smaller order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_scalar(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, value, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order from {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.const(other, self.order)
        return NotImplemented

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: k + 1], other.coeffs)], k)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (k + 1)
        for i in range(k + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(k + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, k)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            raise ValueError("negative powers not supported")
        result = TruncatedSeries.const(1, self.order)
        for _ in range(e):
            result = result * self
        return result

    def derivative(self) -> "TruncatedSeries":
        return series_derivative(self)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(t))``; requires ``inner(0) = 0``."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must vanish at t = 0")
        k = min(self.order, inner.order)
        inner = inner.truncate(k)
        # Horner: a0 + inner*(a1 + inner*(a2 + ...))
        acc = TruncatedSeries.const(self.coeffs[k], k)
        for j in range(k - 1, -1, -1):
            acc = acc * inner + self.coeffs[j]
        return acc

    def value_at_zero(self) -> Fraction:
        return self.coeffs[0]


class ReparamGerm(TruncatedSeries):
    """Truncated germ of a biholomorphism of (C, 0): ``phi(0) = 0``, ``phi'(0) != 0``."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable, order: int | None = None):
        super().__init__(coeffs, order)
        if self.coeffs[0] != 0:
            raise ValueError("reparametrization must fix the origin")
        if self.order < 1 or self.coeffs[1] == 0:
            raise ValueError("reparametrization must have nonzero linear term")

    @classmethod
    def scaling(cls, lam, order: int) -> "ReparamGerm":
        return cls([0, lam], order)

    def then(self, other: "ReparamGerm") -> "ReparamGerm":
        """The germ ``self(other(t))``."""
        s = self.compose(other)
        return ReparamGerm(s.coeffs, s.order)

    def derivative_at_zero(self) -> Fraction:
        return self.coeffs[1]


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    if f.order < 1:
        raise ValueError("cannot differentiate an order-0 series")
    return TruncatedSeries([(j + 1) * f.coeffs[j + 1] for j in range(f.order)], f.order - 1)


def series_compose(f: TruncatedSeries, phi: TruncatedSeries) -> TruncatedSeries:
    if f.order != phi.order:
        raise ValueError(f"truncation orders differ: {f.order} vs {phi.order}")
    if phi.coeffs[0] != 0:
        raise ValueError("phi(0) must be 0")
    return f.compose(phi)


class CurveGerm:
    """Truncated germ ``t -> (f_1(t), ..., f_n(t))``; base point need not be 0."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[TruncatedSeries]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a curve germ needs at least one component")
        if len({c.order for c in comps}) != 1:
            raise ValueError("all components must share one truncation order")
        self.components = comps

    @classmethod
    def from_coeffs(cls, rows: Sequence[Sequence], order: int) -> "CurveGerm":
        return cls([TruncatedSeries(r, order) for r in rows])

    @property
    def num_vars(self) -> int:
        return len(self.components)

    @property
    def order(self) -> int:
        return self.components[0].order

    def base_point(self) -> tuple[Fraction, ...]:
        return tuple(c.coeffs[0] for c in self.components)

    def reparametrize(self, phi: ReparamGerm) -> "CurveGerm":
        return CurveGerm([c.compose(phi) for c in self.components])

    def derivative_series(self, i: int, j: int) -> TruncatedSeries:
        """j-th derivative of component i (order drops by j)."""
        s = self.components[i]
        for _ in range(j):
            s = series_derivative(s)
        return s

    def __eq__(self, other) -> bool:
        return isinstance(other, CurveGerm) and self.components == other.components

    def __repr__(self) -> str:
        return f"CurveGerm({list(self.components)})"


def poly_eval_germ(g: MultiPoly, f: CurveGerm) -> TruncatedSeries:
    if g.num_vars != f.num_vars:
        raise ValueError(f"variable count mismatch: {g.num_vars} vs {f.num_vars}")
    return g.substitute(list(f.components), TruncatedSeries.const(1, f.order))


# ---------------------------------------------------------------------------
# determinants over arbitrary commutative rings


def cofactor_det(matrix: Sequence[Sequence[T]], zero: T) -> T:
    """Laplace expansion along successive rows with memoized minors.

    Works over any commutative ring whose elements support ``+``, ``-`` and
    ``*``.  Minors are keyed by the set of remaining columns, so a size-m
    matrix costs O(m 2^m) ring products.
    """
    m = len(matrix)
    if m == 0:
        raise ValueError("empty matrix")
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix is not square")
    memo: dict[tuple[int, ...], T] = {}

    def minor(cols: tuple[int, ...]) -> T:
        row = m - len(cols)
        if len(cols) == 1:
            return matrix[row][cols[0]]
        if cols in memo:
            return memo[cols]
        total = zero
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if _is_zero(entry):
                continue
            sub = minor(cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        memo[cols] = total
        return total

    return minor(tuple(range(m)))


def _is_zero(x) -> bool:
    is_zero: Callable | None = getattr(x, "is_zero", None)
    if is_zero is not None:
        return is_zero()
    return x == 0


def prod(items: Iterable[T], one: T) -> T:
    return reduce(lambda a, b: a * b, items, one)


def exponent_grid(bounds: Sequence[int]) -> Iterable[Exponent]:
    return product(*(range(b) for b in bounds))
