"""Green-Griffiths jet polynomials and the canonical derivation.

A :class:`JetPoly` of coordinate count ``n`` and jet order ``k`` is a
polynomial in the variables ``z_i^(j)`` for ``0 <= i < n`` and ``0 <= j <= k``.
It is stored as a flat :class:`MultiPoly` whose variable slot for ``z_i^(j)``
is ``i * (k + 1) + j``.  Coordinates are 0-based in code; printed names are
1-based (``z1``, ``z1'``, ...) to match the usual notation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import CurveGerm, MultiPoly, TruncatedSeries, as_scalar

INHOMOGENEOUS = "inhomogeneous"


def slot(i: int, j: int, k: int) -> int:
    return i * (k + 1) + j


class JetPoly:
    __slots__ = ("n", "k", "poly")

    def __init__(self, n: int, k: int, poly: MultiPoly | None = None):
        if n < 1 or k < 0:
            raise ValueError("need n >= 1 and k >= 0")
        if poly is None:
            poly = MultiPoly.zero(n * (k + 1))
        if poly.num_vars != n * (k + 1):
            raise ValueError(f"expected {n * (k + 1)} slots, got {poly.num_vars}")
        self.n = n
        self.k = k
        self.poly = poly

    # -- constructors -----------------------------------------------------

    @classmethod
    def variable(cls, i: int, j: int, n: int, k: int) -> "JetPoly":
        """The jet variable ``z_i^(j)`` (0-based ``i``)."""
        if not (0 <= i < n and 0 <= j <= k):
            raise IndexError(f"z_{i}^({j}) outside n={n}, k={k}")
        return cls(n, k, MultiPoly.var(slot(i, j, k), n * (k + 1)))

    @classmethod
    def const(cls, value, n: int, k: int) -> "JetPoly":
        return cls(n, k, MultiPoly.const(value, n * (k + 1)))

    @classmethod
    def from_coordinate_poly(cls, g: MultiPoly, k: int = 0) -> "JetPoly":
        """View a function of ``z_1..z_n`` as a weight-0 jet polynomial."""
        n = g.num_vars
        return cls(n, k, g.embed(n * (k + 1), [slot(i, 0, k) for i in range(n)]))

    # -- structure --------------------------------------------------------

    @property
    def terms(self):
        return self.poly.terms

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def raise_order(self, k: int) -> "JetPoly":
        if k < self.k:
            raise ValueError(f"cannot lower jet order from {self.k} to {k}")
        if k == self.k:
            return self
        positions = [slot(i, j, k) for i in range(self.n) for j in range(self.k + 1)]
        return JetPoly(self.n, k, self.poly.embed(self.n * (k + 1), positions))

    def effective_order(self) -> int:
        """Highest derivative order actually present (0 if none)."""
        top = 0
        for exp in self.poly.terms:
            for s, e in enumerate(exp):
                if e:
                    top = max(top, s % (self.k + 1))
        return top

    def monomial_weight(self, exp: Sequence[int]) -> int:
        return sum((s % (self.k + 1)) * e for s, e in enumerate(exp))

    def _align(self, other) -> tuple["JetPoly", "JetPoly"]:
        if isinstance(other, (int, Fraction)):
            return self, JetPoly.const(other, self.n, self.k)
        if not isinstance(other, JetPoly):
            raise TypeError(f"cannot combine JetPoly with {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"coordinate count mismatch: {self.n} vs {other.n}")
        k = max(self.k, other.k)
        return self.raise_order(k), other.raise_order(k)

    def __add__(self, other) -> "JetPoly":
        a, b = self._align(other)
        return JetPoly(a.n, a.k, a.poly + b.poly)

    __radd__ = __add__

    def __sub__(self, other) -> "JetPoly":
        a, b = self._align(other)
        return JetPoly(a.n, a.k, a.poly - b.poly)

    def __rsub__(self, other) -> "JetPoly":
        return (-self) + other

    def __neg__(self) -> "JetPoly":
        return JetPoly(self.n, self.k, -self.poly)

    def __mul__(self, other) -> "JetPoly":
        if isinstance(other, (int, Fraction)):
            return JetPoly(self.n, self.k, self.poly * other)
        a, b = self._align(other)
        return JetPoly(a.n, a.k, a.poly * b.poly)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "JetPoly":
        return JetPoly(self.n, self.k, self.poly**e)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.poly == other
        if not isinstance(other, JetPoly) or other.n != self.n:
            return NotImplemented
        a, b = self._align(other)
        return a.poly == b.poly

    def __hash__(self) -> int:
        # equal values may sit at different jet orders, so hash order-free data only
        return hash((self.n, len(self.poly.terms)))

    def names(self) -> list[str]:
        return [
            f"z{i + 1}" + ("'" * j if j <= 3 else f"^({j})")
            for i in range(self.n)
            for j in range(self.k + 1)
        ]

    def __repr__(self) -> str:
        return f"JetPoly(n={self.n}, k={self.k}, {self.poly.to_str(self.names())})"


def weighted_degree(q: JetPoly) -> int | str:
    """Common weight ``sum_j j * (exponent of z^(j))`` of all monomials.

    Returns :data:`INHOMOGENEOUS` when monomials of different weight occur.
    The zero polynomial is reported as weight 0.
    """
    weights = {q.monomial_weight(exp) for exp in q.terms}
    if len(weights) > 1:
        return INHOMOGENEOUS
    return weights.pop() if weights else 0


def derive(q: JetPoly) -> JetPoly:
    """The canonical derivation: ``z_i^(j) -> z_i^(j+1)`` extended by Leibniz.

    Result lives at jet order ``k + 1``.  On the coordinate part this is
    ``sum_i dc/dz_i * z_i'`` since ``z_i^(0) -> z_i^(1)``.
    """
    n, k = q.n, q.k
    lifted = q.raise_order(k + 1)
    width = k + 2
    out: dict[tuple[int, ...], Fraction] = {}
    for exp, c in lifted.poly.terms.items():
        for s, e in enumerate(exp):
            if not e or s % width == k + 1:
                continue
            new = list(exp)
            new[s] -= 1
            new[s + 1] += 1
            key = tuple(new)
            out[key] = out.get(key, 0) + c * e
    return JetPoly(n, k + 1, MultiPoly(n * width, out))


def d_pow(s: MultiPoly, j: int, max_order: int | None = None) -> JetPoly:
    """``D^j`` applied to a coordinate polynomial ``s``.

    ``max_order`` is the declared jet order bound; asking for more is an error.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    if max_order is not None and j > max_order:
        raise ValueError(f"derivative order {j} exceeds declared jet order {max_order}")
    q = JetPoly.from_coordinate_poly(s)
    for _ in range(j):
        q = derive(q)
    return q


def eval_on_germ(q: JetPoly, f: CurveGerm, order: int) -> TruncatedSeries:
    """Substitute ``z_i^(j) -> f_i^(j)(t)`` and truncate at ``t^order``."""
    if f.num_vars != q.n:
        raise ValueError(f"germ has {f.num_vars} components, jet polynomial has n={q.n}")
    if f.order < q.k + order:
        raise ValueError(
            f"germ order {f.order} too small: need at least k + K = {q.k + order}"
        )
    values = [
        f.derivative_series(i, j).truncate(order) for i in range(q.n) for j in range(q.k + 1)
    ]
    return q.poly.substitute(values, TruncatedSeries.const(1, order))


def jet_monomials(n: int, k: int, entries: dict[tuple[tuple[int, int], ...], object]) -> JetPoly:
    """Build a jet polynomial from ``{((i, j), ...): coeff}`` monomial listings.

    Each key lists the jet variables in the monomial with repetition.
    """
    out: dict[tuple[int, ...], Fraction] = {}
    for mono, c in entries.items():
        exp = [0] * (n * (k + 1))
        for i, j in mono:
            exp[slot(i, j, k)] += 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + as_scalar(c)
    return JetPoly(n, k, MultiPoly(n * (k + 1), out))
