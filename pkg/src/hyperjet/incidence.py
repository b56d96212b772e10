"""Brute-force checks on the universal family of complete intersections.

* ``local_length``: dimension of the local algebra of an isolated zero,
  computed as ``dim O/(I + m^d)`` by linear algebra on monomial bases until
  two consecutive truncation degrees agree.
* the degree-1 test curves in the Grassmannian and their intersection points
  with the pulled-back hyperplane, as explicit chart ideals;
* Pluecker degrees of those curves from gcd-normalized maximal minors;
* finiteness of fibers over F_p points of the Grassmannian.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .algebra import MultiPoly, as_scalar, cofactor_det, monomials, monomials_upto
from .bounds import b_coeffs
from .ffield import (
    eval_gf2,
    eval_mod,
    is_prime,
    projective_points,
    projective_points_gf2,
    rank_mod,
    rref_mod,
)


class CapExceeded(RuntimeError):
    """Truncation degree cap reached without the length stabilizing."""


@dataclass(frozen=True)
class ChartIdeal:
    vars: tuple[str, ...]
    gens: tuple[MultiPoly, ...]
    base_point: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "base_point", tuple(as_scalar(x) for x in self.base_point))
        nv = len(self.vars)
        if len(self.base_point) != nv:
            raise ValueError("base point dimension does not match variable count")
        for g in self.gens:
            if g.num_vars != nv:
                raise ValueError("generator variable count does not match chart")
            if g.evaluate(self.base_point) != 0:
                raise ValueError(f"generator {g.to_str(self.vars)} does not vanish at the base point")

    def default_cap(self) -> int:
        return 2 + sum(max(g.total_degree(), 0) for g in self.gens)


# ---------------------------------------------------------------------------
# local length


class _Echelon:
    """Sparse row echelon form over Q keyed by leading column."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def add(self, row: dict[int, Fraction]) -> bool:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                self.pivots[lead] = {c: v * inv for c, v in row.items()}
                return True
            f = row[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _truncated_quotient_dim(gens: Sequence[MultiPoly], num_vars: int, d: int) -> int:
    """``dim k[x]/(I + m^d)`` localized at 0, for generators vanishing at 0."""
    basis = monomials_upto(num_vars, d - 1)
    index = {e: i for i, e in enumerate(basis)}
    ech = _Echelon()
    for g in gens:
        low = g.min_degree()
        if low < 0 or low >= d:
            continue
        g_terms = [(e, c) for e, c in g.terms.items() if sum(e) < d]
        for u in monomials_upto(num_vars, d - 1 - low):
            du = sum(u)
            row = {}
            for e, c in g_terms:
                if sum(e) + du < d:
                    row[index[tuple(a + b for a, b in zip(e, u))]] = c
            if row:
                ech.add(row)
    return len(basis) - ech.rank


def _components(gens: Sequence[MultiPoly], num_vars: int) -> list[tuple[list[int], list[MultiPoly]]]:
    """Group generators whose variable sets overlap (union-find)."""
    parent = list(range(num_vars))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        vs = sorted({i for e in g.terms for i, x in enumerate(e) if x})
        for a, b in zip(vs, vs[1:]):
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for v in range(num_vars):
        groups.setdefault(find(v), []).append(v)
    out = []
    for vs in groups.values():
        sub = []
        for g in gens:
            gv = {i for e in g.terms for i, x in enumerate(e) if x}
            if gv and gv <= set(vs):
                sub.append(
                    MultiPoly(len(vs), {tuple(e[v] for v in vs): c for e, c in g.terms.items()})
                )
        out.append((vs, sub))
    return out


def _local_length_block(gens: Sequence[MultiPoly], num_vars: int, cap: int) -> int:
    if any(g.constant_term() for g in gens):
        return 0
    prev = None
    for d in range(1, cap + 1):
        cur = _truncated_quotient_dim(gens, num_vars, d)
        if prev is not None:
            assert cur >= prev, "truncated lengths must be non-decreasing"
            if cur == prev:
                return cur
        prev = cur
    raise CapExceeded(f"length did not stabilize by degree {cap}")


def local_length(ideal: ChartIdeal, degree_cap: int | None = None, split: bool = True) -> int:
    """Length of the local algebra of ``ideal`` at its base point.

    With ``split=True`` generators are grouped into blocks with disjoint
    variables and the lengths multiplied (the local algebra is then a tensor
    product); ``split=False`` runs one linear-algebra computation over all
    variables.  Raises :class:`CapExceeded` if no stabilization by the cap.
    """
    cap = ideal.default_cap() if degree_cap is None else degree_cap
    nv = len(ideal.vars)
    moved = [g.shift(ideal.base_point) for g in ideal.gens]
    if not split:
        return _local_length_block(moved, nv, cap)
    total = 1
    for vs, sub in _components(moved, nv):
        total *= _local_length_block(sub, len(vs), cap)
        if total == 0:
            return 0
    return total


# ---------------------------------------------------------------------------
# explicit instances


def build_single_instance(N: int, delta: int) -> ChartIdeal:
    """Chart z_0 = 1, t_0 = 1 at the unique intersection point of the test
    curve with the pulled-back hyperplane ``z_0 + z_N = 0``."""
    if N < 2 or delta < 1:
        raise ValueError("need N >= 2 and delta >= 1")
    nv = N + 1
    z = [MultiPoly.var(i, nv) for i in range(N)]
    t = MultiPoly.var(N, nv)
    gens = [z[i] ** delta for i in range(N - 1)]
    gens.append(z[N - 1] ** delta + t)
    gens.append(z[N - 1] + 1)
    base = [0] * (N - 1) + [-1, -((-1) ** delta)]
    names = tuple(f"z{i}" for i in range(1, N + 1)) + ("t",)
    return ChartIdeal(names, tuple(gens), tuple(base))


@dataclass(frozen=True)
class MultReport:
    instance: dict
    ideal: ChartIdeal
    computed: int
    expected: int

    @property
    def verdict(self) -> bool:
        return self.computed == self.expected


def verify_single_mult(N: int, delta: int, degree_cap: int | None = None) -> MultReport:
    ideal = build_single_instance(N, delta)
    return MultReport(
        {"N": N, "delta": delta},
        ideal,
        local_length(ideal, degree_cap),
        delta ** (N - 1),
    )


def product_coordinate(l: int, m: int, c: int) -> int:
    """1-based coordinate carrying section ``l`` (0..k) of factor ``m`` (1..c)."""
    return l * c + m


def build_product_instance(c: int, k: int, deltas: Sequence[int], i: int) -> ChartIdeal:
    """Intersection point of the product curve C_i with ``z_i + z_0 = 0``.

    Uses ``n = (k + 1) c`` coordinates ``z_1..z_n`` plus ``z_0`` (set to 1).
    """
    if c < 1 or k < 0 or len(deltas) != c:
        raise ValueError("need c >= 1, k >= 0 and c degrees")
    if not 1 <= i <= c:
        raise ValueError(f"moving index must lie in 1..{c}")
    n = (k + 1) * c
    nv = n + 1
    z = [None] + [MultiPoly.var(j - 1, nv) for j in range(1, n + 1)]
    t = MultiPoly.var(n, nv)
    gens = []
    for m in range(1, c + 1):
        dm = deltas[m - 1]
        for l in range(k + 1):
            j = product_coordinate(l, m, c)
            if m == i and l == 0:
                gens.append(z[j] ** dm + t)
            else:
                gens.append(z[j] ** dm)
    gens.append(z[i] + 1)
    base = [0] * n + [-((-1) ** deltas[i - 1])]
    base[i - 1] = -1
    names = tuple(f"z{j}" for j in range(1, n + 1)) + ("t",)
    return ChartIdeal(names, tuple(gens), tuple(base))


def verify_product_mult(
    c: int, k: int, deltas: Sequence[int], i: int, degree_cap: int | None = None
) -> MultReport:
    ideal = build_product_instance(c, k, deltas, i)
    return MultReport(
        {"c": c, "k": k, "deltas": list(deltas), "i": i, "n": (k + 1) * c},
        ideal,
        local_length(ideal, degree_cap),
        b_coeffs(deltas, k)[i - 1],
    )


# ---------------------------------------------------------------------------
# Pluecker degrees


@dataclass(frozen=True)
class GrassCurveSpec:
    mode: str
    N: int = 0
    delta: int = 0
    c: int = 0
    k: int = 0
    deltas: tuple[int, ...] = ()
    i: int = 1

    def __post_init__(self):
        object.__setattr__(self, "deltas", tuple(self.deltas))
        if self.mode == "single":
            if self.N < 2 or self.delta < 1:
                raise ValueError("single curves need N >= 2, delta >= 1")
        elif self.mode == "product":
            if self.c < 1 or len(self.deltas) != self.c or not 1 <= self.i <= self.c:
                raise ValueError("product curves need c >= 1, c degrees, 1 <= i <= c")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def factors(self) -> int:
        return 1 if self.mode == "single" else self.c


def _t_forms() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    return MultiPoly.const(1, 2), MultiPoly.var(0, 2), MultiPoly.var(1, 2)


def curve_matrix(spec: GrassCurveSpec, factor: int = 1) -> tuple[list[tuple[int, ...]], list[list[MultiPoly]]]:
    """Coefficient matrix of the spanning sections, entries forms in (t0, t1).

    Columns are the degree-delta monomials in z_0..z_n, in the order of
    :func:`monomials`.  Returns ``(columns, rows)``.
    """
    one, t0, t1 = _t_forms()
    zero = MultiPoly.zero(2)
    if spec.mode == "single":
        nv, delta = spec.N + 1, spec.delta
        sections = [{_pure(j, delta, nv): one} for j in range(1, spec.N)]
        sections.append({_pure(spec.N, delta, nv): t0, _pure(0, delta, nv): t1})
    else:
        n = (spec.k + 1) * spec.c
        nv, delta = n + 1, spec.deltas[factor - 1]
        sections = []
        for l in range(spec.k + 1):
            j = product_coordinate(l, factor, spec.c)
            if factor == spec.i and l == 0:
                sections.append({_pure(j, delta, nv): t0, _pure(0, delta, nv): t1})
            else:
                sections.append({_pure(j, delta, nv): one})
    columns = monomials(nv, delta)
    rows = [[sec.get(col, zero) for col in columns] for sec in sections]
    return columns, rows


def _pure(j: int, delta: int, nv: int) -> tuple[int, ...]:
    return tuple(delta if i == j else 0 for i in range(nv))


def _univariate_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            f = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] -= f * c
            r = trim(r)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def binary_forms_gcd_degree(forms: Sequence[MultiPoly]) -> int:
    """Degree of the gcd of nonzero binary forms in (t0, t1)."""
    t0_power = None
    g: list[Fraction] | None = None
    for f in forms:
        d = f.total_degree()
        # dehomogenize at t0 = 1: coefficient of t1^j
        coeffs = [Fraction(0)] * (d + 1)
        for (e0, e1), c in f.terms.items():
            coeffs[e1] = c
        top = max(j for j, c in enumerate(coeffs) if c)
        v = d - top
        t0_power = v if t0_power is None else min(t0_power, v)
        g = coeffs[: top + 1] if g is None else _univariate_gcd(g, coeffs[: top + 1])
    return t0_power + len(g) - 1


def plucker_minors(rows: Sequence[Sequence[MultiPoly]]) -> list[MultiPoly]:
    """All nonzero maximal minors (columns that are identically zero are skipped)."""
    size = len(rows)
    live = [j for j in range(len(rows[0])) if any(not r[j].is_zero() for r in rows)]
    out = []
    for cols in combinations(live, size):
        m = cofactor_det([[r[j] for j in cols] for r in rows], MultiPoly.zero(2))
        if not m.is_zero():
            out.append(m)
    return out


def plucker_degree_of_rows(rows: Sequence[Sequence[MultiPoly]]) -> int:
    minors = plucker_minors(rows)
    if not minors:
        raise ValueError("parametrized matrix is rank deficient for every t")
    degrees = {m.total_degree() for m in minors}
    if len(degrees) != 1 or not all(m.is_homogeneous() for m in minors):
        raise ValueError("maximal minors are not forms of one common degree")
    return degrees.pop() - binary_forms_gcd_degree(minors)


def plucker_degree(spec: GrassCurveSpec, factor: int = 1) -> int:
    """Degree of the curve under the Pluecker embedding of one Grassmannian factor."""
    _, rows = curve_matrix(spec, factor)
    return plucker_degree_of_rows(rows)


def plucker_degrees(spec: GrassCurveSpec) -> list[int]:
    return [plucker_degree(spec, m) for m in range(1, spec.factors + 1)]


# ---------------------------------------------------------------------------
# fibers over F_p points of the Grassmannian


@dataclass(frozen=True)
class GrassPointFq:
    """A (k+1)-dimensional space of degree-delta forms on P^N over F_p.

    Columns of ``matrix`` follow ``monomials(N + 1, delta)``; the stored
    matrix is the reduced row echelon form of the input.
    """

    p: int
    N: int
    delta: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        width = comb(self.N + self.delta, self.delta)
        rows = [tuple(int(x) % self.p for x in r) for r in self.matrix]
        if not rows or any(len(r) != width for r in rows):
            raise ValueError(f"each row needs {width} entries (degree-{self.delta} monomials)")
        reduced, _ = rref_mod(rows, self.p)
        if len(reduced) != len(rows):
            raise ValueError("matrix does not have full row rank over F_p")
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in reduced))

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return monomials(self.N + 1, self.delta)

    def forms(self) -> list[dict[tuple[int, ...], int]]:
        cols = self.columns
        return [{cols[j]: v for j, v in enumerate(row) if v} for row in self.matrix]


@dataclass
class FiberResult:
    status: str  # "finite" | "positive_dim" | "unknown"
    count: int | None
    exact: bool
    method: str
    counts: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "count": self.count,
            "exact": self.exact,
            "heuristic": not self.exact,
            "method": self.method,
            "counts": dict(self.counts),
        }


def _num_projective_points(dim: int, q: int) -> int:
    return (q ** (dim + 1) - 1) // (q - 1)


def fiber_finite(point: GrassPointFq, J: Sequence[int], budget: int = 10**6) -> FiberResult:
    """Is the common zero set of the forms, inside ``{z_j = 0 : j in J}``, finite?

    delta = 1 is decided exactly by a rank computation.  For delta >= 2 the
    zeros are counted over F_p and F_{p^2}; more than ``delta^m`` zeros in the
    m-dimensional coordinate subspace forces a positive-dimensional fiber
    (refined Bezout), equal counts over both fields are reported as a
    heuristic ``finite``, and anything else is ``unknown``.
    """
    N, p = point.N, point.p
    J = sorted(set(J))
    if any(not 0 <= j <= N for j in J):
        raise ValueError(f"J must be a subset of 0..{N}")
    free = [j for j in range(N + 1) if j not in J]
    m = len(free) - 1
    if m < 0:
        return FiberResult("finite", 0, True, "empty coordinate subspace")
    if point.delta == 1:
        rows = [list(r) for r in point.matrix]
        rows += [[int(i == j) for i in range(N + 1)] for j in J]
        dim = N - rank_mod(rows, p)
        if dim < 0:
            return FiberResult("finite", 0, True, "linear rank")
        if dim == 0:
            return FiberResult("finite", 1, True, "linear rank")
        return FiberResult("positive_dim", None, True, "linear rank", {"dimension": dim})

    if _num_projective_points(m, p) > budget:
        raise ValueError("enumeration budget exceeded over F_p")
    forms = [{tuple(e[j] for j in free): c for e, c in f.items() if all(e[j] == 0 for j in J)} for f in point.forms()]
    counts = {}
    counts[p] = sum(
        1 for pt in projective_points(m, p) if all(eval_mod(f, pt, p) == 0 for f in forms)
    )
    if _num_projective_points(m, p * p) <= budget and p > 2:
        counts[p * p] = sum(
            1 for pt in projective_points_gf2(m, p) if all(eval_gf2(f, pt).is_zero() for f in forms)
        )
    bezout = point.delta**m
    top = max(counts.values())
    if top > bezout:
        return FiberResult("positive_dim", None, True, f"more than {bezout} zeros", counts)
    if p * p in counts and counts[p * p] == counts[p]:
        return FiberResult("finite", counts[p], False, "stable point count over F_p, F_p^2", counts)
    return FiberResult("unknown", None, False, "point counts inconclusive", counts)
