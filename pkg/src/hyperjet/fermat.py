"""Fermat-type sections ``sigma(a) = sum_{|I| = delta} a_I tau^{(r+k) I}`` on P^n.

Polynomials live in the ``n + 1`` homogeneous coordinates ``z_0..z_n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .algebra import MultiPoly, monomials
from .bounds import KJetVerdict, kjet_check
from .ffield import eval_mod, is_prime, rank_mod, reduce_poly


def coordinate_forms(n: int) -> tuple[MultiPoly, ...]:
    return tuple(MultiPoly.var(j, n + 1) for j in range(n + 1))


def _rank_q(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def in_general_position(tau: Sequence[MultiPoly]) -> bool:
    """Every n-subset independent, and the whole family has no common zero.

    For n + 1 linear forms on P^n both reduce to: the (n+1)x(n+1) coefficient
    matrix is invertible.  The subset check is kept as the literal statement.
    """
    nv = tau[0].num_vars
    rows = [[t.coefficient(tuple(int(i == j) for i in range(nv))) for j in range(nv)] for t in tau]
    n = len(tau) - 1
    if _rank_q(rows) != len(tau):
        return False
    return all(_rank_q([rows[i] for i in sub]) == n for sub in combinations(range(len(tau)), n))


@dataclass(frozen=True)
class FermatSpec:
    n: int
    eps: int
    delta: int
    r: int
    k: int
    tau: tuple[MultiPoly, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if min(self.eps, self.delta, self.k) < 0:
            raise ValueError("eps, delta, k must be non-negative")
        if self.r < 1:
            raise ValueError("r must be at least 1")
        tau = tuple(self.tau) or coordinate_forms(self.n)
        object.__setattr__(self, "tau", tau)
        if len(tau) != self.n + 1:
            raise ValueError(f"need n + 1 = {self.n + 1} forms tau, got {len(tau)}")
        for t in tau:
            if t.num_vars != self.n + 1 or not t.is_homogeneous() or t.total_degree() != 1:
                raise ValueError(f"tau entry {t.to_str()} is not a linear form in n + 1 variables")
        if not in_general_position(tau):
            raise ValueError("tau forms are not in general position")

    @property
    def degree(self) -> int:
        return self.eps + (self.r + self.k) * self.delta

    def index_set(self) -> list[tuple[int, ...]]:
        return monomials(self.n + 1, self.delta)


FermatCoeffs = dict  # multi-index tuple -> MultiPoly homogeneous of degree eps


def _check_coeffs(spec: FermatSpec, coeffs: dict) -> None:
    expected = set(spec.index_set())
    got = set(map(tuple, coeffs))
    if got != expected:
        missing, extra = sorted(expected - got), sorted(got - expected)
        raise ValueError(f"coefficient index set mismatch; missing={missing} extra={extra}")
    for idx, a in coeffs.items():
        if a.num_vars != spec.n + 1:
            raise ValueError(f"coefficient {idx} has wrong variable count")
        if not a.is_zero() and (not a.is_homogeneous() or a.total_degree() != spec.eps):
            raise ValueError(f"coefficient {idx} is not homogeneous of degree {spec.eps}")


def zero_coeffs(spec: FermatSpec) -> dict:
    return {I: MultiPoly.zero(spec.n + 1) for I in spec.index_set()}


def diagonal_coeffs(spec: FermatSpec) -> dict:
    """``a_I = 1`` on the pure powers ``I = delta e_j`` (needs ``eps = 0``)."""
    if spec.eps != 0:
        raise ValueError("diagonal coefficients need eps = 0")
    one = MultiPoly.const(1, spec.n + 1)
    coeffs = zero_coeffs(spec)
    for I in coeffs:
        if max(I) == spec.delta:
            coeffs[I] = one
    return coeffs


def random_coeffs(spec: FermatSpec, rng: random.Random, box: int = 9) -> dict:
    """Coefficients drawn uniformly from integers in [-box, box]."""
    nv = spec.n + 1
    mons = monomials(nv, spec.eps)
    return {
        I: MultiPoly(nv, {m: rng.randint(-box, box) for m in mons}) for I in spec.index_set()
    }


def build_section(spec: FermatSpec, coeffs: dict) -> MultiPoly:
    _check_coeffs(spec, coeffs)
    e = spec.r + spec.k
    out = MultiPoly.zero(spec.n + 1)
    powers: dict[tuple[int, int], MultiPoly] = {}
    for idx, a in coeffs.items():
        if a.is_zero():
            continue
        term = a
        for j, i_j in enumerate(idx):
            if i_j:
                key = (j, e * i_j)
                if key not in powers:
                    powers[key] = spec.tau[j] ** (e * i_j)
                term = term * powers[key]
        out = out + term
    return out


@dataclass
class FamilyReport:
    sections: list[MultiPoly]
    degrees: list[int]
    hypotheses: KJetVerdict | None
    note: str = ""


def build_family(specs: Sequence[FermatSpec], coeffs: Sequence[dict]) -> FamilyReport:
    if not specs:
        raise ValueError("at least one spec is required")
    if len(specs) != len(coeffs):
        raise ValueError("one coefficient map per spec is required")
    n = specs[0].n
    if any(s.n != n for s in specs):
        raise ValueError("all specs must share the ambient dimension n")
    sections = [build_section(s, a) for s, a in zip(specs, coeffs)]
    c = len(specs)
    hyp, note = None, ""
    if not 1 <= c <= n - 1:
        note = f"hypothesis check needs 1 <= c <= n - 1 (c={c}, n={n})"
    elif len({s.r for s in specs}) != 1:
        note = "hypothesis check needs one shared r"
    else:
        hyp = kjet_check(n, c, [s.eps for s in specs], [s.delta for s in specs], specs[0].r)
        if any(s.k != hyp.k for s in specs):
            note = f"spec k differs from ceil(n/c) - 1 = {hyp.k}"
    return FamilyReport(sections, [s.degree for s in specs], hyp, note)


@dataclass
class ProbeReport:
    p: int
    seed: int
    tested: int
    failures: list[tuple[int, ...]] = field(default_factory=list)
    attempts: int = 0


def _line_points(free: list[int], solve_at: int, p: int) -> list[list[int]]:
    return [free[:solve_at] + [v] + free[solve_at:] for v in range(p)]


def smoothness_probe(
    sections: Sequence[MultiPoly],
    trials: int,
    p: int,
    seed: int = 0,
    max_attempts: int | None = None,
) -> ProbeReport:
    """Sample zeros of all sections over F_p and test the Jacobian has rank c.

    Zeros are found by fixing all coordinates but one at random and solving for
    the last one by enumerating F_p; candidates are then filtered by the
    remaining sections (rejection).  Each failure records the witness point.
    """
    if not sections:
        raise ValueError("need at least one section")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    nv = sections[0].num_vars
    if any(s.num_vars != nv for s in sections):
        raise ValueError("sections must share a variable count")
    reduced = [reduce_poly(s, p) for s in sections]
    partials = [[reduce_poly(s.diff(j), p) for j in range(nv)] for s in sections]
    c = len(sections)
    rng = random.Random(seed)
    report = ProbeReport(p, seed, 0)
    if trials <= 0:
        return report
    max_attempts = max_attempts or 200 * trials
    seen: set[tuple[int, ...]] = set()
    while report.tested < trials and report.attempts < max_attempts:
        report.attempts += 1
        solve_at = rng.randrange(nv)
        free = [rng.randrange(p) for _ in range(nv - 1)]
        for pt in _line_points(free, solve_at, p):
            if not any(pt):
                continue
            if any(eval_mod(f, pt, p) for f in reduced):
                continue
            jac = [[eval_mod(d, pt, p) for d in row] for row in partials]
            report.tested += 1
            if rank_mod(jac, p) < c:
                key = _normalize(pt, p)
                if key not in seen:
                    seen.add(key)
                    report.failures.append(key)
            if report.tested >= trials:
                break
    return report


def _normalize(pt: Sequence[int], p: int) -> tuple[int, ...]:
    lead = max(i for i, x in enumerate(pt) if x)
    inv = pow(pt[lead], -1, p)
    return tuple(x * inv % p for x in pt)

