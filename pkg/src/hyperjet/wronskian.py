"""Wronskians of coordinate polynomials as invariant jet differentials.

``wronskian(g_0..g_k)`` is the determinant of the matrix whose row ``i`` holds
``D^i g_0, ..., D^i g_k``.  The module also provides an independent
evaluation route (the classical Wronskian of the composed series), the
reparametrization and trivialization checks, and the k-jet truncation of a
section at a point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .algebra import (
    CurveGerm,
    MultiPoly,
    ReparamGerm,
    TruncatedSeries,
    as_scalar,
    cofactor_det,
    monomials_upto,
    poly_eval_germ,
    series_derivative,
)
from .jets import JetPoly, d_pow, eval_on_germ


@dataclass(frozen=True)
class WronskianInput:
    k: int
    g: tuple[MultiPoly, ...]

    def __post_init__(self):
        g = tuple(self.g)
        object.__setattr__(self, "g", g)
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if len(g) != self.k + 1:
            raise ValueError(f"need exactly k + 1 = {self.k + 1} functions, got {len(g)}")
        if len({p.num_vars for p in g}) != 1:
            raise ValueError("all functions must share one variable count")

    @property
    def n(self) -> int:
        return self.g[0].num_vars

    @property
    def weight(self) -> int:
        return self.k * (self.k + 1) // 2

    def replace(self, index: int, poly: MultiPoly) -> "WronskianInput":
        g = list(self.g)
        g[index] = poly
        return WronskianInput(self.k, tuple(g))


def wronskian(inp: WronskianInput) -> JetPoly:
    k = inp.k
    rows = [[d_pow(g, i).raise_order(k) for g in inp.g] for i in range(k + 1)]
    return cofactor_det(rows, JetPoly(inp.n, k))


def wronskian_series_oracle(inp: WronskianInput, f: CurveGerm, order: int) -> TruncatedSeries:
    """Classical Wronskian of the univariate series ``g_j(f(t))``."""
    k = inp.k
    if f.order < k + order:
        raise ValueError(f"germ order {f.order} too small: need at least k + K = {k + order}")
    columns = []
    for g in inp.g:
        s = poly_eval_germ(g, f)
        col = []
        for _ in range(k + 1):
            col.append(s.truncate(order))
            if s.order > 0:
                s = series_derivative(s)
        columns.append(col)
    matrix = [[columns[j][i] for j in range(k + 1)] for i in range(k + 1)]
    return cofactor_det(matrix, TruncatedSeries.const(0, order))


def value_at_zero(q: JetPoly, f: CurveGerm) -> Fraction:
    return eval_on_germ(q, f, 0).coeffs[0]


@dataclass(frozen=True)
class InvarianceReport:
    lhs: Fraction
    rhs: Fraction
    weight: int
    phi_prime_0: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def check_reparam_invariance(
    inp: WronskianInput, f: CurveGerm, phi: ReparamGerm
) -> InvarianceReport:
    if not isinstance(phi, ReparamGerm):
        phi = ReparamGerm(phi.coeffs, phi.order)
    if phi.order != f.order:
        raise ValueError("germ and reparametrization must share one truncation order")
    w = wronskian(inp)
    lam = phi.derivative_at_zero()
    lhs = value_at_zero(w, f.reparametrize(phi))
    rhs = lam**inp.weight * value_at_zero(w, f)
    return InvarianceReport(lhs, rhs, inp.weight, lam)


@dataclass(frozen=True)
class JetOfSection:
    """Taylor truncation of a polynomial at ``point`` through total order ``k``.

    ``local`` is written in the translated variables ``w = z - point``.
    """

    point: tuple[Fraction, ...]
    k: int
    local: MultiPoly

    def to_global(self) -> MultiPoly:
        return self.local.shift([-x for x in self.point])


def jet_truncate(g: MultiPoly, x: Sequence, k: int) -> JetOfSection:
    if len(x) != g.num_vars:
        raise ValueError("point dimension does not match variable count")
    point = tuple(as_scalar(v) for v in x)
    return JetOfSection(point, k, g.shift(point).truncate_degree(k))


def taylor_jet_oracle(g: MultiPoly, x: Sequence, k: int) -> MultiPoly:
    """Sum of ``d^gamma g(x) / gamma! * w^gamma`` over ``|gamma| <= k``."""
    n = g.num_vars
    terms = {}
    for gamma in monomials_upto(n, k):
        value = g.diff_multi(gamma).evaluate(x)
        if value:
            terms[gamma] = value / prod(factorial(a) for a in gamma)
    return MultiPoly(n, terms)


def vanishing_order(h: MultiPoly, x: Sequence) -> int | None:
    """Order of vanishing of ``h`` at ``x``; ``None`` for the zero polynomial."""
    if h.is_zero():
        return None
    return h.shift(x).min_degree()


@dataclass
class JetDependenceReport:
    point: tuple[Fraction, ...]
    samples: list[tuple[Fraction, Fraction]] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return all(a == b for a, b in self.samples)


def random_germ_at(
    point: Sequence, order: int, rng: random.Random, box: int = 5
) -> CurveGerm:
    """Random integer-coefficient germ with ``f(0) = point``."""
    rows = []
    for x in point:
        rows.append([as_scalar(x)] + [rng.randint(-box, box) for _ in range(order)])
    return CurveGerm.from_coeffs(rows, order)


def check_jet_dependence(
    inp: WronskianInput,
    h: MultiPoly,
    x: Sequence,
    trials: int = 5,
    seed: int = 0,
) -> JetDependenceReport:
    """Adding ``h`` (vanishing to order > k at ``x``) to ``g_0`` leaves the
    Wronskian's value on germs based at ``x`` unchanged."""
    point = tuple(as_scalar(v) for v in x)
    if len(point) != inp.n:
        raise ValueError("point dimension does not match variable count")
    order = vanishing_order(h, point)
    if order is not None and order < inp.k + 1:
        raise ValueError(
            f"perturbation vanishes only to order {order} at {point}; need >= {inp.k + 1}"
        )
    rng = random.Random(seed)
    w = wronskian(inp)
    w_pert = wronskian(inp.replace(0, inp.g[0] + h))
    report = JetDependenceReport(point)
    for _ in range(trials):
        f = random_germ_at(point, inp.k, rng)
        report.samples.append((value_at_zero(w_pert, f), value_at_zero(w, f)))
    return report


def check_trivialization(
    inp: WronskianInput, unit: MultiPoly, f: CurveGerm
) -> tuple[Fraction, Fraction]:
    """Return both sides of ``W(u g_0, .., u g_k)(f)(0) = u(f(0))^(k+1) W(g)(f)(0)``."""
    u0 = unit.evaluate(f.base_point())
    if u0 == 0:
        raise ValueError("the multiplier must not vanish at the germ base point")
    scaled = WronskianInput(inp.k, tuple(unit * g for g in inp.g))
    lhs = value_at_zero(wronskian(scaled), f)
    rhs = u0 ** (inp.k + 1) * value_at_zero(wronskian(inp), f)
    return lhs, rhs
