"""Seeded random instances for the property suites (small integer data)."""

from __future__ import annotations

import random

from .algebra import CurveGerm, MultiPoly, ReparamGerm, TruncatedSeries
from .jets import JetPoly
from .wronskian import WronskianInput


def random_poly(rng: random.Random, num_vars: int, max_deg: int = 2, max_terms: int = 3, box: int = 5) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = [0] * num_vars
        for _ in range(rng.randint(0, max_deg)):
            exp[rng.randrange(num_vars)] += 1
        terms[tuple(exp)] = rng.randint(-box, box)
    return MultiPoly(num_vars, terms)


def random_jetpoly(rng: random.Random, n: int, k: int, max_terms: int = 3, max_deg: int = 3) -> JetPoly:
    poly = random_poly(rng, n * (k + 1), max_deg=max_deg, max_terms=max_terms)
    return JetPoly(n, k, poly)


def random_series(rng: random.Random, order: int, box: int = 4, constant: bool = True) -> TruncatedSeries:
    coeffs = [rng.randint(-box, box) for _ in range(order + 1)]
    if not constant:
        coeffs[0] = 0
    return TruncatedSeries(coeffs, order)


def random_germ(rng: random.Random, n: int, order: int, box: int = 4) -> CurveGerm:
    return CurveGerm([random_series(rng, order, box) for _ in range(n)])


def random_reparam(rng: random.Random, order: int, box: int = 3) -> ReparamGerm:
    coeffs = [0] + [rng.randint(-box, box) for _ in range(order)]
    if coeffs[1] == 0:
        coeffs[1] = rng.choice([-2, -1, 1, 2, 3])
    return ReparamGerm(coeffs, order)


def random_wronskian_input(rng: random.Random, n: int, k: int) -> WronskianInput:
    return WronskianInput(k, tuple(random_poly(rng, n) for _ in range(k + 1)))


def random_unit_at(rng: random.Random, point, max_deg: int = 2) -> MultiPoly:
    """Random polynomial not vanishing at ``point``."""
    n = len(point)
    while True:
        h = random_poly(rng, n, max_deg=max_deg) + rng.randint(1, 4)
        if h.evaluate(point) != 0:
            return h


def random_high_order_perturbation(rng: random.Random, point, order: int) -> MultiPoly:
    """Random polynomial vanishing to order >= ``order`` at ``point``."""
    n = len(point)
    h = random_poly(rng, n, max_deg=1, max_terms=2) + rng.randint(1, 3)
    for _ in range(order):
        lin = MultiPoly.zero(n)
        while lin.is_zero():
            lin = MultiPoly(n, {tuple(int(i == j) for i in range(n)): rng.randint(-3, 3) for j in range(n)})
        shift = -lin.evaluate(point)
        h = h * (lin + shift)
    return h
