import random

import pytest
from hypothesis import given

from conftest import x
from strategies import seeds
from hyperjet.algebra import CurveGerm, MultiPoly, ReparamGerm, TruncatedSeries
from hyperjet.jets import JetPoly, eval_on_germ, weighted_degree
from hyperjet.samples import (
    random_germ,
    random_high_order_perturbation,
    random_reparam,
    random_unit_at,
    random_wronskian_input,
)
from hyperjet.wronskian import (
    WronskianInput,
    check_jet_dependence,
    check_reparam_invariance,
    check_trivialization,
    jet_truncate,
    taylor_jet_oracle,
    vanishing_order,
    wronskian,
    wronskian_series_oracle,
)

ONE = MultiPoly.const(1, 1)
Z = x(0, 1)


class TestWronskian:
    def test_order_one(self):
        assert wronskian(WronskianInput(1, (ONE, Z))) == JetPoly.variable(0, 1, 1, 1)

    def test_repeated_entry(self):
        assert wronskian(WronskianInput(2, (Z, Z**2, Z))).is_zero()

    def test_order_two(self):
        w = wronskian(WronskianInput(2, (ONE, Z, Z**2)))
        assert w == 2 * JetPoly.variable(0, 1, 1, 2) ** 3

    def test_weight(self):
        rng = random.Random(3)
        for k in range(4):
            inp = random_wronskian_input(rng, 2, k)
            w = wronskian(inp)
            if not w.is_zero():
                assert weighted_degree(w) == inp.weight

    def test_not_vacuous(self):
        rng = random.Random(11)
        nonzero = sum(not wronskian(random_wronskian_input(rng, 2, 2)).is_zero() for _ in range(20))
        assert nonzero >= 10

    def test_input_validation(self):
        with pytest.raises(ValueError):
            WronskianInput(1, (Z,))
        with pytest.raises(ValueError):
            WronskianInput(1, (Z, x(0, 2)))

    @given(seeds)
    def test_alternating(self, seed):
        rng = random.Random(seed)
        inp = random_wronskian_input(rng, 2, rng.randint(1, 2))
        g = list(inp.g)
        g[0], g[1] = g[1], g[0]
        assert wronskian(WronskianInput(inp.k, tuple(g))) == -wronskian(inp)

    @given(seeds)
    def test_multilinear(self, seed):
        rng = random.Random(seed)
        inp = random_wronskian_input(rng, 2, rng.randint(1, 2))
        h = random_wronskian_input(rng, 2, 0).g[0]
        a = rng.randint(-3, 3)
        combined = wronskian(inp.replace(0, inp.g[0] * a + h))
        assert combined == a * wronskian(inp) + wronskian(inp.replace(0, h))


class TestSeriesOracle:
    def test_order_one(self):
        f = CurveGerm.from_coeffs([[0, 0, 1, 0, 0]], 4)
        assert wronskian_series_oracle(WronskianInput(1, (ONE, Z)), f, 2) == TruncatedSeries([0, 2, 0])

    def test_repeated(self):
        f = CurveGerm.from_coeffs([[1, 2, 3, 4]], 3)
        out = wronskian_series_oracle(WronskianInput(1, (Z, Z)), f, 2)
        assert out == TruncatedSeries([0, 0, 0])

    def test_order_two_on_identity(self):
        f = CurveGerm.from_coeffs([[0, 1, 0, 0, 0]], 4)
        out = wronskian_series_oracle(WronskianInput(2, (ONE, Z, Z**2)), f, 2)
        assert out == TruncatedSeries([2, 0, 0])

    @given(seeds)
    def test_matches_jet_evaluation(self, seed):
        rng = random.Random(seed)
        n, k, order = rng.randint(1, 3), rng.randint(0, 3), 2
        inp = random_wronskian_input(rng, n, k)
        f = random_germ(rng, n, k + order)
        assert eval_on_germ(wronskian(inp), f, order) == wronskian_series_oracle(inp, f, order)


class TestReparamInvariance:
    def test_identity(self):
        rng = random.Random(0)
        inp = random_wronskian_input(rng, 2, 2)
        f = random_germ(rng, 2, 2)
        assert check_reparam_invariance(inp, f, ReparamGerm.identity(2)).equal

    def test_scaling_example(self):
        f = CurveGerm.from_coeffs([[0, 1]], 1)
        report = check_reparam_invariance(WronskianInput(1, (ONE, Z)), f, ReparamGerm([0, 3]))
        assert (report.lhs, report.rhs) == (3, 3)

    @given(seeds)
    def test_random(self, seed):
        rng = random.Random(seed)
        k = rng.randint(0, 3)
        order = max(k, 1)
        inp = random_wronskian_input(rng, 2, k)
        report = check_reparam_invariance(inp, random_germ(rng, 2, order), random_reparam(rng, order))
        assert report.equal


class TestJetTruncate:
    def test_high_order_zero(self):
        assert jet_truncate(Z**3, [0], 2).local.is_zero()

    def test_taylor_square(self):
        jet = jet_truncate(Z**2, [1], 2)
        assert jet.local == MultiPoly(1, {(0,): 1, (1,): 2, (2,): 1})
        assert jet.to_global() == Z**2

    def test_constant(self):
        c = MultiPoly.const(7, 2)
        assert jet_truncate(c, [3, -1], 4).local == c

    @given(seeds)
    def test_matches_taylor_oracle(self, seed):
        rng = random.Random(seed)
        g = random_wronskian_input(rng, 2, 0).g[0] * random_wronskian_input(rng, 2, 0).g[0]
        pt = [rng.randint(-3, 3), rng.randint(-3, 3)]
        k = rng.randint(0, 4)
        assert jet_truncate(g, pt, k).local == taylor_jet_oracle(g, pt, k)


class TestJetDependence:
    def test_zero_perturbation(self):
        inp = WronskianInput(1, (ONE, Z))
        assert check_jet_dependence(inp, MultiPoly.zero(1), [0]).equal

    def test_cubic_at_origin(self):
        inp = WronskianInput(1, (Z, Z**2))
        assert check_jet_dependence(inp, Z**3, [0]).equal

    def test_shifted_point(self):
        rng = random.Random(4)
        inp = random_wronskian_input(rng, 2, 2)
        h = (x(0, 2) - 1) ** 3
        assert vanishing_order(h, [1, 0]) == 3
        assert check_jet_dependence(inp, h, [1, 0]).equal

    def test_rejects_low_order_perturbation(self):
        with pytest.raises(ValueError):
            check_jet_dependence(WronskianInput(2, (ONE, Z, Z**3)), Z**2, [0])

    @given(seeds)
    def test_random(self, seed):
        rng = random.Random(seed)
        k = rng.randint(0, 2)
        inp = random_wronskian_input(rng, 2, k)
        pt = [rng.randint(-2, 2), rng.randint(-2, 2)]
        h = random_high_order_perturbation(rng, pt, k + 1)
        assert check_jet_dependence(inp, h, pt, trials=3, seed=seed).equal


class TestTrivialization:
    def test_unit_at_base_required(self):
        f = CurveGerm.from_coeffs([[0, 1]], 1)
        with pytest.raises(ValueError):
            check_trivialization(WronskianInput(1, (ONE, Z)), Z, f)

    @given(seeds)
    def test_random(self, seed):
        rng = random.Random(seed)
        k = rng.randint(0, 2)
        inp = random_wronskian_input(rng, 2, k)
        f = random_germ(rng, 2, k)
        unit = random_unit_at(rng, f.base_point())
        lhs, rhs = check_trivialization(inp, unit, f)
        assert lhs == rhs
