import random

import pytest
from hypothesis import given

from conftest import x
from strategies import seeds
from hyperjet.algebra import CurveGerm, MultiPoly, ReparamGerm, TruncatedSeries, series_derivative
from hyperjet.jets import (
    INHOMOGENEOUS,
    JetPoly,
    d_pow,
    derive,
    eval_on_germ,
    jet_monomials,
    weighted_degree,
)
from hyperjet.samples import random_germ, random_jetpoly, random_poly


def z(i, j, n=1, k=2):
    return JetPoly.variable(i, j, n, k)


class TestWeightedDegree:
    def test_first_derivative(self):
        assert weighted_degree(z(0, 1)) == 1

    def test_mixed_monomial(self):
        assert weighted_degree(z(0, 0) * z(0, 2) ** 2) == 4

    def test_inhomogeneous(self):
        assert weighted_degree(z(0, 1) + z(0, 2)) == INHOMOGENEOUS

    def test_coordinate_functions_have_weight_zero(self):
        q = JetPoly.from_coordinate_poly(x(0, 2) ** 3 + x(1, 2))
        assert weighted_degree(q) == 0


class TestDerive:
    def test_coordinate(self):
        assert derive(z(0, 0, 1, 0)) == JetPoly.variable(0, 1, 1, 1)

    def test_leibniz_example(self):
        q = z(0, 0, 2, 0) * z(1, 0, 2, 0)
        expected = z(0, 1, 2, 1) * z(1, 0, 2, 1) + z(0, 0, 2, 1) * z(1, 1, 2, 1)
        assert derive(q) == expected

    def test_second_derivative_of_square(self):
        expected = 2 * z(0, 1) ** 2 + 2 * z(0, 0) * z(0, 2)
        assert derive(derive(z(0, 0, 1, 0) ** 2)) == expected

    def test_raises_order(self):
        assert derive(z(0, 2)).k == 3

    def test_constants_vanish(self):
        assert derive(JetPoly.const(7, 2, 1)).is_zero()

    @given(seeds)
    def test_leibniz_rule(self, seed):
        rng = random.Random(seed)
        n, k = rng.randint(1, 3), rng.randint(0, 2)
        p, q = random_jetpoly(rng, n, k), random_jetpoly(rng, n, k)
        assert derive(p * q) == derive(p) * q + p * derive(q)

    @given(seeds)
    def test_weight_shift(self, seed):
        rng = random.Random(seed)
        n, k = rng.randint(1, 2), rng.randint(0, 2)
        mono = random_jetpoly(rng, n, k, max_terms=1)
        w = weighted_degree(mono)
        dq = derive(mono)
        if not dq.is_zero():
            assert weighted_degree(dq) == w + 1

    @given(seeds)
    def test_series_oracle(self, seed):
        rng = random.Random(seed)
        n, k, order = rng.randint(1, 3), rng.randint(0, 3), 3
        q = random_jetpoly(rng, n, k)
        f = random_germ(rng, n, k + order + 1)
        lhs = eval_on_germ(derive(q), f, order)
        rhs = series_derivative(eval_on_germ(q, f, order + 1))
        assert lhs == rhs


class TestDPow:
    def test_first(self):
        assert d_pow(x(0, 1), 1) == JetPoly.variable(0, 1, 1, 1)

    def test_square(self):
        assert d_pow(x(0, 1) ** 2, 2) == 2 * z(0, 1) ** 2 + 2 * z(0, 0) * z(0, 2)

    def test_constant(self):
        for j in range(1, 4):
            assert d_pow(MultiPoly.const(5, 2), j).is_zero()

    def test_order_bound(self):
        with pytest.raises(ValueError):
            d_pow(x(0, 1), 3, max_order=2)
        with pytest.raises(ValueError):
            d_pow(x(0, 1), -1)

    def test_integer_coefficients(self):
        # D^j of an integer polynomial has integer coefficients
        rng = random.Random(5)
        for _ in range(30):
            s = random_poly(rng, 2, max_deg=3)
            q = d_pow(s, rng.randint(0, 3))
            assert all(c.denominator == 1 for c in q.terms.values())

    @given(seeds)
    def test_scaling_equivariance(self, seed):
        # evaluating D^j s on f(lam t) multiplies the t^0 value by lam^j
        rng = random.Random(seed)
        j = rng.randint(0, 3)
        s = random_poly(rng, 2)
        f = random_germ(rng, 2, j + 1)
        lam = rng.choice([-3, -2, 2, 3])
        q = d_pow(s, j)
        g = f.reparametrize(ReparamGerm.scaling(lam, f.order))
        assert eval_on_germ(q, g, 0).coeffs[0] == lam**j * eval_on_germ(q, f, 0).coeffs[0]


class TestEvalOnGerm:
    def test_derivative(self):
        f = CurveGerm.from_coeffs([[0, 0, 1, 0]], 3)
        assert eval_on_germ(JetPoly.variable(0, 1, 1, 1), f, 2) == TruncatedSeries([0, 2, 0])

    def test_mixed(self):
        f = CurveGerm.from_coeffs([[0, 1, 0, 0, 0], [0, 0, 0, 1, 0]], 4)
        q = jet_monomials(2, 1, {((0, 0), (1, 1)): 1})
        assert eval_on_germ(q, f, 3) == TruncatedSeries([0, 0, 0, 3])

    def test_constant(self):
        f = CurveGerm.from_coeffs([[2, 1, 1]], 2)
        assert eval_on_germ(JetPoly.const(1, 1, 0), f, 2) == TruncatedSeries([1, 0, 0])

    def test_insufficient_germ_order(self):
        f = CurveGerm.from_coeffs([[0, 1]], 1)
        with pytest.raises(ValueError):
            eval_on_germ(JetPoly.variable(0, 1, 1, 1), f, 1)

    def test_component_mismatch(self):
        f = CurveGerm.from_coeffs([[0, 1, 0]], 2)
        with pytest.raises(ValueError):
            eval_on_germ(JetPoly.variable(0, 0, 2, 0), f, 1)


class TestJetPoly:
    def test_variable_out_of_range(self):
        with pytest.raises(IndexError):
            JetPoly.variable(0, 3, 1, 2)

    def test_order_alignment(self):
        a = JetPoly.variable(0, 1, 1, 1)
        b = JetPoly.variable(0, 2, 1, 2)
        assert (a + b).k == 2
        assert a.raise_order(3) == a

    def test_names(self):
        assert "z1''" in repr(z(0, 2))
