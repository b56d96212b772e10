import json
import random
from fractions import Fraction

import pytest
from hypothesis import given

from strategies import polys, seeds, series
from hyperjet.formats import (
    FormatError,
    dumps,
    fermat_from_doc,
    grass_point_from_doc,
    jet_from_doc,
    jet_to_doc,
    load,
    poly_from_doc,
    poly_to_doc,
    scalar_doc,
    scalar_from_doc,
    series_from_doc,
    series_to_doc,
    wronskian_input_from_doc,
)
from hyperjet.samples import random_jetpoly


def through_json(doc):
    return json.loads(dumps(doc))


class TestScalars:
    def test_rational(self):
        assert scalar_doc(Fraction(-3, 4)) == {"num": "-3", "den": "4"}
        assert scalar_from_doc({"num": "-3", "den": "4"}) == Fraction(-3, 4)

    def test_big_integers_exact(self):
        big = 10**60 + 7
        assert scalar_from_doc(through_json(scalar_doc(Fraction(big)))) == big

    def test_shorthand(self):
        assert scalar_from_doc(5) == 5
        assert scalar_from_doc("2/3") == Fraction(2, 3)

    def test_bad(self):
        with pytest.raises(FormatError):
            scalar_from_doc({"num": "x"})
        with pytest.raises(FormatError):
            scalar_from_doc({"num": "1", "den": "0"})


class TestRoundTrips:
    @given(polys(3))
    def test_poly(self, p):
        assert poly_from_doc(through_json(poly_to_doc(p))) == p

    @given(series(4))
    def test_series(self, s):
        assert series_from_doc(through_json(series_to_doc(s))) == s

    @given(seeds)
    def test_jet(self, seed):
        q = random_jetpoly(random.Random(seed), 2, 2)
        back = jet_from_doc(through_json(jet_to_doc(q)))
        assert back == q and back.k == q.k

    def test_poly_missing_field(self):
        with pytest.raises(FormatError):
            poly_from_doc({"terms": []})

    def test_poly_wrong_exponent_length(self):
        with pytest.raises(ValueError):
            poly_from_doc({"vars": 2, "terms": [{"exp": [1], "num": "1"}]})


class TestSpecs:
    def test_wronskian_input(self):
        doc = {"k": 1, "g": [{"vars": 1, "terms": [{"exp": [0], "num": "1"}]}, {"vars": 1, "terms": [{"exp": [1], "num": "1"}]}]}
        inp = wronskian_input_from_doc(doc)
        assert inp.k == 1 and inp.n == 1

    def test_fermat_keyed(self):
        doc = {"n": 1, "eps": 0, "delta": 1, "r": 1, "k": 1, "coeffs": {"1,0": {"vars": 2, "terms": [{"exp": [0, 0], "num": "2"}]}}}
        spec, coeffs = fermat_from_doc(doc)
        assert coeffs[(1, 0)].constant_term() == 2
        assert coeffs[(0, 1)].is_zero()

    def test_fermat_bad_index(self):
        doc = {"n": 1, "eps": 0, "delta": 1, "r": 1, "k": 1, "coeffs": {"2,0": {"vars": 2, "terms": []}}}
        with pytest.raises(FormatError):
            fermat_from_doc(doc)

    def test_fermat_random_is_seeded(self):
        doc = {"n": 2, "eps": 1, "delta": 1, "r": 1, "k": 1, "coeffs": "random", "seed": 3}
        assert fermat_from_doc(doc)[1] == fermat_from_doc(doc)[1]

    def test_grass_point(self):
        pt = grass_point_from_doc({"N": 2, "delta": 1, "rows": [[1, 0, 0]]}, 5)
        assert pt.matrix == ((1, 0, 0),)

    def test_load_errors(self, tmp_path):
        with pytest.raises(FormatError):
            load(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        with pytest.raises(FormatError):
            load(bad)

    def test_dumps_sorted(self):
        assert dumps({"b": 1, "a": Fraction(1, 2)}).index('"a"') < dumps({"b": 1, "a": 1}).index('"b"')
