from fractions import Fraction

from hypothesis import strategies as st

from hyperjet.algebra import MultiPoly, ReparamGerm, TruncatedSeries

small_int = st.integers(-6, 6)
small_frac = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polys(draw, num_vars: int, max_deg: int = 3, max_terms: int = 4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exp = tuple(draw(st.lists(st.integers(0, max_deg), min_size=num_vars, max_size=num_vars)))
        terms[exp] = draw(small_frac)
    return MultiPoly(num_vars, terms)


@st.composite
def series(draw, order: int, vanish: bool = False):
    coeffs = draw(st.lists(small_frac, min_size=order + 1, max_size=order + 1))
    if vanish:
        coeffs[0] = Fraction(0)
    return TruncatedSeries(coeffs, order)


@st.composite
def reparams(draw, order: int):
    coeffs = [0] + draw(st.lists(small_frac, min_size=order, max_size=order))
    if coeffs[1] == 0:
        coeffs[1] = Fraction(draw(st.sampled_from([-2, -1, 1, 2])))
    return ReparamGerm(coeffs, order)


seeds = st.integers(0, 2**32 - 1)
