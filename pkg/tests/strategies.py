"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from motivic_hilb.ring import MotWeight
from motivic_hilb.series import MOTIVIC, TruncSeries

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def weights(draw, span=4, max_terms=4):
    terms = draw(st.dictionaries(st.integers(-span, span), small_ints, max_size=max_terms))
    return MotWeight(terms)


@st.composite
def nonzero_weights(draw, span=3, max_terms=3):
    w = draw(weights(span, max_terms))
    if w.is_zero():
        w = MotWeight.u(draw(st.integers(-span, span)))
    return w


@st.composite
def series(draw, order=None, constant=0, span=3):
    n = draw(st.integers(1, 6)) if order is None else order
    coeffs = [MotWeight(constant)] + [draw(weights(span, 3)) for _ in range(n)]
    return TruncSeries(coeffs, MOTIVIC)
