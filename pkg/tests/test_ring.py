from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motivic_hilb.ring import (
    MotWeight,
    RatWeight,
    SpecializationPole,
    TruncLaurent,
    WeightDivisionError,
    adams,
    evaluate,
    expand_at_infinity,
    poly_gcd,
    rf_reduce,
)
from tests.strategies import nonzero_weights, weights

u = MotWeight.u()
L = MotWeight.L()


def test_generator_convention():
    assert L == u * u
    assert MotWeight.L(Fraction(1, 2)) == -u
    assert MotWeight.L(Fraction(3, 2)) == -(u**3)
    assert MotWeight.L(-1) == u**-2


def test_basic_products():
    assert (u**2 - 1) * (u**2 + 1) == u**4 - 1
    assert L + 0 == u**2
    assert (L - 1) * (L**2 - 1) == u**6 - u**4 - u**2 + 1


def test_half_integer_L_rejects_thirds():
    with pytest.raises(ValueError):
        MotWeight.L(Fraction(1, 3))


@given(weights(), weights(), weights())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == MotWeight()


@given(weights(), weights(), st.integers(1, 4), st.integers(1, 4))
def test_adams_is_a_composable_ring_map(a, b, k, m):
    assert adams(k, a * b) == adams(k, a) * adams(k, b)
    assert adams(k, a + b) == adams(k, a) + adams(k, b)
    assert adams(1, a) == a
    assert adams(k, adams(m, a)) == adams(k * m, a)


def test_adams_examples():
    assert adams(2, u) == u**2
    # psi_2(L^(1/2)) = psi_2(-u) = -u^2 = -L
    assert adams(2, MotWeight.L(Fraction(1, 2))) == -L
    with pytest.raises(ValueError):
        adams(0, u)


def test_adams_matches_newton_from_sigma():
    # sigma_t(L^(1/2)) = sigma_t(-u) = 1 - u t, so sigma_1 = -u and sigma_n = 0 for n >= 2.
    # Newton: psi_n = n sigma_n - sum_{i<n} psi_i sigma_(n-i).
    sig = [MotWeight(1), -u, MotWeight(), MotWeight(), MotWeight()]
    psi = [None]
    for n in range(1, 5):
        acc = sig[n] * n
        for i in range(1, n):
            acc = acc - psi[i] * sig[n - i]
        psi.append(acc)
    for n in range(1, 5):
        assert psi[n] == adams(n, -u)


def test_ratweight_normal_form():
    assert rf_reduce(L**2 - 1, L - 1) == RatWeight(L + 1)
    assert rf_reduce(L**2 - 1, L - 1).is_polynomial()
    assert rf_reduce(MotWeight(), L - 1).is_zero()
    w = rf_reduce(L**2 * (L - 1), (L - 1) ** 2)
    assert w.num == L**2 and w.den == L - 1
    # denominators are primitive with positive leading coefficient
    w = rf_reduce(MotWeight(2), 2 - 2 * L)
    assert w.den == L - 1 and w.num == MotWeight(-1)


def test_ratweight_division_by_zero():
    with pytest.raises(WeightDivisionError, match="division by zero weight"):
        RatWeight(L, MotWeight())


@given(weights(), nonzero_weights(), nonzero_weights())
def test_ratweight_cancellation(a, b, c):
    assert RatWeight(a * c, b * c) == RatWeight(a, b)
    assert RatWeight(a * c, b * c).equals_by_cross_multiplication(RatWeight(a, b))


@given(weights(), nonzero_weights(), weights(), nonzero_weights())
def test_ratweight_field_ops(a, b, c, d):
    x, y = RatWeight(a, b), RatWeight(c, d)
    assert (x + y) - y == x
    assert (x * y).equals_by_cross_multiplication(RatWeight(a * c, b * d))
    if not y.is_zero():
        assert (x / y) * y == x


@given(nonzero_weights(), nonzero_weights())
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert a.divmod(g)[1].is_zero()
    assert b.divmod(g)[1].is_zero()


def test_evaluate():
    assert evaluate(L + 1, 1) == 2
    assert evaluate(u**3, 1) == 1
    assert evaluate(RatWeight(L + 1, L + 2), 1) == Fraction(2, 3)
    with pytest.raises(SpecializationPole, match="specialization pole"):
        evaluate(RatWeight(L**2, L - 1), 1)
    with pytest.raises(SpecializationPole):
        evaluate(RatWeight(L**2, L - 1), -1)


def test_expand_at_infinity_geometric():
    floor = -8
    e = expand_at_infinity(RatWeight(L, L - 1), floor)
    assert e.terms == {-2 * j: 1 for j in range(5)}
    e = expand_at_infinity(RatWeight(1, L - 1), floor)
    assert e.terms == {-2 * j: 1 for j in range(1, 5)}
    e = expand_at_infinity(RatWeight(L**2, L - 1), floor)
    assert e.terms == {2 - 2 * j: 1 for j in range(6)}


@given(weights(), nonzero_weights(), st.integers(-30, -5))
def test_expand_times_denominator_recovers_numerator(a, b, floor):
    w = RatWeight(a, b)
    if w.is_zero():
        return
    e = expand_at_infinity(w, floor)
    back = e * TruncLaurent.from_weight(w.den)
    assert back.agrees_with(TruncLaurent.from_weight(w.num), back.floor)


def test_trunc_laurent_floor_rules():
    a = TruncLaurent({0: 1, -4: 1}, floor=-4)
    b = TruncLaurent({2: 1, -2: 3}, floor=-6)
    assert (a + b).floor == -4
    p = a * b
    # the product is only known down to max(-4 + 2, -6 + 0)
    assert p.floor == -2
    assert p.terms == {2: 1, -2: 4}
    exact = TruncLaurent({1: 2})
    assert exact.floor is None and (exact * exact).floor is None
    with pytest.raises(ValueError):
        a.truncate(-10)


@given(weights())
def test_text_and_json_roundtrip(w):
    assert MotWeight.from_json(w.to_json()) == w
    assert w.to_json()["convention"] == "u=-L^(1/2)"
    assert RatWeight.from_json(RatWeight(w, L - 1).to_json()) == RatWeight(w, L - 1)


def test_canonical_text():
    assert (L**3 + L**2 + L).text() == "L^3 + L^2 + L"
    assert (-(u**3)).text() == "L^(3/2)"
    assert (u**3).text() == "-L^(3/2)"
    assert MotWeight.L(-2).text() == "L^(-2)"
    assert MotWeight().text() == "0"
