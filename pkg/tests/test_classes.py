from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motivic_hilb.classes import (
    P3_BETTI,
    BettiVector,
    WeightPoly,
    class_gl,
    class_lfact,
    gaussian_binomial,
    proj_vir,
    realize_e,
    realize_euler,
    realize_weight,
    vir_normalize,
)
from motivic_hilb.ring import MotWeight, RatWeight, SpecializationPole
from tests.strategies import weights

L = MotWeight.L()
u = MotWeight.u()


def test_lfact_and_gl():
    assert class_lfact(0) == MotWeight(1)
    assert class_gl(1) == L - 1
    assert class_gl(2) == L**4 - L**3 - L**2 + L


def test_gaussian_binomials():
    assert gaussian_binomial(5, 0) == MotWeight(1)
    assert gaussian_binomial(2, 1) == L + 1
    assert gaussian_binomial(4, 2) == L**4 + L**3 + 2 * L**2 + L + 1
    assert gaussian_binomial(4, 2).evaluate(1) == 6
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4)


@given(st.integers(1, 7), st.integers(0, 7))
def test_gaussian_pascal(n, k):
    if k > n:
        return
    # [n k] = [n-1 k-1] + L^k [n-1 k]
    lhs = gaussian_binomial(n, k)
    rhs = (gaussian_binomial(n - 1, k - 1) if k >= 1 else MotWeight()) + (
        MotWeight.L(k) * gaussian_binomial(n - 1, k) if k <= n - 1 else MotWeight()
    )
    assert lhs == rhs


def test_virtual_projective_spaces():
    assert proj_vir(-1) == MotWeight()
    assert proj_vir(-2) == MotWeight(-1)
    assert proj_vir(1) == MotWeight.L(Fraction(1, 2)) + MotWeight.L(Fraction(-1, 2))
    assert proj_vir(1) == -u - u**-1
    assert proj_vir(0) == MotWeight(1)


@given(st.integers(-6, 6))
def test_proj_vir_is_palindromic(n):
    # L^(-N/2)[P^N] is invariant under L^(1/2) -> L^(-1/2), i.e. u -> 1/u
    p = proj_vir(n)
    assert MotWeight({-e: c for e, c in p.terms.items()}) == p


def test_vir_normalize():
    assert vir_normalize(L**3, 3) == MotWeight.L(Fraction(3, 2))
    assert vir_normalize(MotWeight(5), 0) == MotWeight(5)
    assert vir_normalize(L**2, 2) == L


def test_weight_realization():
    assert realize_weight(L) == WeightPoly.q(1)
    assert realize_weight(-(u**3)) == WeightPoly.q(Fraction(3, 2))
    p3vir = vir_normalize(1 + L + L**2 + L**3, 3)
    assert realize_weight(p3vir) == WeightPoly({-3: 1, -1: 1, 1: 1, 3: 1})
    with pytest.raises(TypeError):
        realize_weight(RatWeight(1, L - 1))


@given(weights(), weights())
def test_weight_realization_is_a_ring_map(a, b):
    assert realize_weight(a * b) == realize_weight(a) * realize_weight(b)
    assert realize_weight(a + b) == realize_weight(a) + realize_weight(b)


@given(weights(), st.integers(1, 4))
def test_weight_realization_commutes_with_adams(a, k):
    assert realize_weight(a.adams(k)) == realize_weight(a).adams(k)


@given(weights())
def test_euler_through_weight(a):
    assert realize_euler(realize_weight(a)) == realize_euler(a)


def test_euler_values():
    assert realize_euler(MotWeight.L(7)) == 1
    assert realize_euler(1 + L + L**2 + L**3) == 4
    assert realize_euler(L**3 + L**2 + L) == 3
    with pytest.raises(SpecializationPole):
        realize_euler(RatWeight(L**2, L - 1))


def test_e_polynomial_of_tate_classes():
    assert realize_e(L**2 + 1) == {(2, 2): 1, (0, 0): 1}


def test_betti_vectors():
    assert P3_BETTI.tate_class() == 1 + L + L**2 + L**3
    assert P3_BETTI.euler() == 4
    assert BettiVector.parse("1,0,1,0,1,0,1") == P3_BETTI
    abelian_like = BettiVector((1, 6, 15, 20, 15, 6, 1))
    assert not abelian_like.is_tate()
    assert abelian_like.euler() == 0
    with pytest.raises(ValueError):
        abelian_like.tate_class()
    with pytest.raises(ValueError):
        BettiVector((1, 0, 1))
    with pytest.raises(ValueError):
        BettiVector((1, -1, 0, 0, 0, 0, 0))


def test_weight_class_agrees_with_realization_for_tate():
    assert P3_BETTI.weight_class() == realize_weight(P3_BETTI.tate_class())


def test_weightpoly_text():
    assert WeightPoly({1: 1, 0: 1, -1: 1}).text() == "q^(1/2) + 1 + q^(-1/2)"
    assert WeightPoly({4: 2, -2: -1}).text() == "2*q^2 - q^(-1)"
