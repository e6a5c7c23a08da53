"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import contextlib
import random
import time
from fractions import Fraction

from motivic_hilb.classes import P3_BETTI, proj_vir, realize_euler, realize_weight
from motivic_hilb.config import VerifyConfig
from motivic_hilb.dtgen import (
    cheah_check,
    feit_fine_check,
    flagship_check,
    goettsche_surface,
    macmahon_guess,
    refined_macmahon,
    threefold_check,
    twisted_quotient_check,
    unified_formula,
    weight_partition_function,
    z_c3_product,
    z_c3_recursion,
    z_x_exp,
)
from motivic_hilb.partitions import count_table, refined_sum, refined_table
from motivic_hilb.ring import MotWeight
from motivic_hilb.series import MOTIVIC, TruncSeries, ts_pow_int
from motivic_hilb.verify import plethysm_case
from tests._acceptance_log import LINES

L = MotWeight.L()


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        line = f"[ACCEPT] {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({time.perf_counter() - start:.1f}s)"
        LINES.append(line)
        print(line)


def test_criterion_01_flagship():
    with criterion(1, "recursion == product for Hilb^n(C^3), order 8"):
        rec = z_c3_recursion(8)  # raises if any coefficient fails the polynomiality check
        assert all(c.is_integral() for c in rec.coeffs)
        report = flagship_check(8)
        assert report.passed, report.to_json()
        assert rec == z_c3_product(8)


def test_criterion_02_euler():
    with criterion(2, "Euler specialization vs plane-partition enumeration, n <= 12"):
        counts = count_table(3, 12)
        euler = realize_euler(z_c3_product(12))
        assert list(euler.coeffs) == [(-1) ** n * c for n, c in enumerate(counts)]


def test_criterion_03_refined_macmahon():
    with criterion(3, "refined MacMahon product vs refined enumeration, n <= 10, 7 deltas"):
        table = refined_table(10)
        for k in range(-3, 4):
            delta = Fraction(k, 2)
            assert refined_macmahon(delta, 10) == refined_sum(10, delta, table=table), delta


def test_criterion_04_twisted_quotient():
    with criterion(4, "C(t L^(1/2)) = Z_C3(t) C(t L^(-1/2)), order 8"):
        report = twisted_quotient_check(8)
        assert report.passed, report.to_json()


def test_criterion_05_general_threefolds():
    with criterion(5, "Exp route == power route for five classes; weight route for [P^3], order 8"):
        for x in (MotWeight(), MotWeight(1), 1 + L, L**3, P3_BETTI.tate_class()):
            report = threefold_check(x, 8)
            assert report.passed, report.to_json()
        assert realize_weight(z_x_exp(P3_BETTI.tate_class(), 8)) == weight_partition_function(P3_BETTI, 8)


def test_criterion_06_lower_dimensions():
    with criterion(6, "d = 0, 1, 2 specializations of the unified formula"):
        N = 8
        for k in range(5):
            assert unified_formula(0, MotWeight(k), N) == ts_pow_int(TruncSeries([1, 1], MOTIVIC, order=N), k)
        p1 = unified_formula(1, 1 + L, N)
        assert list(p1.coeffs) == [proj_vir(n) for n in range(N + 1)]
        c2 = unified_formula(2, L**2, N)
        g = goettsche_surface(L**2, N)
        assert list(c2.coeffs) == [MotWeight.L(-n) * c for n, c in enumerate(g.coeffs)]
        assert list(realize_euler(unified_formula(2, L**2, 12)).coeffs) == count_table(2, 12)


def test_criterion_07_cheah():
    with criterion(7, "unified formula to t^3 vs punctual assembly, d = 4, 5, 6"):
        for d in (4, 5, 6):
            report = cheah_check(d)
            assert report.passed, report.to_json()


def test_criterion_08_macmahon_guess():
    with criterion(8, "guess agrees for d = 3 (n <= 10) and fails for d = 4 (n <= 8)"):
        assert list(macmahon_guess(3, 10).coeffs) == count_table(3, 10)
        guess, counts = macmahon_guess(4, 8), count_table(4, 8)
        mismatch = [n for n in range(9) if guess[n] != counts[n]]
        assert mismatch
        n = mismatch[0]
        print(f"  d = 4: first mismatch at n = {n}: guess {guess[n]}, enumeration {counts[n]}")


def test_criterion_09_plethysm_properties():
    with criterion(9, "plethysm property suite, 200 random cases, order <= 10"):
        cfg = VerifyConfig()
        rng = random.Random(cfg.seed)
        checked = 0
        for i in range(200):
            for name, lhs, rhs, order in plethysm_case(rng, 10):
                assert order <= 10
                assert lhs == rhs, (i, name)
                checked += 1
        assert checked == 200 * 10


def test_criterion_10_feit_fine():
    with criterion(10, "Feit-Fine double product vs expansion at infinity, n <= 6, floor L^(-40)"):
        # floor -80 in u-units is L^(-40); it also covers the reading "u^(-40)"
        report = feit_fine_check(6, floor=-80)
        assert report.passed, report.to_json()
        assert feit_fine_check(6, floor=-40).passed
