"""Verification suites: named groups of exact identity checks.

Each suite returns a :class:`VerifyReport`.  Identities that raise (for
instance a polynomiality violation inside the recursion) are recorded as
failures with the error message instead of aborting the suite.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .classes import BettiVector, P3_BETTI, proj_vir, realize_euler, realize_weight
from .config import VerifyConfig
from .dtgen import (
    CheckReport,
    PolynomialityError,
    _text,
    cheah_check,
    compare,
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
    z_x_exp,
)
from .expr import parse_class
from .partitions import count_table, refined_sum, refined_table
from .plethysm import exp_pleth, log_pleth, pow_class
from .ring import MotWeight
from .series import INTEGERS, MOTIVIC, TruncSeries, ts_mul, ts_pow_int, ts_rescale

__all__ = ["VerifyReport", "SUITES", "run_suite", "random_weight", "random_series", "plethysm_case"]


@dataclass
class VerifyReport:
    suite: str
    identities: list = field(default_factory=list)  # (name, CheckReport) pairs
    wall_time_s: float = 0.0

    @property
    def passed(self):
        return all(r.passed for _, r in self.identities)

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def add(self, name, report):
        self.identities.append((name, report))

    def to_json(self, timing=True):
        out = {
            "suite": self.suite,
            "status": self.status,
            "identities": [{"name": name, **rep.to_json()} for name, rep in self.identities],
        }
        if timing:
            out["wall_time_s"] = round(self.wall_time_s, 3)
        return out


def _failed(identity, order, err):
    rep = CheckReport(identity, order, [False])
    rep.lhs_sample = f"{type(err).__name__}: {err}"
    rep.rhs_sample = "n/a"
    return rep


def _guard(identity, order, fn):
    try:
        return fn()
    except (PolynomialityError, ArithmeticError, ValueError) as err:
        return _failed(identity, order, err)


def _betti_of(x):
    """Betti vector of a Tate class ``sum c_i L^i`` with 0 <= i <= 3."""
    b = [0] * 7
    for e, c in MotWeight(x).to_L_terms():  # e counts half-powers of L
        if e % 2 or not 0 <= e <= 6:
            return None
        b[e] = c
    if any(v < 0 for v in b):
        return None
    return BettiVector(tuple(b))


# --- suites -----------------------------------------------------------------------


def suite_flagship(cfg):
    rep = VerifyReport("flagship")
    N = cfg.order
    rep.add("flagship", _guard("z_c3_recursion == z_c3_product", N, lambda: flagship_check(N)))
    rep.add("twisted_quotient", _guard("C(t L^(1/2)) == Z_C3(t) C(t L^(-1/2))", N, lambda: twisted_quotient_check(N)))
    return rep


def suite_euler(cfg):
    rep = VerifyReport("euler")
    N = cfg.euler_order
    counts = count_table(3, N, threads=cfg.threads)
    signed = [(-1) ** n * c for n, c in enumerate(counts)]
    rep.add("euler_c3", compare("realize_euler(z_c3_product) == (-1)^n #plane partitions", realize_euler(z_c3_product(N)), signed, N))
    macmahon_minus = ts_rescale(TruncSeries(counts, INTEGERS), 1, -1)
    for text in cfg.threefold_classes:
        x = parse_class(text)
        chi = realize_euler(x)
        lhs = realize_euler(z_x_exp(x, N))
        rhs = ts_pow_int(macmahon_minus, int(chi))
        rep.add(f"euler_threefold[{text}]", compare(f"realize_euler(z_x_exp({text})) == M(-t)^{chi}", lhs, rhs, N))
    return rep


def random_weight(rng, max_terms=3, span=4, cmax=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(-span, span)] = rng.randint(-cmax, cmax)
    return MotWeight(terms)


def random_series(rng, order, constant=0):
    coeffs = [MotWeight(constant)] + [random_weight(rng) for _ in range(order)]
    return TruncSeries(coeffs, MOTIVIC)


def plethysm_case(rng, max_order=10):
    """One randomized case: a list of (property name, lhs, rhs, order)."""
    N = rng.randint(1, max_order)
    a = random_series(rng, N)
    b = random_series(rng, N)
    f = random_series(rng, N, constant=1)
    g = random_series(rng, N, constant=1)
    x = random_weight(rng, max_terms=2, span=3, cmax=2)
    y = random_weight(rng, max_terms=2, span=3, cmax=2)
    n = rng.choice([-3, -2, -1, 1, 2, 3])
    un = MotWeight.u(n)
    ea = exp_pleth(a)
    fx = pow_class(f, x)
    one_minus_t = TruncSeries([1, -1], MOTIVIC, order=N)
    return [
        ("log_exp_roundtrip", log_pleth(ea), a, N),
        ("exp_log_roundtrip", exp_pleth(log_pleth(f)), f, N),
        ("exp_additive", exp_pleth(a + b), ts_mul(ea, exp_pleth(b)), N),
        ("exp_methods_agree", exp_pleth(a, method="monomial"), exp_pleth(a, method="adams"), N),
        ("substitution_u^n", ts_rescale(ea, 1, un), exp_pleth(ts_rescale(a, 1, un)), N),
        ("power_additive", pow_class(f, x + y), ts_mul(fx, pow_class(f, y)), N),
        ("power_multiplicative", pow_class(fx, y), pow_class(f, x * y), N),
        ("power_of_product", pow_class(ts_mul(f, g), x), ts_mul(fx, pow_class(g, x)), N),
        ("power_one", pow_class(f, MotWeight(1)), f, N),
        ("line_rule", pow_class(one_minus_t, -un), ts_pow_int(TruncSeries([1, -un], MOTIVIC, order=N), -1), N),
    ]


def suite_plethysm(cfg):
    rep = VerifyReport("plethysm")
    rng = random.Random(cfg.seed)
    tallies = {}
    failures = []
    for i in range(cfg.plethysm_cases):
        for name, lhs, rhs, N in plethysm_case(rng, cfg.plethysm_max_order):
            ok = lhs == rhs
            tallies.setdefault(name, [0, 0])[0 if ok else 1] += 1
            if not ok:
                failures.append((i, name, compare(name, lhs, rhs, N, _text)))
    for name, (good, bad) in tallies.items():
        r = CheckReport(f"{name} over {good + bad} random cases", cfg.plethysm_max_order, [bad == 0])
        bad_cases = [(i, c) for i, nm, c in failures if nm == name]
        if bad_cases:
            i, c = bad_cases[0]
            r.lhs_sample, r.rhs_sample = c.lhs_sample, c.rhs_sample
            r.extra["first_failing_case"] = i
        r.extra["cases"] = good + bad
        rep.add(f"plethysm.{name}", r)
    return rep


def suite_feitfine(cfg):
    rep = VerifyReport("feitfine")
    N = cfg.feitfine_order
    rep.add("feit_fine", _guard("Feit-Fine double product", N, lambda: feit_fine_check(N, cfg.floor)))
    return rep


def suite_refined(cfg):
    rep = VerifyReport("refined")
    N = cfg.refined_order
    table = refined_table(N, threads=cfg.threads)
    for d in cfg.refined_deltas:
        delta = Fraction(d)
        lhs = refined_macmahon(delta, N)
        rhs = refined_sum(N, delta, table=table)
        rep.add(f"refined[{d}]", compare(f"refined_macmahon({d}) == refined_sum({d})", lhs, rhs, N, _text))
    counts = count_table(3, N, threads=cfg.threads)
    spec = [sum(c for _, c in table[n].items()) for n in range(N + 1)]
    rep.add("refined_total", compare("sum of refined statistics == plane partition counts", spec, counts, N))
    return rep


def suite_guess(cfg):
    rep = VerifyReport("guess")
    N3 = cfg.guess_order_d3
    counts3 = count_table(3, N3, threads=cfg.threads)
    rep.add("guess_d3", compare("macmahon_guess(3) == #plane partitions", macmahon_guess(3, N3), counts3, N3))
    N4 = cfg.guess_order_d4
    counts4 = count_table(4, N4, threads=cfg.threads)
    guess4 = macmahon_guess(4, N4)
    mismatch = next((n for n in range(N4 + 1) if guess4[n] != counts4[n]), None)
    r = CheckReport(f"macmahon_guess(4) differs from #solid partitions for some n <= {N4}", N4, [mismatch is not None])
    if mismatch is None:
        r.lhs_sample = "no mismatch found"
        r.rhs_sample = "n/a"
    else:
        r.extra.update(
            discovered_degree=mismatch,
            guess_value=guess4[mismatch],
            enumeration_value=counts4[mismatch],
        )
    rep.add("guess_d4_mismatch", r)
    return rep


def suite_threefold(cfg):
    rep = VerifyReport("threefold")
    N = cfg.order
    for text in cfg.threefold_classes:
        x = parse_class(text)
        rep.add(f"threefold[{text}]", threefold_check(x, N))
        b = _betti_of(x)
        if b is not None and any(b.b):
            lhs = realize_weight(z_x_exp(x, N))
            rhs = weight_partition_function(b, N)
            rep.add(f"weight[{text}]", compare(f"realize_weight(z_x_exp({text})) == weight product", lhs, rhs, N, _text))
    p3 = P3_BETTI.tate_class()
    rep.add("threefold[P3]", threefold_check(p3, N))
    rep.add(
        "weight[P3]",
        compare("realize_weight(z_x_exp([P^3])) == weight product", realize_weight(z_x_exp(p3, N)), weight_partition_function(P3_BETTI, N), N, _text),
    )
    return rep


def suite_lowdim(cfg):
    rep = VerifyReport("lowdim")
    N = cfg.order
    for k in range(4):
        lhs = unified_formula(0, MotWeight(k), N)
        rhs = ts_pow_int(TruncSeries([1, 1], MOTIVIC, order=N), k)
        rep.add(f"d0[{k}]", compare(f"unified_formula(0, {k}) == (1+t)^{k}", lhs, rhs, N, _text))
    p1 = proj_vir(1) * MotWeight.L(Fraction(1, 2))
    lhs = unified_formula(1, p1, N)
    rhs = [proj_vir(n) for n in range(N + 1)]
    rep.add("d1[P1]", compare("unified_formula(1, [P^1]) == [P^n]_vir", lhs, rhs, N, _text))
    L2 = MotWeight.L(2)
    lhs = unified_formula(2, L2, N)
    g = goettsche_surface(L2, N)
    rhs = [MotWeight.L(-n) * c for n, c in enumerate(g.coeffs)]
    rep.add("d2[C2]", compare("unified_formula(2, [C^2]) == L^(-n) Goettsche", lhs, rhs, N, _text))
    E = cfg.euler_order
    counts2 = count_table(2, E, threads=cfg.threads)
    rep.add("d2_euler", compare("realize_euler(unified_formula(2, [C^2])) == p(n)", realize_euler(unified_formula(2, L2, E)), counts2, E))
    for d in (4, 5, 6):
        rep.add(f"cheah[{d}]", cheah_check(d))
    return rep


SUITES = {
    "flagship": suite_flagship,
    "euler": suite_euler,
    "plethysm": suite_plethysm,
    "feitfine": suite_feitfine,
    "refined": suite_refined,
    "guess": suite_guess,
    "threefold": suite_threefold,
    "lowdim": suite_lowdim,
}


def run_suite(name, cfg=None):
    """Run one suite (or ``"all"``); returns a list of VerifyReport."""
    cfg = cfg or VerifyConfig()
    names = list(SUITES) if name == "all" else [name]
    reports = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(f"unknown suite {nm!r}")
        start = time.perf_counter()
        rep = SUITES[nm](cfg)
        rep.wall_time_s = time.perf_counter() - start
        reports.append(rep)
    return reports
