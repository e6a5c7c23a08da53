"""Generating functions of virtual motives of Hilbert schemes of points.

Every series here is computed by at least one explicit route; where two
routes are known to agree, a ``*_check`` function compares them exactly and
returns a :class:`CheckReport`.

Sign conventions: inside ``Exp`` the variable ``t`` is special, so every
substitution ``t -> -t`` is applied to finished series, never to an
``Exp`` argument, except where a formula explicitly places the sign there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .classes import (
    WEIGHT,
    BettiVector,
    WeightPoly,
    class_gl,
    class_lfact,
    gaussian_binomial,
    proj_vir,
    vir_normalize,
)
from .plethysm import exp_pleth, pow_class
from .ring import MotWeight, RatWeight, TruncLaurent, expand_at_infinity
from .series import (
    INTEGERS,
    LAURENT,
    MOTIVIC,
    RATIONAL,
    TruncSeries,
    factor_product,
    ts_mul,
    ts_rescale,
)

__all__ = [
    "ZSeries",
    "CheckReport",
    "PolynomialityError",
    "feit_fine_C",
    "feit_fine_double_product",
    "feit_fine_check",
    "z_c3_product",
    "z_c3_recursion",
    "flagship_check",
    "twisted_quotient_check",
    "z_punctual_c3",
    "z_x_exp",
    "z_x_power",
    "z_x_power_naive",
    "threefold_check",
    "unified_formula",
    "unified_formula_extended",
    "goettsche_surface",
    "cheah_low",
    "cheah_check",
    "weight_partition_function",
    "refined_macmahon",
    "macmahon_function",
    "macmahon_guess",
]

U = MotWeight.u()
L = MotWeight.L(1)


class PolynomialityError(ArithmeticError):
    pass


class ZSeries(TruncSeries):
    """A partition-function series tagged with the route that produced it."""

    __slots__ = ("route",)

    def __init__(self, series, route):
        super().__init__(series.coeffs, series.ring)
        self.route = route


@dataclass
class CheckReport:
    """Outcome of an exact comparison of two series, degree by degree."""

    identity: str
    order: int
    per_degree: list = field(default_factory=list)
    lhs_sample: str | None = None
    rhs_sample: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def status(self):
        return "pass" if all(self.per_degree) else "fail"

    @property
    def passed(self):
        return self.status == "pass"

    @property
    def first_failure_degree(self):
        for n, ok in enumerate(self.per_degree):
            if not ok:
                return n
        return None

    def to_json(self):
        out = {"identity": self.identity, "order": self.order, "status": self.status}
        if not self.passed:
            out["first_failure_degree"] = self.first_failure_degree
            out["lhs"] = self.lhs_sample
            out["rhs"] = self.rhs_sample
        out.update(self.extra)
        return out


def compare(identity, lhs, rhs, order, text=str):
    """Degree-wise exact comparison of two coefficient sequences."""
    per = [lhs[n] == rhs[n] for n in range(order + 1)]
    report = CheckReport(identity, order, per)
    n = report.first_failure_degree
    if n is not None:
        report.lhs_sample = text(lhs[n])
        report.rhs_sample = text(rhs[n])
    return report


def _text(c):
    return c.text() if hasattr(c, "text") else str(c)


# --- commuting matrices -----------------------------------------------------


def feit_fine_C(N):
    """``C(t) = Exp(L^2/(L-1) * t/(1-t))`` over RatWeight; ``t^n`` carries ``[C_n]/[GL_n]``."""
    a = RatWeight(L * L, L - 1)
    arg = TruncSeries([0] + [a] * N, RATIONAL)
    return exp_pleth(arg, method="adams")


def _feit_fine_factors(N, floor):
    # (1 - L^(1-j) t^m)^(-1); a factor with index j only reaches L-exponents <= n - j
    # in the t^n coefficient, so j <= N - floor/2 keeps every exponent >= floor.
    jmax = N - (floor // 2) + 1
    for m in range(1, N + 1):
        for j in range(0, jmax + 1):
            yield m, MotWeight.L(1 - j), -1


def feit_fine_double_product(N, floor):
    """``prod_m prod_j (1 - L^(1-j) t^m)^(-1)``, coefficients exact above ``floor`` (u-units)."""
    exact = factor_product(_feit_fine_factors(N, floor), N, MOTIVIC)
    return TruncSeries._raw([TruncLaurent(c.terms, floor) for c in exact.coeffs], LAURENT)


def feit_fine_check(N, floor=-40):
    """Compare the truncated double product with the Laurent expansion at infinity of ``C(t)``."""
    prod = feit_fine_double_product(N, floor)
    C = feit_fine_C(N)
    per = []
    for n in range(N + 1):
        per.append(prod[n].agrees_with(expand_at_infinity(C[n], floor), floor))
    report = CheckReport("feit_fine_double_product == expand_at_infinity(feit_fine_C)", N, per)
    report.extra["floor"] = floor
    return report


# --- C^3 ------------------------------------------------------------------------


def _z_c3_factors(N):
    # L^(k + 2 - m/2) = (-1)^m u^(2k + 4 - m)
    for m in range(1, N + 1):
        for k in range(m):
            yield m, MotWeight({2 * k + 4 - m: (-1) ** m}), -1


def z_c3_product(N):
    """``prod_{m>=1} prod_{k<m} (1 - L^(k+2-m/2) t^m)^(-1)`` mod ``t^(N+1)``."""
    return ZSeries(factor_product(_z_c3_factors(N), N, MOTIVIC), "product")


def commuting_variety_classes(N):
    """``[C_n] = c~_n [GL_n]`` for n <= N, each reduced to a polynomial in L."""
    C = feit_fine_C(N)
    out = []
    for n in range(N + 1):
        cn = C[n] * class_gl(n)
        if not cn.is_polynomial():
            raise PolynomialityError(f"[C_{n}] is not a polynomial: {cn}")
        out.append(cn.num)
    return out


def z_c3_recursion(N):
    """Virtual motives of Hilb^n(C^3) from the stratification recursion.

    ``w_n = L^(n(n+1)) [C_n] - sum_{k<n} [n k]_L L^((n-k)(n+2k)) [C_{n-k}] w_k``,
    normalized by ``L^(-3n^2/2) / Lfact(n)``.
    """
    Cn = commuting_variety_classes(N)
    w = [MotWeight(1)]
    coeffs = [MotWeight(1)]
    for n in range(1, N + 1):
        acc = MotWeight.L(n * (n + 1)) * Cn[n]
        for k in range(n):
            acc = acc - gaussian_binomial(n, k) * MotWeight.L((n - k) * (n + 2 * k)) * Cn[n - k] * w[k]
        w.append(acc)
        hilb = RatWeight(MotWeight.L(Fraction(-3 * n * n, 2)) * acc, class_lfact(n))
        if not hilb.is_polynomial():
            raise PolynomialityError("recursion polynomiality violated")
        coeffs.append(hilb.num)
    return ZSeries(TruncSeries(coeffs, MOTIVIC), "recursion")


def flagship_check(N):
    rec = z_c3_recursion(N)
    prod = z_c3_product(N)
    return compare("z_c3_recursion == z_c3_product", rec, prod, N, _text)


def twisted_quotient_check(N):
    """``C(t L^(1/2)) == Z_C3(t) C(t L^(-1/2))`` over RatWeight."""
    C = feit_fine_C(N)
    z = z_c3_product(N).map(RatWeight, RATIONAL)
    lhs = ts_rescale(C, 1, RatWeight(-U))
    rhs = ts_mul(z, ts_rescale(C, 1, RatWeight(-(U ** -1))))
    return compare("C(t L^(1/2)) == Z_C3(t) C(t L^(-1/2))", lhs, rhs, N, _text)


# --- general threefolds -----------------------------------------------------------


def _threefold_argument(xvir, N):
    """``-t * xvir / ((1 - u t)(1 - u^(-1) t))`` expanded in t."""
    # 1/((1-ut)(1-t/u)) = sum_n [n]_{u} t^n with [n] = u^n + u^(n-2) + ... + u^(-n)
    coeffs = [MotWeight()]
    for n in range(1, N + 1):
        geo = MotWeight({n - 1 - 2 * i: 1 for i in range(n)})
        coeffs.append(-xvir * geo)
    return TruncSeries(coeffs, MOTIVIC)


def z_x_exp(x, N, method="auto"):
    """Threefold partition function from the Exp formula, then ``t -> -t``."""
    xvir = vir_normalize(x, 3)
    e = exp_pleth(_threefold_argument(xvir, N), method=method)
    return ZSeries(ts_rescale(e, 1, -1), "exp_formula")


def z_punctual_c3(N):
    """Punctual series ``Z_{C^3,0}``: the Exp formula with ``[X] = 1``."""
    return z_x_exp(MotWeight(1), N)


def z_x_power(x, N, method="auto"):
    """``Z_{C^3,0}^[X]`` with the power structure taken in the variable ``-t``.

    The power structure does not commute with ``t -> -t`` (``sigma_2(-1) = 0``),
    so the power is applied to ``Z_{C^3,0}(-t)`` and the sign undone afterwards.
    """
    p = ts_rescale(z_punctual_c3(N), 1, -1)
    return ZSeries(ts_rescale(pow_class(p, MotWeight(x), method=method), 1, -1), "power_formula")


def z_x_power_naive(x, N):
    """``pow_class(Z_{C^3,0}(t), [X])`` literally in ``t``; kept to document the sign issue."""
    return ZSeries(pow_class(z_punctual_c3(N), MotWeight(x)), "power_formula")


def threefold_check(x, N):
    a = z_x_exp(x, N)
    b = z_x_power(x, N, method="adams")
    return compare(f"z_x_exp == z_x_power for [X] = {MotWeight(x).text()}", a, b, N, _text)


# --- other dimensions -------------------------------------------------------------


def _unified(d, x, N):
    sign = (-1) ** d
    inner_arg = TruncSeries.monomial(MOTIVIC, N, 1, proj_vir(d - 2) * sign)
    G = exp_pleth(inner_arg)
    xvir = vir_normalize(x, d)
    # T [X]_vir G, with T = (-1)^d t
    arg = TruncSeries([MOTIVIC.zero] + [c * xvir * sign for c in G.coeffs[:-1]], MOTIVIC)
    return ts_rescale(exp_pleth(arg), 1, sign)


def unified_formula(d, x, N):
    """``sum [Hilb^n X]_vir T^n = Exp(T [X]_vir Exp(T [P^(d-2)]_vir))`` with ``T = (-1)^d t``.

    Both Exp are taken in ``t``; the returned series has ``[Hilb^n X]_vir`` at ``t^n``.
    """
    if d not in (0, 1, 2, 3):
        raise ValueError("unified_formula is defined for d in 0..3; use unified_formula_extended")
    return ZSeries(_unified(d, x, N), "exp_formula")


def unified_formula_extended(d, x, N=3):
    """The same formula for d >= 4, where it is only meaningful through ``t^3``."""
    if N > 3:
        raise ValueError("for d >= 4 the virtual motive is only defined through t^3")
    return ZSeries(_unified(d, x, N), "exp_formula")


def goettsche_surface(s, N):
    """``sum [Hilb^n S] t^n = Exp([S] t / (1 - L t))`` (unnormalized)."""
    s = MotWeight(s)
    arg = TruncSeries([MotWeight()] + [s * MotWeight.L(n - 1) for n in range(1, N + 1)], MOTIVIC)
    return exp_pleth(arg)


def cheah_low(d):
    """Punctual classes ``1 + t + [d 1]_L t^2 + [d+1 2]_L t^3`` of Hilb^n(C^d)_0."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return TruncSeries([1, 1, gaussian_binomial(d, 1), gaussian_binomial(d + 1, 2)], MOTIVIC)


def cheah_assembly(d):
    """``cheah_low(d)^(L^d)`` normalized by ``L^(-nd/2)`` at ``t^n``."""
    z = pow_class(cheah_low(d), MotWeight.L(d))
    return TruncSeries([MotWeight.L(Fraction(-n * d, 2)) * c for n, c in enumerate(z.coeffs)], MOTIVIC)


def cheah_check(d):
    lhs = unified_formula_extended(d, MotWeight.L(d), 3) if d >= 4 else unified_formula(d, MotWeight.L(d), 3)
    rhs = cheah_assembly(d)
    return compare(f"unified formula == Cheah assembly, d = {d}", lhs, rhs, 3, _text)


# --- weight polynomials and refined MacMahon ---------------------------------------


def _half(delta):
    two = Fraction(delta) * 2
    if two.denominator != 1:
        raise ValueError(f"delta = {delta} is not a half-integer")
    return int(two)


def refined_macmahon(delta, N):
    """``M_delta(t, q^(1/2)) = prod_m prod_{k<m} (1 - q^(delta + 1/2 + k - m/2) t^m)^(-1)``."""
    two_delta = _half(delta)

    def factors():
        for m in range(1, N + 1):
            for k in range(m):
                yield m, WeightPoly({two_delta + 1 + 2 * k - m: 1}), -1

    return factor_product(factors(), N, WEIGHT)


def weight_partition_function(b, N):
    """``prod_d M_{(d-3)/2}(-t, -q^(1/2))^((-1)^d b_d)`` over weight polynomials."""
    if not isinstance(b, BettiVector):
        b = BettiVector(tuple(b))

    def factors():
        for d, bd in enumerate(b.b):
            if bd == 0:
                continue
            e = (-1) ** d * bd
            for m in range(1, N + 1):
                for k in range(m):
                    p = d - 2 + 2 * k - m
                    # (-q^(1/2))^p (-t)^m
                    sign = -1 if (p + m) % 2 else 1
                    yield m, WeightPoly({p: sign}), -e

    return ZSeries(factor_product(factors(), N, WEIGHT), "weight_product")


def macmahon_function(N):
    """``M(t) = prod (1 - t^m)^(-m)``."""
    return factor_product(((m, 1, -m) for m in range(1, N + 1)), N, INTEGERS)


def macmahon_guess(d, N):
    """``prod (1 - t^m)^(-binom(m+d-3, d-2))``."""
    if d < 2:
        raise ValueError("MacMahon's guess needs d >= 2")
    return factor_product(((m, 1, -comb(m + d - 3, d - 2)) for m in range(1, N + 1)), N, INTEGERS)
