"""Plethystic exponential, its inverse, and powers of series by motivic classes.

The pre-lambda-ring structure is fixed by ``sigma_n(u) = u^n`` for the
generator ``u = -L^(1/2)``, so that

    Exp(sum A_n t^n) = prod_n (1 - t^n)^(-A_n),
    (1 - t)^(-u^i) = (1 - u^i t)^(-1).

This is the class-level image of the power structure on varieties; symmetric
products and their G-quotients never appear as geometry here.
"""

from __future__ import annotations

from fractions import Fraction

from .series import TruncSeries, factor_product, series_exp, series_log

__all__ = ["PlethysmError", "exp_pleth", "log_pleth", "pow_class", "mobius"]


class PlethysmError(ValueError):
    pass


def mobius(n):
    """Moebius function by trial division."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _adams_series(a, k):
    """``psi_k`` on coefficients combined with ``t -> t^k``."""
    ring = a.ring
    out = [ring.zero] * (a.order + 1)
    for n in range(1, a.order // k + 1):
        c = a.coeffs[n]
        if c:
            out[n * k] = ring.adams(k, c)
    out[0] = a.coeffs[0]
    return TruncSeries._raw(out, ring)


def _monomial_route_ok(a):
    if a.ring.lines is None:
        return False
    for c in a.coeffs[1:]:
        for _, mult in a.ring.lines(c):
            if not isinstance(mult, int):
                return False
    return True


def exp_pleth(a, method="auto"):
    """``Exp(a)`` for a series with zero constant term.

    ``method`` is ``"monomial"`` (product over line elements, integer
    coefficients only), ``"adams"`` (``exp(sum_k psi_k(a)(t^k)/k)``) or
    ``"auto"`` (monomial when possible).
    """
    if a.coeffs[0]:
        raise PlethysmError("Exp of non-augmented series")
    if method == "auto":
        method = "monomial" if _monomial_route_ok(a) else "adams"
    if method == "monomial":
        if not _monomial_route_ok(a):
            raise PlethysmError("monomial Exp needs integer combinations of line elements")
        lines = a.ring.lines

        def factors():
            for n in range(1, a.order + 1):
                for line, mult in lines(a.coeffs[n]):
                    yield n, line, -mult

        return factor_product(factors(), a.order, a.ring)
    if method == "adams":
        if a.ring.adams is None:
            raise PlethysmError(f"no Adams operations on {a.ring.name}")
        g = TruncSeries.zero(a.ring, a.order)
        for k in range(1, a.order + 1):
            g = g + _adams_series(a, k).scale(Fraction(1, k))
        return series_exp(g)
    raise ValueError(f"unknown Exp method {method!r}")


def log_pleth(f):
    """Inverse of Exp: ``sum_k mu(k)/k psi_k(log f)(t^k)``."""
    if f.coeffs[0] != f.ring.one:
        raise PlethysmError("Log needs constant term 1")
    if f.ring.adams is None:
        raise PlethysmError(f"no Adams operations on {f.ring.name}")
    lg = series_log(f)
    out = TruncSeries.zero(f.ring, f.order)
    for k in range(1, f.order + 1):
        mu = mobius(k)
        if mu:
            out = out + _adams_series(lg, k).scale(Fraction(mu, k))
    return out


def pow_class(f, x, method="auto"):
    """``f^x := Exp(x * Log f)`` for a class ``x`` in the coefficient ring."""
    return exp_pleth(log_pleth(f).scale(x), method=method)
