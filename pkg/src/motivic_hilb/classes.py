"""Named motivic classes and their realizations.

The weight polynomial sends ``L^(1/2) -> q^(1/2)``, so ``u -> -q^(1/2)``;
the Euler characteristic is its value at ``q^(1/2) = -1``, i.e. ``u = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .ring import LaurentPoly, MotWeight, RatWeight, _join_terms, _signed_term
from .series import INTEGERS, Ring, TruncSeries, NonUnitError

__all__ = [
    "WeightPoly",
    "WEIGHT",
    "BettiVector",
    "P3_BETTI",
    "class_lfact",
    "class_gl",
    "gaussian_binomial",
    "proj_vir",
    "vir_normalize",
    "realize_weight",
    "realize_euler",
    "realize_e",
]


class WeightPoly(LaurentPoly):
    """Laurent polynomial in ``q^(1/2)``; exponents count half-powers of q."""

    __slots__ = ()
    var = "q^(1/2)"

    @classmethod
    def q(cls, power=1):
        p = Fraction(power) * 2
        if p.denominator != 1:
            raise ValueError(f"q^{power} is not a half-integer power")
        return cls({int(p): 1})

    def adams(self, k):
        # line elements are (-q^(1/2))^j, so q^(j/2) -> (-1)^(j + jk) q^(jk/2)
        return WeightPoly._raw({e * k: (-c if (e + e * k) % 2 else c) for e, c in self._terms.items()})

    def lines(self):
        return [(WeightPoly({e: -1 if e % 2 else 1}), -c if e % 2 else c) for e, c in self.items()]

    def text(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = ""
            elif e % 2 == 0:
                k = e // 2
                mono = "q" if k == 1 else (f"q^{k}" if k > 0 else f"q^({k})")
            else:
                mono = f"q^({e}/2)"
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)

    def to_json(self):
        return [[e, str(c)] for e, c in self.items()]

    def __str__(self):
        return self.text()


def _weight_invert(x):
    if not x.is_monomial():
        raise NonUnitError("non-unit constant term")
    return x ** -1


def _weight_coerce(x):
    if isinstance(x, WeightPoly):
        return x
    if isinstance(x, MotWeight):
        return realize_weight(x)
    return WeightPoly(x)


WEIGHT = Ring(
    name="WeightPoly",
    coerce=_weight_coerce,
    zero=WeightPoly(),
    one=WeightPoly(1),
    invert=_weight_invert,
    adams=lambda k, c: c.adams(k),
    lines=lambda c: c.lines(),
    to_json=lambda c: c.to_json(),
)


def class_lfact(n):
    """``prod_{k=1}^n (L^k - 1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = MotWeight(1)
    for k in range(1, n + 1):
        out = out * (MotWeight.L(k) - 1)
    return out


def class_gl(n):
    """Class of GL_n: ``L^(n choose 2) * Lfact(n)``."""
    return MotWeight.L(comb(n, 2)) * class_lfact(n)


def gaussian_binomial(n, k):
    """Class of the Grassmannian Gr(k, n), a polynomial in L."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    q, r = class_lfact(n).divmod(class_lfact(k) * class_lfact(n - k))
    assert r.is_zero()
    return q


def proj_vir(N):
    """``[P^N]_vir = L^(-N/2) (L^(N+1) - 1)/(L - 1)``, for any integer N."""
    geo, r = (MotWeight.L(N + 1) - 1).divmod(MotWeight.L(1) - 1)
    assert r.is_zero()
    return MotWeight.L(Fraction(-N, 2)) * geo


def vir_normalize(x, d):
    """``L^(-d/2) x``."""
    return MotWeight.L(Fraction(-d, 2)) * MotWeight(x)


def realize_weight(x):
    """Weight polynomial of a MotWeight, or of each coefficient of a series."""
    if isinstance(x, TruncSeries):
        return x.map(realize_weight, WEIGHT)
    if isinstance(x, RatWeight):
        raise TypeError("weight realization of a fraction is not a Laurent polynomial")
    x = MotWeight(x)
    return WeightPoly._raw({e: (-c if e % 2 else c) for e, c in x.terms.items()})


def realize_euler(x):
    """Compactly supported Euler characteristic (``u = 1``), exact."""
    if isinstance(x, TruncSeries):
        return x.map(realize_euler, INTEGERS)
    if isinstance(x, WeightPoly):
        return x.evaluate(-1)
    if isinstance(x, RatWeight):
        return x.evaluate(1)
    return MotWeight(x).evaluate(1)


def realize_e(x):
    """E-polynomial of a Tate class as ``{(p, q): coeff}`` with half-integer p = q."""
    out = {}
    for e, c in MotWeight(x).items():
        key = (Fraction(e, 2), Fraction(e, 2))
        out[key] = -c if e % 2 else c
    return out


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers b_0..b_6 of a smooth projective threefold."""

    b: tuple

    def __post_init__(self):
        b = tuple(int(x) for x in self.b)
        if len(b) != 7:
            raise ValueError("a Betti vector has exactly 7 entries")
        if any(x < 0 for x in b):
            raise ValueError("Betti numbers are non-negative")
        object.__setattr__(self, "b", b)

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(s) for s in text.split(",")))

    def is_tate(self):
        return all(self.b[d] == 0 for d in (1, 3, 5))

    def tate_class(self):
        """``sum b_{2i} L^i``; only defined when odd Betti numbers vanish."""
        if not self.is_tate():
            raise ValueError("odd cohomology: the class is not Tate")
        return sum((self.b[2 * i] * MotWeight.L(i) for i in range(4)), MotWeight())

    def weight_class(self):
        """``W([X]) = sum_d b_d q^(d/2)``, valid for non-Tate X as well."""
        return WeightPoly({d: bd for d, bd in enumerate(self.b)})

    def euler(self):
        return sum((-1) ** d * bd for d, bd in enumerate(self.b))


P3_BETTI = BettiVector((1, 0, 1, 0, 1, 0, 1))
