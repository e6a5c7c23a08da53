"""Truncated power series in ``t`` over an exact coefficient ring.

Series are dense: ``coeffs[n]`` is the coefficient of ``t^n`` for
``0 <= n <= order``.  All arithmetic is exact modulo ``t^(order+1)``; binary
operations on series of different orders truncate to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from .ring import MotWeight, RatWeight, TruncLaurent, _demote

__all__ = [
    "Ring",
    "INTEGERS",
    "MOTIVIC",
    "RATIONAL",
    "LAURENT",
    "TruncSeries",
    "NonUnitError",
    "ts_mul",
    "ts_inv",
    "ts_pow_int",
    "ts_rescale",
    "factor_product",
    "series_exp",
    "series_log",
]


class NonUnitError(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Coefficient ring contract used by TruncSeries.

    ``adams`` and ``lines`` are only needed by the plethystic exponential;
    ``lines(c)`` decomposes ``c`` as an integer combination of line elements
    (elements with Adams operations ``x -> x^k``).
    """

    name: str
    coerce: Callable[[Any], Any]
    zero: Any
    one: Any
    invert: Callable[[Any], Any]
    adams: Callable[[int, Any], Any] | None = None
    lines: Callable[[Any], list] | None = None
    to_json: Callable[[Any], Any] = str

    def __repr__(self):
        return f"Ring({self.name})"


def _int_coerce(x):
    if isinstance(x, (int, Fraction)):
        return _demote(Fraction(x)) if isinstance(x, Fraction) else x
    if isinstance(x, MotWeight):
        return x.constant_value()
    raise TypeError(f"cannot coerce {x!r} to a rational number")


def _int_invert(x):
    if x == 0:
        raise NonUnitError("non-unit constant term")
    return _demote(Fraction(1) / x)


INTEGERS = Ring(
    name="Q",
    coerce=_int_coerce,
    zero=0,
    one=1,
    invert=_int_invert,
    adams=lambda k, c: c,
    lines=lambda c: [(1, c)] if c != 0 else [],
    to_json=str,
)


def _mot_coerce(x):
    if isinstance(x, MotWeight):
        return x
    if isinstance(x, RatWeight):
        return x.to_mot()
    return MotWeight(x)


def _mot_invert(x):
    if not x.is_monomial():
        raise NonUnitError("non-unit constant term")
    return x ** -1


MOTIVIC = Ring(
    name="MotWeight",
    coerce=_mot_coerce,
    zero=MotWeight(),
    one=MotWeight(1),
    invert=_mot_invert,
    adams=lambda k, c: c.adams(k),
    lines=lambda c: [(MotWeight.u(e), a) for e, a in c.items()],
    to_json=lambda c: c.to_json(),
)


def _rat_coerce(x):
    if isinstance(x, RatWeight):
        return x
    return RatWeight(x)


def _rat_invert(x):
    if x.is_zero():
        raise NonUnitError("non-unit constant term")
    return x.inverse()


RATIONAL = Ring(
    name="RatWeight",
    coerce=_rat_coerce,
    zero=RatWeight(0),
    one=RatWeight(1),
    invert=_rat_invert,
    adams=lambda k, c: c.adams(k),
    lines=None,
    to_json=lambda c: c.to_json(),
)


def _laurent_coerce(x):
    if isinstance(x, TruncLaurent):
        return x
    return TruncLaurent.from_weight(x)


def _laurent_invert(x):
    if x.floor is None and x.terms == {0: 1}:
        return x
    raise NonUnitError("non-unit constant term")


LAURENT = Ring(
    name="TruncLaurent",
    coerce=_laurent_coerce,
    zero=TruncLaurent(),
    one=TruncLaurent({0: 1}),
    invert=_laurent_invert,
    to_json=lambda c: c.to_json(),
)


class TruncSeries:
    """Power series in t truncated after ``t^order``."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable, ring: Ring, order: int | None = None):
        coeffs = [ring.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            coeffs = coeffs[: order + 1] + [ring.zero] * (order + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a series needs at least a constant term")
        self.coeffs = tuple(coeffs)
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs, ring):
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.ring = ring
        return obj

    @classmethod
    def one(cls, ring, order):
        return cls._raw([ring.one] + [ring.zero] * order, ring)

    @classmethod
    def zero(cls, ring, order):
        return cls._raw([ring.zero] * (order + 1), ring)

    @classmethod
    def monomial(cls, ring, order, degree, coeff=None):
        c = [ring.zero] * (order + 1)
        if degree <= order:
            c[degree] = ring.one if coeff is None else ring.coerce(coeff)
        return cls._raw(c, ring)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        return TruncSeries._raw(self.coeffs[: order + 1], self.ring)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return None
        if other.ring is not self.ring:
            raise TypeError(f"coefficient rings differ: {self.ring.name} vs {other.ring.name}")
        n = min(self.order, other.order)
        return n

    def __add__(self, other):
        n = self._check(other)
        if n is None:
            return NotImplemented
        return TruncSeries._raw([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.ring)

    def __sub__(self, other):
        n = self._check(other)
        if n is None:
            return NotImplemented
        return TruncSeries._raw([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], self.ring)

    def __neg__(self):
        return TruncSeries._raw([-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        return ts_pow_int(self, e)

    def scale(self, c):
        c = c if isinstance(c, (int, Fraction)) else self.ring.coerce(c)
        return TruncSeries._raw([c * x for x in self.coeffs], self.ring)

    def map(self, f, ring):
        """Apply a coefficient map landing in ``ring``."""
        return TruncSeries([f(c) for c in self.coeffs], ring)

    def rescale(self, k, c=1):
        return ts_rescale(self, k, c)

    def inverse(self):
        return ts_inv(self)

    def first_difference(self, other):
        """Smallest degree where the two series differ, or None."""
        n = self._check(other)
        for i in range(n + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def to_json(self):
        return {
            "variable": "t",
            "order": self.order,
            "coeffs": [self.ring.to_json(c) for c in self.coeffs],
        }

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]}, ring={self.ring.name})"


def ts_mul(a, b):
    n = a._check(b)
    ca, cb = a.coeffs, b.coeffs
    zero = a.ring.zero
    out = []
    for k in range(n + 1):
        s = zero
        for i in range(k + 1):
            x = ca[i]
            if x:
                y = cb[k - i]
                if y:
                    s = s + x * y
        out.append(s)
    return TruncSeries._raw(out, a.ring)


def ts_inv(a):
    """Multiplicative inverse; the constant term must be a unit."""
    ring = a.ring
    inv0 = ring.invert(a.coeffs[0])
    out = [inv0]
    for k in range(1, a.order + 1):
        s = ring.zero
        for i in range(1, k + 1):
            x = a.coeffs[i]
            if x:
                s = s + x * out[k - i]
        out.append(-(s * inv0))
    return TruncSeries._raw(out, ring)


def ts_pow_int(a, e):
    """``a^e`` by repeated squaring; the constant term of ``a`` must be 1."""
    if a.coeffs[0] != a.ring.one:
        raise ValueError("integer powers need constant term 1")
    if e < 0:
        a = ts_inv(a)
        e = -e
    result = TruncSeries.one(a.ring, a.order)
    base = a
    while e:
        if e & 1:
            result = ts_mul(result, base)
        e >>= 1
        if e:
            base = ts_mul(base, base)
    return result


def ts_rescale(a, k, c=1):
    """The substitution ``t -> c * t^k``, truncated at the order of ``a``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    ring = a.ring
    c = c if isinstance(c, (int, Fraction)) else ring.coerce(c)
    out = [ring.zero] * (a.order + 1)
    power = ring.one
    for n in range(0, a.order // k + 1):
        out[n * k] = a.coeffs[n] * power if n else a.coeffs[0]
        power = power * c
    return TruncSeries._raw(out, ring)


def _apply_factor(coeffs, m, c, e, zero):
    """In place: multiply by ``(1 - c t^m)^e``."""
    n = len(coeffs) - 1
    if m > n or e == 0:
        return
    if abs(e) > 2:
        # one pass with the binomial expansion, independent of |e|
        terms = [(0, 1)]
        cj = 1
        for j in range(1, n // m + 1):
            cj = c * cj
            terms.append((j * m, (-1) ** j * comb_signed(e, j) * cj))
        for k in range(n, m - 1, -1):
            acc = coeffs[k]
            for shift, b in terms[1:]:
                if shift > k:
                    break
                x = coeffs[k - shift]
                if x:
                    acc = acc + b * x
            coeffs[k] = acc
        return
    if e < 0:
        for _ in range(-e):
            for k in range(m, n + 1):
                x = coeffs[k - m]
                if x:
                    coeffs[k] = coeffs[k] + c * x
    else:
        for _ in range(e):
            for k in range(n, m - 1, -1):
                x = coeffs[k - m]
                if x:
                    coeffs[k] = coeffs[k] - c * x


def comb_signed(e, j):
    """``binom(e, j)`` for any integer ``e``; each partial product is exact."""
    out = 1
    for i in range(j):
        out = out * (e - i) // (i + 1)
    return out


def factor_product(factors, order, ring):
    """Expand ``prod (1 - c t^m)^e`` over a stream of ``(m, c, e)`` triples."""
    coeffs = [ring.one] + [ring.zero] * order
    for m, c, e in factors:
        if m < 1:
            raise ValueError("factor t-exponents must be >= 1")
        if m > order:
            continue
        c = c if isinstance(c, (int, Fraction)) else ring.coerce(c)
        _apply_factor(coeffs, m, c, e, ring.zero)
    return TruncSeries._raw(coeffs, ring)


def series_exp(a):
    """Ordinary exponential of a series with zero constant term."""
    if a.coeffs[0]:
        raise ValueError("exp needs a zero constant term")
    ring = a.ring
    out = [ring.one]
    for n in range(1, a.order + 1):
        s = ring.zero
        for k in range(1, n + 1):
            x = a.coeffs[k]
            if x:
                s = s + (x * out[n - k]) * k
        out.append(s * Fraction(1, n))
    return TruncSeries._raw(out, ring)


def series_log(f):
    """Ordinary logarithm of a series with constant term 1."""
    ring = f.ring
    if f.coeffs[0] != ring.one:
        raise ValueError("log needs constant term 1")
    # n f_n = sum_{k=1}^{n} k g_k f_{n-k}
    g = [ring.zero]
    for n in range(1, f.order + 1):
        s = f.coeffs[n] * n
        for k in range(1, n):
            if g[k]:
                y = f.coeffs[n - k]
                if y:
                    s = s - (g[k] * y) * k
        g.append(s * Fraction(1, n))
    return TruncSeries._raw(g, ring)
