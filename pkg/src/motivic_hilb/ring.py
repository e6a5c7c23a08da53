"""Exact Laurent polynomials and rational functions in the half-Lefschetz generator.

Every Tate motivic weight is stored as a Laurent polynomial in

    u = -L^(1/2)

so that L = u^2 and L^(1/2) = -u.  With this generator the sign rule of the
power structure becomes the monomial Adams operation ``u -> u^k``.

Coefficients are Python ints, or ``Fraction`` where division by integers is
unavoidable (the exp/Adams route of the plethystic exponential).  Fractions
with denominator one are always demoted back to ints.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

__all__ = [
    "LaurentPoly",
    "MotWeight",
    "RatWeight",
    "TruncLaurent",
    "WeightDivisionError",
    "SpecializationPole",
    "rf_reduce",
    "adams",
    "expand_at_infinity",
    "evaluate",
    "poly_gcd",
]


class WeightDivisionError(ZeroDivisionError):
    pass


class SpecializationPole(ValueError):
    pass


def _demote(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _clean(terms):
    return {e: _demote(c) for e, c in terms.items() if c != 0}


class LaurentPoly:
    """Immutable Laurent polynomial in one variable, ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")
    var = "x"

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, (int, Fraction)):
            terms = {0: terms}
        elif isinstance(terms, LaurentPoly):
            terms = terms._terms
        self._terms = _clean(dict(terms))
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def gen(cls):
        return cls({1: 1})

    # --- inspection -------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in descending exponent order."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exponent):
        return self._terms.get(exponent, 0)

    def is_zero(self):
        return not self._terms

    def degree(self):
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self._terms)

    def valuation(self):
        if not self._terms:
            raise ValueError("valuation of the zero polynomial is undefined")
        return min(self._terms)

    def leading_coeff(self):
        return self._terms[self.degree()]

    def is_monomial(self):
        return len(self._terms) == 1

    def is_constant(self):
        return not self._terms or set(self._terms) == {0}

    def is_integral(self):
        return all(isinstance(c, int) for c in self._terms.values())

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self!r} is not a constant")
        return self._terms.get(0, 0)

    # --- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return type(self)._raw(_clean(out))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return type(self)()
            return type(self)._raw(_clean({e: c * other for e, c in self._terms.items()}))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)._raw(_clean(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise WeightDivisionError("division by zero weight")
            return self * (Fraction(1) / other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact division; use RatWeight for fractions")
        return q

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e, c), = self._terms.items()
            return type(self)({e * n: Fraction(1) / Fraction(c) ** (-n)})
        result = type(self)(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by the generator to the power ``k``."""
        return type(self)._raw({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k):
        """The substitution x -> x^k (k may be negative)."""
        if k == 0:
            raise ValueError("k must be nonzero")
        return type(self)._raw({e * k: c for e, c in self._terms.items()})

    def divmod(self, other):
        """Division with remainder in descending powers, treating both as polynomials.

        Exponents are shifted so that ``other`` has valuation zero; the
        quotient is exact whenever ``other`` divides ``self`` in the Laurent ring.
        """
        if other.is_zero():
            raise WeightDivisionError("division by zero weight")
        v = other.valuation()
        den = other.shift(-v)
        d = den.degree()
        lead = den._terms[d]
        rem = dict(self._terms)
        quot = {}
        if rem:
            lowest = min(rem)
            while rem:
                top = max(rem)
                if top - d < lowest:
                    break
                c = _demote(Fraction(rem[top]) / lead)
                quot[top - d] = c
                for e, dc in den._terms.items():
                    k = top - d + e
                    nv = rem.get(k, 0) - c * dc
                    if nv == 0:
                        rem.pop(k, None)
                    else:
                        rem[k] = nv
        q = type(self)._raw(_clean(quot)).shift(-v)
        return q, type(self)._raw(_clean(rem))

    # --- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other != 0 else {})
        if isinstance(other, LaurentPoly):
            return type(self) is type(other) and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # --- evaluation -------------------------------------------------------

    def evaluate(self, value):
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self._terms.items():
            if value == 0 and e < 0:
                raise SpecializationPole("specialization pole")
            total += c * value ** e
        return _demote(total)

    def __call__(self, value):
        return self.evaluate(value)

    def content(self):
        """Positive rational g with self/g primitive over the integers."""
        if not self._terms:
            return Fraction(1)
        fracs = [Fraction(c) for c in self._terms.values()]
        den = reduce(lcm, (f.denominator for f in fracs), 1)
        num = reduce(gcd, (abs(f.numerator) * (den // f.denominator) for f in fracs), 0)
        return Fraction(num, den)

    def __repr__(self):
        return f"{type(self).__name__}({self.items()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{e}" if e > 0 else f"{self.var}^({e})"
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)


def _signed_term(c, mono):
    neg = c < 0
    a = -c if neg else c
    if mono == "":
        body = str(a)
    elif a == 1:
        body = mono
    else:
        body = f"{a}*{mono}"
    return neg, body


def _join_terms(parts):
    out = ""
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out = f"-{body}" if neg else body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out


class MotWeight(LaurentPoly):
    """Tate motivic weight: a Laurent polynomial in ``u = -L^(1/2)``."""

    __slots__ = ()
    var = "u"

    @classmethod
    def u(cls, k=1):
        return cls({k: 1})

    @classmethod
    def L(cls, power=1):
        """``L^power`` for an integer or half-integer power."""
        p = Fraction(power) * 2
        if p.denominator != 1:
            raise ValueError(f"L^{power} is not a half-integer power")
        p = int(p)
        return cls({p: -1 if p % 2 else 1})

    def adams(self, k):
        if k < 1:
            raise ValueError("Adams operations are indexed by k >= 1")
        return self.substitute_power(k)

    def to_L_terms(self):
        """Terms as (half-exponent of L, coefficient) in the L-convention, descending."""
        return [(e, -c if e % 2 else c) for e, c in self.items()]

    def text(self):
        """Canonical L-convention text form, e.g. ``L^3 + L^2 + L`` or ``-L^(3/2)``."""
        if not self._terms:
            return "0"
        parts = []
        for p, c in self.to_L_terms():
            if p == 0:
                mono = ""
            elif p % 2 == 0:
                k = p // 2
                mono = "L" if k == 1 else (f"L^{k}" if k > 0 else f"L^({k})")
            else:
                mono = f"L^({p}/2)"
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)

    def to_json(self):
        return {
            "convention": "u=-L^(1/2)",
            "terms": [[e, str(c)] for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): _parse_number(c) for e, c in obj["terms"]})


def _parse_number(s):
    return _demote(Fraction(s))


# --- polynomial gcd over Q -------------------------------------------------


def _dense(p):
    """Dense coefficient list (ascending) of a polynomial with valuation >= 0."""
    d = p.degree()
    out = [Fraction(0)] * (d + 1)
    for e, c in p._terms.items():
        out[e] = Fraction(c)
    return out


def _dense_rem(a, b):
    a = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    while len(a) - 1 >= db and any(a):
        c = a[-1] * inv
        shift = len(a) - 1 - db
        if c:
            for i, bc in enumerate(b):
                a[shift + i] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_gcd(a, b):
    """Monic gcd over Q of two Laurent polynomials, ignoring powers of the generator.

    Euclid's algorithm on monic remainders; the result has valuation 0.
    """
    cls = type(a)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero():
        a, b = b, a
    pa = _dense(a.shift(-a.valuation()))
    if b.is_zero():
        x = pa
    else:
        pb = _dense(b.shift(-b.valuation()))
        x, y = (pa, pb) if len(pa) >= len(pb) else (pb, pa)
        while y:
            lead = y[-1]
            y = [c / lead for c in y]
            x, y = y, _dense_rem(x, y)
    lead = x[-1]
    return cls._raw(_clean({i: c / lead for i, c in enumerate(x)}))


# --- rational functions -----------------------------------------------------


class RatWeight:
    """Normalized fraction ``num/den`` of MotWeights.

    Normal form: gcd over Q removed, ``den`` a primitive integer polynomial
    with valuation 0 and positive leading coefficient.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _normalized=False):
        if not isinstance(num, MotWeight):
            num = MotWeight(num)
        if den is None:
            den = MotWeight(1)
        elif not isinstance(den, MotWeight):
            den = MotWeight(den)
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        return cls(num, den, _normalized=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den == 1

    def to_mot(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatWeight(self.num + other.num, self.den)
        return RatWeight(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatWeight._make(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatWeight(0)
            return RatWeight._make(self.num * other, self.den)
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.den == 1 and self.den == 1:
            return RatWeight._make(self.num * other.num, self.den)
        return RatWeight(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise WeightDivisionError("division by zero weight")
        return RatWeight(self.den, self.num)

    def __truediv__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatWeight(self.num ** n, self.den ** n)

    def adams(self, k):
        return RatWeight(self.num.adams(k), self.den.adams(k))

    def evaluate(self, value):
        d = self.den.evaluate(value)
        if d == 0:
            raise SpecializationPole("specialization pole")
        return _demote(Fraction(self.num.evaluate(value)) / d)

    def equals_by_cross_multiplication(self, other):
        other = _as_rat(other)
        return self.num * other.den == other.num * self.den

    def __eq__(self, other):
        other = _as_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def text(self):
        if self.den == 1:
            return self.num.text()
        return f"({self.num.text()})/({self.den.text()})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        return cls(MotWeight.from_json(obj["num"]), MotWeight.from_json(obj["den"]))

    def __repr__(self):
        return f"RatWeight({self.num!r}, {self.den!r})"

    def __str__(self):
        return self.text()


def _as_rat(x):
    if isinstance(x, RatWeight):
        return x
    if isinstance(x, (MotWeight, int, Fraction)):
        return RatWeight._make(MotWeight(x), MotWeight(1))
    return NotImplemented


def _normalize(num, den):
    if den.is_zero():
        raise WeightDivisionError("division by zero weight")
    if num.is_zero():
        return MotWeight(), MotWeight(1)
    v = den.valuation()
    num, den = num.shift(-v), den.shift(-v)
    if den.degree() > 0:
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
    scale = den.content()
    if den.leading_coeff() < 0:
        scale = -scale
    if scale != 1:
        inv = 1 / scale
        num = num * inv
        den = den * inv
    return num, den


def rf_reduce(num, den):
    """Normalized fraction ``num/den``."""
    return RatWeight(num, den)


def adams(k, w):
    """Adams operation ``u -> u^k`` on a MotWeight or RatWeight."""
    if k < 1:
        raise ValueError("Adams operations are indexed by k >= 1")
    return w.adams(k)


def evaluate(w, u_value):
    """Exact value of ``w`` at ``u = u_value``; raises SpecializationPole at poles."""
    return w.evaluate(u_value)


# --- truncated Laurent series at infinity -----------------------------------


class TruncLaurent:
    """Laurent series in descending powers of u, known exactly down to ``floor``.

    ``floor=None`` marks an exact (finite) Laurent polynomial.  Exponents are
    in u-units, i.e. half-powers of L.
    """

    __slots__ = ("terms", "floor")

    def __init__(self, terms=None, floor=None):
        terms = dict(terms or {})
        if floor is not None:
            terms = {e: c for e, c in terms.items() if e >= floor}
        self.terms = _clean(terms)
        self.floor = floor

    @classmethod
    def from_weight(cls, w, floor=None):
        return cls(MotWeight(w).terms, floor)

    def top(self):
        return max(self.terms) if self.terms else None

    def _combine_floor_add(self, other):
        fs = [f for f in (self.floor, other.floor) if f is not None]
        return max(fs) if fs else None

    def __add__(self, other):
        other = _as_trunc(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncLaurent(out, self._combine_floor_add(other))

    __radd__ = __add__

    def __neg__(self):
        return TruncLaurent({e: -c for e, c in self.terms.items()}, self.floor)

    def __sub__(self, other):
        return self + (-_as_trunc(other))

    def __rsub__(self, other):
        return _as_trunc(other) - self

    def __mul__(self, other):
        other = _as_trunc(other)
        if not self.terms or not other.terms:
            fs = [f for f in (self.floor, other.floor) if f is not None]
            return TruncLaurent({}, max(fs) if fs else None)
        floors = []
        if self.floor is not None:
            floors.append(self.floor + other.top())
        if other.floor is not None:
            floors.append(other.floor + self.top())
        floor = max(floors) if floors else None
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if floor is not None and e < floor:
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return TruncLaurent(out, floor)

    __rmul__ = __mul__

    def truncate(self, floor):
        if self.floor is not None and floor < self.floor:
            raise ValueError("cannot deepen a truncated series")
        return TruncLaurent(self.terms, floor)

    def agrees_with(self, other, floor):
        """Exact agreement of all exponents >= floor."""
        a = {e: c for e, c in self.terms.items() if e >= floor}
        b = {e: c for e, c in _as_trunc(other).terms.items() if e >= floor}
        return a == b

    def __eq__(self, other):
        if not isinstance(other, TruncLaurent):
            other = _as_trunc(other)
        return self.terms == other.terms and self.floor == other.floor

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.floor))

    def to_json(self):
        return {
            "convention": "u=-L^(1/2)",
            "floor": self.floor,
            "terms": [[e, str(c)] for e, c in sorted(self.terms.items(), reverse=True)],
        }

    def __repr__(self):
        return f"TruncLaurent({sorted(self.terms.items(), reverse=True)!r}, floor={self.floor})"


def _as_trunc(x):
    if isinstance(x, TruncLaurent):
        return x
    return TruncLaurent(MotWeight(x).terms, None)


def expand_at_infinity(w, floor):
    """Descending-power expansion of ``w`` at L = infinity, exact for exponents >= floor."""
    if isinstance(w, (MotWeight, int, Fraction)):
        w = RatWeight(w)
    if w.is_zero():
        return TruncLaurent({}, floor)
    den = w.den
    d = den.degree()
    lead = den.leading_coeff()
    rem = dict(w.num.terms)
    out = {}
    while rem:
        top = max(rem)
        e = top - d
        if e < floor:
            break
        c = _demote(Fraction(rem[top]) / lead)
        out[e] = c
        for de, dc in den.terms.items():
            k = e + de
            nv = rem.get(k, 0) - c * dc
            if nv == 0:
                rem.pop(k, None)
            else:
                rem[k] = nv
    return TruncLaurent(out, floor)
