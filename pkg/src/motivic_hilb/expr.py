"""Parser for class expressions such as ``1 + L + L^2`` or ``L^(3/2) - 2*L^(-1/2)``.

Grammar (whitespace ignored)::

    expr     := term (("+" | "-") term)*
    term     := unary ("*" unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    atom     := INT | "L" | "(" expr ")"
    exponent := INT | "(" ["-"] INT ["/" INT] ")"

Half-integer exponents are only allowed on ``L``.  The canonical text form
printed by :meth:`MotWeight.text` parses back to the same weight.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .ring import MotWeight

__all__ = ["parse_class", "ExprError"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


class ExprError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        else:
            ch = m.group(2)
            if ch not in "+-*^()/L":
                raise ExprError(f"unexpected character {ch!r} in {text!r}")
            tokens.append((ch, ch))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            got = self.peek() or "end of input"
            raise ExprError(f"expected {kind!r}, got {got!r} in {self.text!r}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok[1]

    def parse(self):
        if not self.tokens:
            raise ExprError("empty class expression")
        value = self.expr()
        if self.peek() is not None:
            raise ExprError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() == "*":
            self.take("*")
            value = value * self.unary()
        return value

    def unary(self):
        if self.peek() == "-":
            self.take("-")
            return -self.unary()
        return self.power()

    def power(self):
        is_L = self.peek() == "L"
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take("^")
        exp = self.exponent()
        if is_L:
            return MotWeight.L(exp)
        if exp.denominator != 1:
            raise ExprError("fractional exponents are only allowed on L")
        exp = int(exp)
        if exp < 0 and not base.is_monomial():
            raise ExprError("negative exponents need a monomial base")
        return base ** exp

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return MotWeight(self.take("int"))
        if kind == "L":
            self.take("L")
            return MotWeight.L(1)
        if kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            return value
        raise ExprError(f"unexpected {kind or 'end of input'!r} in {self.text!r}")

    def exponent(self):
        if self.peek() == "int":
            return Fraction(self.take("int"))
        self.take("(")
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        num = self.take("int")
        den = 1
        if self.peek() == "/":
            self.take("/")
            den = self.take("int")
            if den == 0:
                raise ExprError("zero denominator in exponent")
        self.take(")")
        return Fraction(sign * num, den)


def parse_class(text):
    """Parse a class expression into a MotWeight."""
    return _Parser(text).parse()
