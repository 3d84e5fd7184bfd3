"""Reader for the textual forms produced by ``render``.

Grammar (usual precedence, ``^`` binds tighter than unary minus)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    atom   := INT | 'x' | 'L' | 'λ' | 'lambda' | '(' expr ')'

Everything evaluates into :class:`Poly`; division is only allowed by
expressions free of x.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import Poly
from .scalar import LAMBDA, LambdaRat

_TOKEN = re.compile(r"\s*(?:(\d+)|(lambda|λ|L|x)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", "L" if name in ("lambda", "λ") else name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"malformed expression {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Poly:
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self) -> Poly:
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.degree > 0:
                    raise ParseError("division by an expression involving x")
                if rhs.is_zero():
                    raise ParseError("division by zero")
                value = value / rhs[0]
        return value

    def unary(self) -> Poly:
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            k = self.exponent()
            if k < 0:
                if base.degree > 0 or base.is_zero():
                    raise ParseError("negative power of a non-unit")
                return Poly.const(base[0] ** k)
            return base**k
        return base

    def exponent(self) -> int:
        sign = 1
        if self.peek() == ("op", "("):
            self.take()
            k = self.exponent()
            self.take("op", ")")
            return k
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        return sign * self.take("int")[1]

    def atom(self) -> Poly:
        kind, value = self.peek()
        if kind == "int":
            self.take()
            return Poly.const(value)
        if kind == "name":
            self.take()
            return Poly.x() if value == "x" else Poly.const(LAMBDA)
        if (kind, value) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"malformed expression {self.text!r}")


def parse_poly(text: str) -> Poly:
    return _Parser(text).parse()


def parse_scalar(text: str) -> LambdaRat:
    p = parse_poly(text)
    if p.degree > 0:
        raise ParseError(f"{text!r} depends on x")
    return p[0]


def parse_rational(text: str) -> Fraction:
    """A plain rational such as ``3``, ``-1/2``; used for CLI flags."""
    value = parse_scalar(text)
    if not value.is_constant():
        raise ParseError(f"{text!r} is not a rational number")
    return value.to_fraction()
