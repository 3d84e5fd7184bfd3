"""Dense polynomials in x with coefficients in Q(lambda)."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import ConstantTermNonzero
from .scalar import LambdaRat, lr

_ZERO = LambdaRat()
_ONE = LambdaRat.coerce(1)


def _strip(coeffs: Iterable[LambdaRat]) -> tuple:
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


class Poly:
    """Polynomial sum(c_k x^k); ``coeffs[k]`` is c_k, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        self.coeffs = _strip(lr(c) for c in coeffs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        from .parsing import parse_poly

        return parse_poly(text)

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> LambdaRat:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return _ZERO

    def __iter__(self):
        return iter(self.coeffs)

    # ring structure

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(lr(other))

    def __add__(self, other):
        try:
            other = Poly._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = Poly._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = lr(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = lr(c)
        if c.is_zero():
            return Poly()
        return Poly(c * a for a in self.coeffs)

    def __truediv__(self, other):
        c = lr(other)
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly._coerce(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # calculus and substitution

    def shift(self, c) -> "Poly":
        """p(x + c), by binomial expansion."""
        c = lr(c)
        if c.is_zero() or len(self.coeffs) <= 1:
            return self
        n = len(self.coeffs)
        powers = [_ONE]
        for _ in range(n - 1):
            powers.append(powers[-1] * c)
        out = [_ZERO] * n
        for k, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(k + 1):
                out[j] = out[j] + a * comb(k, j) * powers[k - j]
        return Poly(out)

    def derivative(self, k: int = 1) -> "Poly":
        if k == 0:
            return self
        return Poly(
            self.coeffs[j] * (factorial(j) // factorial(j - k))
            for j in range(k, len(self.coeffs))
        )

    def divide_by_x(self) -> "Poly":
        if not self[0].is_zero():
            raise ConstantTermNonzero(f"constant term {self[0]} is not zero")
        return Poly(self.coeffs[1:])

    def mul_x(self) -> "Poly":
        if not self.coeffs:
            return self
        return Poly((_ZERO,) + self.coeffs)

    def __call__(self, v) -> LambdaRat:
        """Horner evaluation at a scalar v."""
        v = lr(v)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def specialize(self, lam) -> list:
        """Rational coefficients obtained by fixing lambda."""
        return [c.evaluate(lam) for c in self.coeffs]

    def evaluate(self, lam, x):
        """Numeric value at lambda = lam, x = x (both rational)."""
        from fractions import Fraction

        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c.evaluate(lam)
        return acc

    # rendering

    def render(self, var: str = "x") -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            terms.append((self.coeffs[k], mono))
        return join_terms(terms)

    def latex(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
            text = c.latex()
            neg = text.startswith("-") and (c.is_integer() or text.startswith(r"-\frac"))
            if neg:
                text = text[1:]
            if mono:
                if text == "1":
                    text = ""
                elif not (c.is_constant() or text.startswith(r"\frac")):
                    text = rf"\left({text}\right)"
            body = text + mono
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()!r})"


def signed_term(c: LambdaRat, mono: str):
    """(is_negative, body) for the term c*mono in machine text form."""
    if c.is_integer():
        n = c.num[0]
        mag = abs(n)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        return n < 0, body
    neg = sum(1 for a in c.num if a) == 1 and c.num[-1] < 0
    text = (-c).render() if neg else c.render()
    return neg, (f"({text})*{mono}" if mono else text)


def join_terms(terms) -> str:
    parts = []
    for c, mono in terms:
        if c.is_zero():
            continue
        neg, body = signed_term(c, mono)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


X = Poly.x()


@lru_cache(maxsize=None)
def falling_factorial(n: int) -> Poly:
    """(x)_n = x (x - 1) ... (x - n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Poly.const(1)
    return falling_factorial(n - 1) * Poly((-(n - 1), 1))


@lru_cache(maxsize=None)
def x_pow(n: int) -> Poly:
    return Poly.monomial(n)


def poly_arith(p: Poly, q: Poly, which: str) -> Poly:
    if which == "add":
        return p + q
    if which == "sub":
        return p - q
    if which == "mul":
        return p * q
    raise ValueError(f"unknown operation {which!r}")


def shift(p: Poly, c) -> Poly:
    return p.shift(c)


def derivative(p: Poly, k: int = 1) -> Poly:
    return p.derivative(k)


def divide_by_x(p: Poly) -> Poly:
    return p.divide_by_x()


def poly_eval(p: Poly, v) -> LambdaRat:
    return p(v)
