"""Exact arithmetic in the rational function field Q(lambda).

Integer polynomials in lambda are plain tuples of Python ints, lowest degree
first, with the zero polynomial written ``()``.  A :class:`LambdaRat` is a
reduced ratio of two such tuples whose denominator has a positive leading
coefficient, so two values are equal exactly when their representations are.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as igcd
from numbers import Rational
from typing import Tuple, Union

from .errors import DivisionByZero, PoleAtEvaluation

IntPoly = Tuple[int, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)


# -- integer polynomial helpers ---------------------------------------------


def ip_strip(coeffs) -> IntPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def ip_degree(a: IntPoly) -> int:
    return len(a) - 1


def ip_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ip_strip(out)


def ip_neg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def ip_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return ip_add(a, ip_neg(b))


def ip_scale(a: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    return tuple(c * x for x in a)


def ip_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return ip_scale(b, a[0])
    if len(b) == 1:
        return ip_scale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def ip_content(a: IntPoly) -> int:
    g = 0
    for c in a:
        g = igcd(g, c)
        if g == 1:
            break
    return g


def ip_primitive(a: IntPoly) -> IntPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return ZERO
    c = ip_content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def ip_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient a/b in Z[lambda]; b must divide a exactly."""
    if not b:
        raise DivisionByZero("division by the zero polynomial")
    if not a:
        return ZERO
    if len(b) == 1:
        d = b[0]
        out = []
        for c in a:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError("inexact integer polynomial division")
            out.append(q)
        return tuple(out)
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        q, r = divmod(rem[k + db], lb)
        if r:
            raise ArithmeticError("inexact integer polynomial division")
        quot[k] = q
        if q:
            for j, c in enumerate(b):
                rem[k + j] -= q * c
    if any(rem[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return ip_strip(quot)


def ip_prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        lead = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, c in enumerate(b):
            rem[shift + j] -= lead * c
        rem = list(ip_strip(rem))
    return tuple(rem)


def ip_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[lambda], positive leading coefficient."""
    if not a:
        return ip_neg(b) if b and b[-1] < 0 else b
    if not b:
        return ip_neg(a) if a[-1] < 0 else a
    c = igcd(ip_content(a), ip_content(b))
    if len(a) == 1 or len(b) == 1:
        return (c,)
    a, b = ip_primitive(a), ip_primitive(b)
    if a == b:
        return ip_scale(a, c)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (c,)
        r = ip_prem(a, b)
        a, b = b, ip_primitive(r)
    return ip_scale(a, c)


def ip_eval(a: IntPoly, v) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * v + c
    return acc


def ip_render(a: IntPoly, var: str = "L") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


def _nterms(a: IntPoly) -> int:
    return sum(1 for c in a if c)


# Denominators in this domain are products of lambda, lambda - 1 and
# lambda + 1; pulling those out keeps rendered output readable.
_NAMED_FACTORS = ((0, 1), (-1, 1), (1, 1))


def _split_denominator(den: IntPoly):
    factors = []
    rest = den
    for fac in _NAMED_FACTORS:
        k = 0
        while len(rest) > 1:
            try:
                q = ip_exact_div(rest, fac)
            except ArithmeticError:
                break
            rest = q
            k += 1
        if k:
            factors.append((fac, k))
    return rest, factors


# -- the field element -------------------------------------------------------


Scalarish = Union["LambdaRat", int, Fraction]


class LambdaRat:
    """An element of Q(lambda), kept as a reduced ratio num/den."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: IntPoly = ZERO, den: IntPoly = ONE, _reduced: bool = False):
        if not _reduced:
            num, den = _canonical(ip_strip(num), ip_strip(den))
        self.num = num
        self.den = den
        self._hash = None

    # constructors

    @classmethod
    def coerce(cls, value) -> "LambdaRat":
        if isinstance(value, LambdaRat):
            return value
        if isinstance(value, int):
            return cls((value,) if value else ZERO, ONE, _reduced=True)
        if isinstance(value, Rational):
            q = Fraction(value)
            return cls((q.numerator,), (q.denominator,), _reduced=True) if q else cls()
        raise TypeError(f"cannot coerce {type(value).__name__} to LambdaRat")

    @classmethod
    def lam(cls) -> "LambdaRat":
        """The indeterminate lambda."""
        return cls((0, 1), ONE, _reduced=True)

    @classmethod
    def parse(cls, text: str) -> "LambdaRat":
        from .parsing import parse_scalar

        return parse_scalar(text)

    # predicates

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def is_integer(self) -> bool:
        return len(self.num) <= 1 and self.den == ONE

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("value depends on lambda")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # arithmetic

    def __add__(self, other):
        try:
            other = LambdaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return _add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LambdaRat(ip_neg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        try:
            other = LambdaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return _add(self, -other)

    def __rsub__(self, other):
        try:
            other = LambdaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return _add(other, -self)

    def __mul__(self, other):
        try:
            other = LambdaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "LambdaRat":
        if not self.num:
            raise DivisionByZero("inverse of zero in Q(lambda)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = ip_neg(num), ip_neg(den)
        return LambdaRat(num, den, _reduced=True)

    def __truediv__(self, other):
        try:
            other = LambdaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return _mul(self, other.inverse())

    def __rtruediv__(self, other):
        try:
            other = LambdaRat.coerce(other)
        except TypeError:
            return NotImplemented
        return _mul(other, self.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LambdaRat.coerce(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison / hashing

    def __eq__(self, other):
        if not isinstance(other, LambdaRat):
            try:
                other = LambdaRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # evaluation and rendering

    def evaluate(self, v) -> Fraction:
        v = Fraction(v)
        d = ip_eval(self.den, v)
        if d == 0:
            raise PoleAtEvaluation(f"{self.render()} has a pole at lambda = {v}")
        return ip_eval(self.num, v) / d

    def render(self) -> str:
        """Machine text form, lambda written as ``L``."""
        if self.den == ONE:
            return ip_render(self.num)
        num = ip_render(self.num)
        if _nterms(self.num) > 1:
            num = f"({num})"
        pieces = _denominator_pieces(self.den, "L")
        den = "*".join(pieces)
        if len(pieces) > 1 or _nterms(self.den) > 1 and not den.startswith("("):
            den = f"({den})"
        return f"{num}/{den}"

    def latex(self) -> str:
        var = r"\lambda"
        if self.den == ONE:
            return _tex(ip_render(self.num, var))
        num, sign = self.num, ""
        if _nterms(num) == 1 and num[-1] < 0:
            num, sign = ip_neg(num), "-"
        pieces = _denominator_pieces(self.den, var)
        if len(pieces) == 1 and pieces[0].startswith("(") and pieces[0].endswith(")"):
            pieces = [pieces[0][1:-1]]
        den = " ".join(pieces)
        return sign + r"\frac{%s}{%s}" % (_tex(ip_render(num, var)), _tex(den))

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LambdaRat({self.render()!r})"


def _tex(s: str) -> str:
    return re.sub(r"\^(-?\d+)", r"^{\1}", s).replace("*", " ")


def _denominator_pieces(den: IntPoly, var: str):
    rest, factors = _split_denominator(den)
    pieces = []
    if rest != ONE:
        r = ip_render(rest, var)
        pieces.append(f"({r})" if _nterms(rest) > 1 else r)
    for fac, k in factors:
        base = ip_render(fac, var)
        if _nterms(fac) > 1:
            base = f"({base})"
        pieces.append(base if k == 1 else f"{base}^{k}")
    return pieces


def _canonical(num: IntPoly, den: IntPoly):
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return ZERO, ONE
    g = ip_gcd(num, den)
    if g != ONE:
        num, den = ip_exact_div(num, g), ip_exact_div(den, g)
    if den[-1] < 0:
        num, den = ip_neg(num), ip_neg(den)
    return num, den


def _add(a: LambdaRat, b: LambdaRat) -> LambdaRat:
    if not a.num:
        return b
    if not b.num:
        return a
    if a.den == b.den:
        if a.den == ONE:
            return LambdaRat(ip_add(a.num, b.num), ONE, _reduced=True)
        return LambdaRat(ip_add(a.num, b.num), a.den)
    g = ip_gcd(a.den, b.den)
    if g == ONE:
        # coprime denominators: the sum is already reduced
        num = ip_add(ip_mul(a.num, b.den), ip_mul(b.num, a.den))
        if not num:
            return LambdaRat()
        return LambdaRat(num, ip_mul(a.den, b.den), _reduced=True)
    ad, bd = ip_exact_div(a.den, g), ip_exact_div(b.den, g)
    t = ip_add(ip_mul(a.num, bd), ip_mul(b.num, ad))
    if not t:
        return LambdaRat()
    g2 = ip_gcd(t, g)
    if g2 != ONE:
        t = ip_exact_div(t, g2)
        den = ip_mul(ad, ip_exact_div(b.den, g2))
    else:
        den = ip_mul(ad, b.den)
    if den[-1] < 0:
        t, den = ip_neg(t), ip_neg(den)
    return LambdaRat(t, den, _reduced=True)


def _mul(a: LambdaRat, b: LambdaRat) -> LambdaRat:
    if not a.num or not b.num:
        return LambdaRat()
    an, ad, bn, bd = a.num, a.den, b.num, b.den
    if bd != ONE:
        g1 = ip_gcd(an, bd)
        if g1 != ONE:
            an, bd = ip_exact_div(an, g1), ip_exact_div(bd, g1)
    if ad != ONE:
        g2 = ip_gcd(bn, ad)
        if g2 != ONE:
            bn, ad = ip_exact_div(bn, g2), ip_exact_div(ad, g2)
    num, den = ip_mul(an, bn), ip_mul(ad, bd)
    if den[-1] < 0:
        num, den = ip_neg(num), ip_neg(den)
    return LambdaRat(num, den, _reduced=True)


# -- operation surface -------------------------------------------------------

LAMBDA = LambdaRat.lam()


def lr(value) -> LambdaRat:
    return LambdaRat.coerce(value)


def lr_arith(a: Scalarish, b: Scalarish, which: str) -> LambdaRat:
    a, b = lr(a), lr(b)
    if which == "add":
        return a + b
    if which == "sub":
        return a - b
    if which == "mul":
        return a * b
    if which == "div":
        return a / b
    raise ValueError(f"unknown operation {which!r}")


def lr_pow(a: Scalarish, k: int) -> LambdaRat:
    return lr(a) ** k


def lr_eval(a: Scalarish, v) -> Fraction:
    """Specialize lambda to the rational v."""
    return lr(a).evaluate(v)
