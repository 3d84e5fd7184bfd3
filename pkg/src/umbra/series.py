"""Truncated formal power series in t over Q(lambda).

A :class:`Series` carries its truncation order N: coefficients of t^0..t^N are
known exactly and everything beyond is unknown.  Operations never extend
precision; combining series of different orders is an error, callers must
``truncate`` explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import NotDelta, NotInvertible, TruncationMismatch
from .poly import join_terms
from .scalar import LambdaRat, lr

_ZERO = LambdaRat()
_ONE = LambdaRat.coerce(1)


class Series:
    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Sequence, trunc: int):
        if trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = [lr(c) for c in coeffs[: trunc + 1]]
        cs.extend([_ZERO] * (trunc + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.trunc = trunc

    @classmethod
    def const(cls, c, trunc: int) -> "Series":
        return cls([c], trunc)

    @classmethod
    def t(cls, trunc: int, power: int = 1) -> "Series":
        return cls([0] * power + [1], trunc)

    def __getitem__(self, k: int) -> LambdaRat:
        if k > self.trunc:
            raise TruncationMismatch(f"t^{k} is beyond the truncation order {self.trunc}")
        return self.coeffs[k]

    def order(self) -> int:
        """Index of the first nonzero coefficient; trunc + 1 if none is known."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return self.trunc + 1

    def truncate(self, n: int) -> "Series":
        if n > self.trunc:
            raise TruncationMismatch(f"cannot raise precision from {self.trunc} to {n}")
        return Series(self.coeffs[: n + 1], n)

    def _check(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.trunc != self.trunc:
            raise TruncationMismatch(f"truncation orders differ: {self.trunc} vs {other.trunc}")

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            self._check(other)
            return other
        return Series.const(lr(other), self.trunc)

    def __add__(self, other):
        other = self._lift(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return Series([-a for a in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = lr(other)
            return Series([c * a for a in self.coeffs], self.trunc)
        self._check(other)
        n = self.trunc
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * (n + 1)
        for i in range(n + 1):
            if a[i].is_zero():
                continue
            for j in range(n + 1 - i):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + a[i] * b[j]
        return Series(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        a = self.coeffs
        if a[0].is_zero():
            raise NotInvertible("constant term is zero")
        inv0 = a[0].inverse()
        b = [inv0]
        for k in range(1, self.trunc + 1):
            acc = _ZERO
            for j in range(1, k + 1):
                if not a[j].is_zero():
                    acc = acc + a[j] * b[k - j]
            b.append(-(acc * inv0))
        return Series(b, self.trunc)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return self * lr(other).inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Series.const(1, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def compose(self, inner: "Series") -> "Series":
        """self(inner(t)), by Horner's rule over inner."""
        self._check(inner)
        if not inner.coeffs[0].is_zero():
            raise NotDelta("inner series has a nonzero constant term")
        acc = Series.const(self.coeffs[-1], self.trunc)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + c
        return acc

    def coeff_fact(self, k: int) -> LambdaRat:
        """Umbral coefficient a_k = k! [t^k]."""
        return self[k] * factorial(k)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.trunc))

    def render(self, var: str = "t") -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            terms.append((c, "" if k == 0 else (var if k == 1 else f"{var}^{k}")))
        return f"{join_terms(terms)} + O({var}^{self.trunc + 1})"

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [c.render() for c in self.coeffs]}

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Series({self.render()!r})"


@dataclass(frozen=True)
class ShefferPair:
    """(g, f) with g invertible and f a delta series."""

    g: Series
    f: Series

    def __post_init__(self):
        if self.g.trunc != self.f.trunc:
            raise TruncationMismatch("g and f must share a truncation order")
        if self.g.coeffs[0].is_zero():
            raise NotInvertible("g must have a nonzero constant term")
        if self.f.order() != 1:
            raise NotDelta("f must have order exactly 1")


# -- operation surface -------------------------------------------------------


def ser_arith(a: Series, b: Series, which: str) -> Series:
    a._check(b)
    if which == "add":
        return a + b
    if which == "sub":
        return a - b
    if which == "mul":
        return a * b
    raise ValueError(f"unknown operation {which!r}")


def ser_inverse(a: Series) -> Series:
    return a.inverse()


def ser_compose(outer: Series, inner: Series) -> Series:
    return outer.compose(inner)


def ser_pow(a: Series, k: int) -> Series:
    return a**k


def delta_quotient(num: Series, den: Series) -> Series:
    """num / den for series sharing a power of t; truncation drops by ord(den)."""
    num._check(den)
    d = den.order()
    if d > den.trunc:
        raise NotInvertible("denominator vanishes up to the truncation order")
    if num.order() < d:
        raise NotInvertible("quotient would have negative order")
    n = num.trunc - d
    top = Series(num.coeffs[d:], n)
    bottom = Series(den.coeffs[d:], n)
    return top * bottom.inverse()


def comp_inverse(f: Series) -> Series:
    """Compositional inverse of a delta series by Lagrange inversion.

    [t^n] fbar = (1/n) [t^(n-1)] (t / f)^n.
    """
    if f.order() != 1:
        raise NotDelta("compositional inverse needs a series of order exactly 1")
    n = f.trunc
    out = [_ZERO] * (n + 1)
    if n == 0:
        return Series(out, 0)
    h = delta_quotient(Series.t(n), f)
    power = Series.const(1, n - 1)
    for k in range(1, n + 1):
        power = power * h
        out[k] = power.coeffs[k - 1] * Fraction(1, k)
    return Series(out, n)


def exp_series(y, trunc: int) -> Series:
    """e^(y t) up to t^trunc."""
    y = lr(y)
    coeffs = [_ONE]
    for k in range(1, trunc + 1):
        coeffs.append(coeffs[-1] * y * Fraction(1, k))
    return Series(coeffs, trunc)


def log1p_series(trunc: int) -> Series:
    """log(1 + t)."""
    return Series([0] + [Fraction((-1) ** (k - 1), k) for k in range(1, trunc + 1)], trunc)


def coeff_fact(a: Series, k: int) -> LambdaRat:
    return a.coeff_fact(k)
