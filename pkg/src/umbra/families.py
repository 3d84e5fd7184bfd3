"""Concrete polynomial families and number sequences.

Most families have two independent routes (a generating function pushed
through the umbral machinery, and a closed form or recurrence) so the
identity engine and the tests can play them against each other.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterator, Tuple

from .errors import BadParameter
from .poly import Poly, falling_factorial, x_pow
from .scalar import LAMBDA, LambdaRat, lr
from .series import Series, exp_series
from .umbral import apply_op

# -- generating series -------------------------------------------------------


def exp_minus_lambda(trunc: int) -> Series:
    """e^t - lambda."""
    return exp_series(1, trunc) - LAMBDA


def exp_minus_one(trunc: int) -> Series:
    return exp_series(1, trunc) - 1


def frobenius_euler_base(trunc: int) -> Series:
    """(1 - lambda) / (e^t - lambda)."""
    return exp_minus_lambda(trunc).inverse() * (1 - LAMBDA)


def bernoulli_base(trunc: int) -> Series:
    """t / (e^t - 1), the reciprocal of sum t^k/(k+1)!."""
    return Series([Fraction(1, factorial(k + 1)) for k in range(trunc + 1)], trunc).inverse()


def abel_delta(b, trunc: int) -> Series:
    """t e^(b t)."""
    return Series.t(trunc) * exp_series(b, trunc)


def fe_delta(a: int, trunc: int) -> Series:
    """t ((e^t - lambda) / (1 - lambda))^a."""
    return Series.t(trunc) * frobenius_euler_base(trunc) ** (-a)


def t_lambda_delta(trunc: int) -> Series:
    """t (e^t - lambda)."""
    return Series.t(trunc) * exp_minus_lambda(trunc)


def t_poly_delta(trunc: int) -> Series:
    """t / (1 + lambda (1 + t))."""
    return Series.t(trunc) * Series([1 + LAMBDA, LAMBDA], trunc).inverse()


def s_poly_delta(mu: int, trunc: int) -> Series:
    """t / (1 + t)^mu."""
    return Series.t(trunc) * Series([1, 1], trunc) ** (-mu)


def changhee_g(trunc: int) -> Series:
    """1 + lambda e^t."""
    return exp_series(1, trunc) * LAMBDA + 1


# -- family tags -------------------------------------------------------------


class FamilyName(Enum):
    FROBENIUS_EULER = "frobenius-euler"
    BERNOULLI = "bernoulli"
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"
    ABEL = "abel"
    CHANGHEE2 = "changhee2"
    T_POLY = "t-poly"
    S_POLY = "s-poly"
    FROBENIUS_EULER_NUMBER = "fe-number"
    BERNOULLI_NUMBER = "bernoulli-number"


@dataclass(frozen=True)
class FamilyTag:
    name: FamilyName
    params: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        p = self.params
        if self.name is FamilyName.ABEL and Fraction(p.get("b", 0)) == 0:
            raise BadParameter("Abel polynomials need b != 0")
        if self.name is FamilyName.S_POLY and int(p.get("mu", 0)) < 1:
            raise BadParameter("S_n(x|mu) needs mu >= 1")
        for key in ("n", "l"):
            if key in p and int(p[key]) < 0:
                raise BadParameter(f"{key} must be nonnegative")


# -- Stirling numbers --------------------------------------------------------


class _Triangle:
    """Lazily grown triangle of integers, safe to share between threads."""

    def __init__(self, rule):
        self._rule = rule
        self._rows = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int):
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    prev = self._rows[-1]
                    self._rows.append(self._rule(len(self._rows), prev))
        return self._rows[n]


def _stirling2_row(n, prev):
    # S2(n, k) = k S2(n-1, k) + S2(n-1, k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < len(prev) else 0) + prev[k - 1]
    return row


def _stirling1_row(n, prev):
    # S1(n, k) = S1(n-1, k-1) - (n-1) S1(n-1, k)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] - (n - 1) * (prev[k] if k < len(prev) else 0)
    return row


_S2 = _Triangle(_stirling2_row)
_S1 = _Triangle(_stirling1_row)


def stirling2(l: int, n: int) -> int:
    """Stirling number of the second kind S2(l, n)."""
    if l < 0 or n < 0:
        raise BadParameter("Stirling indices must be nonnegative")
    if n > l:
        return 0
    return _S2.row(l)[n]


def stirling1(n: int, l: int) -> int:
    """Signed Stirling number of the first kind: [x^l] (x)_n."""
    if l < 0 or n < 0:
        raise BadParameter("Stirling indices must be nonnegative")
    if l > n:
        return 0
    return _S1.row(n)[l]


def stirling2_by_series(l: int, n: int) -> LambdaRat:
    """(l!/n!) [t^l] (e^t - 1)^n."""
    if n > l:
        return LambdaRat()
    return exp_minus_one(l).__pow__(n).coeff_fact(l) * Fraction(1, factorial(n))


def stirling1_by_expansion(n: int, l: int) -> LambdaRat:
    return falling_factorial(n)[l]


# -- Frobenius-Euler and Bernoulli ------------------------------------------


@lru_cache(maxsize=None)
def frobenius_euler(n: int, alpha: int) -> Poly:
    """H_n^(alpha)(x|lambda) = ((1-lambda)/(e^t-lambda))^alpha x^n."""
    if n < 0:
        raise BadParameter("n must be nonnegative")
    return apply_op(frobenius_euler_base(n) ** alpha, x_pow(n))


def frobenius_euler_value(n: int, alpha: int) -> LambdaRat:
    """Frobenius-Euler number of order alpha, H_n^(alpha)(lambda)."""
    return frobenius_euler(n, alpha)[0]


@lru_cache(maxsize=None)
def frobenius_euler_number(n: int) -> LambdaRat:
    """H_n(lambda) = sum_l (1/(lambda-1))^l l! S2(n, l)."""
    if n < 0:
        raise BadParameter("n must be nonnegative")
    r = (LAMBDA - 1).inverse()
    acc = LambdaRat()
    for l in range(n + 1):
        s = stirling2(n, l)
        if s:
            acc = acc + r**l * (factorial(l) * s)
    return acc


def frobenius_euler_number_by_series(n: int) -> LambdaRat:
    return frobenius_euler_base(n).coeff_fact(n)


@lru_cache(maxsize=None)
def bernoulli_higher(n: int, alpha: int) -> Poly:
    """B_n^(alpha)(x) = (t/(e^t-1))^alpha x^n."""
    if n < 0:
        raise BadParameter("n must be nonnegative")
    return apply_op(bernoulli_base(n) ** alpha, x_pow(n))


def bernoulli_number(n: int, alpha: int) -> LambdaRat:
    """B_n^(alpha), the value of B_n^(alpha)(x) at x = 0."""
    return bernoulli_higher(n, alpha)[0]


# -- Abel, Changhee, t_n, S_n ------------------------------------------------


def abel(n: int, b) -> Poly:
    """A_n(x; b) = x (x - b n)^(n-1)."""
    b = Fraction(b)
    if b == 0:
        raise BadParameter("Abel polynomials need b != 0")
    if n < 0:
        raise BadParameter("n must be nonnegative")
    if n == 0:
        return Poly.const(1)
    return Poly.x() * Poly((-b * n, 1)) ** (n - 1)


@lru_cache(maxsize=None)
def changhee2(n: int) -> Poly:
    """C_n(x|lambda) = n! [t^n] (1+t)^x / (1 + lambda (1 + t)).

    (1+t)^x contributes (x)_k / k! at t^k; the reciprocal of
    (1+lambda) + lambda t contributes (-lambda)^j / (1+lambda)^(j+1).
    """
    if n < 0:
        raise BadParameter("n must be nonnegative")
    r = (1 + LAMBDA).inverse()
    out = Poly()
    for k in range(n + 1):
        j = n - k
        c = (-LAMBDA) ** j * r ** (j + 1) * Fraction(factorial(n), factorial(k))
        out = out + falling_factorial(k).scale(c)
    return out


@lru_cache(maxsize=None)
def t_poly(n: int) -> Poly:
    """t_n(x|lambda), closed double sum over a and b."""
    if n < 0:
        raise BadParameter("n must be nonnegative")
    if n == 0:
        return Poly.const(1)
    coeffs = [LambdaRat()] * (n + 1)
    for b in range(1, n + 1):
        acc = LambdaRat()
        for a in range(n + 1):
            w = comb(n, a) * comb(a, n - b)
            if w:
                acc = acc + LAMBDA**a * w
        coeffs[b] = acc * (factorial(n - 1) // factorial(b - 1))
    return Poly(coeffs)


def s_poly(n: int, mu: int) -> Poly:
    """S_n(x|mu) = sum_k C(mu n, n-k) (n-1)!/(k-1)! x^k."""
    if mu < 1:
        raise BadParameter("S_n(x|mu) needs mu >= 1")
    if n < 0:
        raise BadParameter("n must be nonnegative")
    if n == 0:
        return Poly.const(1)
    coeffs = [0] * (n + 1)
    for k in range(1, n + 1):
        coeffs[k] = comb(mu * n, n - k) * (factorial(n - 1) // factorial(k - 1))
    return Poly(coeffs)


# -- compositions ------------------------------------------------------------


def weak_compositions(l: int, n: int) -> Iterator[Tuple[int, ...]]:
    """n-tuples of nonnegative integers summing to l, lexicographic order."""
    if n < 1:
        raise BadParameter("need at least one part")
    if l < 0:
        return
    if n == 1:
        yield (l,)
        return
    for first in range(l + 1):
        for rest in weak_compositions(l - first, n - 1):
            yield (first,) + rest


def count_weak_compositions(l: int, n: int) -> int:
    return comb(l + n - 1, n - 1)


def multinomial(parts) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def composition_power_coeff(values, l: int, n: int) -> LambdaRat:
    """sum over l_1+..+l_n = l of multinomial(l; l_i) prod values[l_i].

    This is l! [t^l] (sum_k values[k] t^k / k!)^n.
    """
    acc = LambdaRat()
    for parts in weak_compositions(l, n):
        term = lr(multinomial(parts))
        for p in parts:
            term = term * values[p]
            if term.is_zero():
                break
        acc = acc + term
    return acc
