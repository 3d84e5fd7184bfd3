"""Series acting on polynomials: the pairing, operators, associated sequences
and the transfer formula."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import List, Sequence

from .errors import NotDelta, TruncationMismatch
from .poly import Poly
from .scalar import LambdaRat
from .series import Series, ShefferPair, comp_inverse, delta_quotient

_ZERO = LambdaRat()


def _need(f: Series, p: Poly):
    if f.trunc < p.degree:
        raise TruncationMismatch(
            f"series known to t^{f.trunc} cannot act on a degree {p.degree} polynomial"
        )


def pairing(f: Series, p: Poly) -> LambdaRat:
    """<f(t) | p(x)> = sum_k k! [t^k]f * [x^k]p."""
    _need(f, p)
    acc = _ZERO
    for k, c in enumerate(p.coeffs):
        if not c.is_zero() and not f.coeffs[k].is_zero():
            acc = acc + f.coeffs[k] * c * factorial(k)
    return acc


def apply_op(f: Series, p: Poly) -> Poly:
    """f(t) p(x), with t acting as d/dx."""
    _need(f, p)
    out = Poly()
    deriv = p
    for k in range(p.degree + 1):
        c = f.coeffs[k]
        if not c.is_zero():
            out = out + deriv.scale(c)
        deriv = deriv.derivative(1)
    return out


@dataclass(frozen=True)
class AssociatedFamily:
    f: Series
    polys: tuple

    def __getitem__(self, k: int) -> Poly:
        return self.polys[k]

    def __len__(self):
        return len(self.polys)


def associated_by_inverse(f: Series, n: int) -> AssociatedFamily:
    """p_0..p_n associated to f, read off e^(x fbar(t)).

    [x^j] p_k = (k!/j!) [t^k] fbar(t)^j.
    """
    if f.order() != 1:
        raise NotDelta("associated sequences need a delta series")
    if f.trunc < n:
        raise TruncationMismatch(f"need t^{n} but the series stops at t^{f.trunc}")
    f = f.truncate(n)
    fbar = comp_inverse(f)
    powers = [Series.const(1, n)]
    for _ in range(n):
        powers.append(powers[-1] * fbar)
    polys = []
    for k in range(n + 1):
        kf = factorial(k)
        polys.append(
            Poly(powers[j].coeffs[k] * (kf // factorial(j)) for j in range(k + 1))
        )
    return AssociatedFamily(f, tuple(polys))


def transfer(f: Series, g: Series, p_n: Poly, n: int) -> Poly:
    """q_n = x (f/g)^n x^(-1) p_n, taking the f-family member to the g-family."""
    if f.order() != 1 or g.order() != 1:
        raise NotDelta("transfer needs two delta series")
    if n == 0:
        return Poly.const(1)
    ratio = delta_quotient(f, g) ** n
    return apply_op(ratio, p_n.divide_by_x()).mul_x()


def _biorthogonal(g: Series, f: Series, polys: Sequence[Poly]) -> bool:
    n = len(polys)
    top = max((p.degree for p in polys), default=0)
    if f.trunc < top:
        raise TruncationMismatch("series truncated below the polynomial degrees")
    power = g
    for k in range(n):
        for m, p in enumerate(polys):
            expected = factorial(m) if m == k else 0
            if pairing(power, p) != expected:
                return False
        power = power * f
    return True


def is_associated(f: Series, polys: Sequence[Poly]) -> bool:
    return _biorthogonal(Series.const(1, f.trunc), f, polys)


def is_sheffer(pair: ShefferPair, polys: Sequence[Poly]) -> bool:
    return _biorthogonal(pair.g, pair.f, polys)


def pairing_matrix(g: Series, f: Series, polys: Sequence[Poly]) -> List[List[LambdaRat]]:
    """Entries <g f^k | p_m> for k, m < len(polys)."""
    rows = []
    power = g
    for _ in range(len(polys)):
        rows.append([pairing(power, p) for p in polys])
        power = power * f
    return rows
