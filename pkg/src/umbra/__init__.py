"""Exact umbral calculus over Q(lambda).

Formal power series, the umbral pairing, Sheffer and associated sequences and
the transfer formula, plus a registry of identities verified as exact
polynomial equalities.
"""

from .errors import (
    BadParameter,
    ConstantTermNonzero,
    DivisionByZero,
    NotDelta,
    NotInvertible,
    ParseError,
    PoleAtEvaluation,
    RangeTooLarge,
    TruncationMismatch,
)
from .poly import Poly, falling_factorial
from .scalar import LAMBDA, LambdaRat, lr
from .series import Series, ShefferPair, comp_inverse, exp_series

__all__ = [
    "BadParameter", "ConstantTermNonzero", "DivisionByZero", "NotDelta", "NotInvertible",
    "ParseError", "PoleAtEvaluation", "RangeTooLarge", "TruncationMismatch",
    "Poly", "falling_factorial", "LAMBDA", "LambdaRat", "lr",
    "Series", "ShefferPair", "comp_inverse", "exp_series",
]
