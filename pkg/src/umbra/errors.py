"""Exception types raised across the package."""


class UmbraError(Exception):
    pass


class DivisionByZero(UmbraError, ZeroDivisionError):
    pass


class PoleAtEvaluation(UmbraError, ZeroDivisionError):
    """Specializing lambda hit a zero of the denominator."""


class ConstantTermNonzero(UmbraError, ValueError):
    pass


class TruncationMismatch(UmbraError, ValueError):
    pass


class NotInvertible(UmbraError, ValueError):
    pass


class NotDelta(UmbraError, ValueError):
    pass


class BadParameter(UmbraError, ValueError):
    pass


class RangeTooLarge(UmbraError, ValueError):
    pass


class ParseError(UmbraError, ValueError):
    pass
