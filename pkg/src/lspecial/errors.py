"""Exception hierarchy shared by all modules."""


class LSpecialError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(LSpecialError, ZeroDivisionError):
    pass


class MixedBackend(LSpecialError, TypeError):
    """Exact and approximate values were combined without explicit promotion."""


class BackendError(LSpecialError, TypeError):
    pass


class ParseError(LSpecialError, ValueError):
    pass


class ZeroDenominator(ParseError):
    pass


class SpaceMismatch(LSpecialError, ValueError):
    pass


class NotDivisible(LSpecialError, ArithmeticError):
    def __init__(self, message="not divisible", remainder=None):
        super().__init__(message)
        self.remainder = remainder


class DivisionByZeroPoly(LSpecialError, ZeroDivisionError):
    pass


class ZeroPolynomial(LSpecialError, ValueError):
    pass


class BetaOutOfRange(LSpecialError, ValueError):
    pass


class NotDiagonal(LSpecialError, ValueError):
    pass


class NoSignChange(LSpecialError, ValueError):
    pass


class ToleranceUnreachable(LSpecialError, ArithmeticError):
    pass


class VerificationFailed(LSpecialError, AssertionError):
    def __init__(self, check, residual=None, tol=None, message=None):
        if message is None:
            message = f"check {check!r} failed: residual {residual:.3e} > {tol:.1e}"
        super().__init__(message)
        self.check = check
        self.residual = residual
        self.tol = tol


class NotHomogeneous(LSpecialError, ValueError):
    pass


class NotPositiveOnCircle(LSpecialError, ValueError):
    pass


class IoError(LSpecialError, OSError):
    pass
