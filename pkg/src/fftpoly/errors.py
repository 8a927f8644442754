"""Exception types raised when a transform's preconditions are violated."""


class FftError(Exception):
    """Base class for every error raised by this package."""


class SizeExceedsOrder(FftError, ValueError):
    """The polynomial has more coefficients than the transform length."""


class InvalidRoot(FftError, ValueError):
    """The supplied root is not a primitive root of the requested order."""


class NonInvertibleOrder(FftError, ArithmeticError):
    """The transform length 2^n is not invertible in the coefficient domain."""


class OrderUnavailable(FftError, ValueError):
    """The domain has no primitive root of the requested power-of-two order."""


class DomainMismatch(FftError, ValueError):
    """Operands live in different coefficient domains."""
