"""Exception types shared across the package."""


class SteinitzError(Exception):
    """Base class for all library-specific errors."""


class FactorizationError(SteinitzError):
    """An integer could not be factored within the configured trial bound."""


class NotPrimeError(SteinitzError):
    """A value that must be a prime number is not."""


class DenominatorDoesNotDivideError(SteinitzError):
    """Scaling by a rational would force a negative prime exponent."""


class NotADivisorError(SteinitzError):
    """The requested matrix order does not divide the Steinitz number."""


class ZeroIdempotentError(SteinitzError):
    """The zero idempotent cuts out the zero corner, which has no matrix model."""


class SpanCapExceededError(SteinitzError):
    """A span computation was requested above the configured order cap."""


class ExpressionError(SteinitzError):
    """Base class for Steinitz expression text errors."""


class SteinitzSyntaxError(ExpressionError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicatePrimeError(ExpressionError):
    """The same prime occurs in more than one term."""


class DuplicateRestError(ExpressionError):
    """More than one 'rest' term in a single expression."""
