"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when an argument violates a mathematical hypothesis."""


class NumericsError(ArithmeticError):
    """Raised when a computation fails numerically (overflow, NaN, non-convergence)."""
