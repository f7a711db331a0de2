"""Exception types shared across the package."""


class CrestimateError(Exception):
    """Base class for all library errors."""


class ValidationError(CrestimateError, ValueError):
    """Invalid construction data or a violated precondition."""


class ZeroFunctionError(ValidationError):
    """Identically-zero input where a nonzero function is required."""


class ConvergenceError(CrestimateError, RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget."""
