"""Exception types shared across the package."""


class PlanequantError(Exception):
    """Base class for all package-specific errors."""


class RangeOverflowError(PlanequantError, OverflowError):
    """Raised when |z|^2 is too large for the direct (linear-scale) routines.

    The log-domain variants (``log_normalization_factor``,
    ``coherent_state_log``) remain usable in this regime.
    """


class DimensionMismatchError(PlanequantError, ValueError):
    """Raised when two objects with incompatible dimensions are combined."""


class QuadratureOrderError(PlanequantError, ValueError):
    """Raised when a quadrature rule is too small for the requested accuracy."""


class ConvergenceError(PlanequantError, RuntimeError):
    """Raised when an iterative eigenvalue computation fails to converge."""


class BracketError(PlanequantError, RuntimeError):
    """Raised when a bisection bracket does not enclose the requested root."""


class VerificationError(PlanequantError, RuntimeError):
    """Raised when a built-in mathematical invariant is violated."""
