"""Exception types shared across the package."""


class RpdError(Exception):
    """Base class for all rpdlab errors."""


class DomainError(RpdError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class UnsupportedKernelError(RpdError, ValueError):
    """The kernel does not admit the requested operation (e.g. no even
    Taylor expansion at the origin, or a mixing measure without a finite
    fourth moment)."""


class DegenerateConfigurationError(RpdError, ValueError):
    """A point construction produced coincident points."""


class PrincipalValueError(RpdError, ValueError):
    """An atom sits exactly on a singular point of a transition integrand,
    so the value is not defined without a principal-value convention."""


class NumericalFailureError(RpdError, RuntimeError):
    """An iterative numerical method failed to converge.

    ``detail`` carries the diagnostic the method could report (for the
    eigensolver this is the residual off-diagonal norm).
    """

    def __init__(self, message: str, detail: float | None = None):
        super().__init__(message)
        self.detail = detail


class AccuracyError(NumericalFailureError):
    """A quadrature or summation hit its refinement cap before reaching the
    requested tolerance.  ``value`` and ``est_error`` hold the best estimate
    so callers may still inspect it."""

    def __init__(self, message: str, value: float, est_error: float):
        super().__init__(message, detail=est_error)
        self.value = value
        self.est_error = est_error


class SearchFailureError(RpdError, RuntimeError):
    """A parameter search (spacing doubling, witness scan) exhausted its
    budget.  ``best`` carries the best result found."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best
