"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the evaluated function."""


class ConvergenceError(RuntimeError):
    """An iteration or quadrature failed to reach its tolerance."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ConsistencyError(ValueError):
    """Second-moment eigenvalues and parameter eigenvalues do not belong together."""


class MethodMismatchError(ValueError):
    """The requested closure method does not apply to the given orientation state."""
