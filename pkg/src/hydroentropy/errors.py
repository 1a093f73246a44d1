"""Exception types raised across the package."""


class DomainError(ValueError):
    """Argument outside the documented domain of a function."""


class ConvergenceError(RuntimeError):
    """An iterative procedure (series, quadrature, search) did not converge."""


class BracketError(ValueError):
    """A root search was started on an interval without a sign change."""
