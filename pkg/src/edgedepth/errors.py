"""Exception types shared across the package."""


class EdgeDepthError(Exception):
    """Base class for all errors raised by :mod:`edgedepth`."""


class InvalidArgument(EdgeDepthError, ValueError):
    """An argument is outside the documented domain of an operation."""


class PreconditionFailed(EdgeDepthError):
    """A structural hypothesis of a theorem-backed routine does not hold."""


class BudgetExceeded(EdgeDepthError):
    """An exhaustive computation would exceed a configured cap.

    The computation is abandoned; no partial or approximate answer is returned.
    """

    def __init__(self, what: str, limit: int, observed: int | None = None):
        self.what = what
        self.limit = limit
        self.observed = observed
        msg = f"{what} exceeds cap {limit}"
        if observed is not None:
            msg += f" (reached {observed})"
        super().__init__(msg)


class UnsupportedFamily(EdgeDepthError):
    """No closed-form depth formula is available for the requested graph."""
