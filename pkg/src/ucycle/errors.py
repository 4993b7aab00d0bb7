"""Exception types shared across the package."""


class UcycleError(Exception):
    """Base class for every error raised by ucycle."""


class ParameterError(UcycleError, ValueError):
    """Unsupported (n, k) or other out-of-range argument."""


class PermutationError(UcycleError, ValueError):
    """A sequence that should be a k-permutation of [n] is not one."""


class DimensionError(UcycleError, ValueError):
    """Matrix shapes do not fit the requested operation."""


class BudgetExceeded(UcycleError, RuntimeError):
    """A size or count cap was hit.

    ``lower_bound`` holds the number of objects counted (or emitted) before
    the search stopped, when that is meaningful.
    """

    def __init__(self, message, lower_bound=None):
        super().__init__(message)
        self.lower_bound = lower_bound
