"""Exception types shared across the package."""


class InputError(ValueError):
    """A value does not satisfy the precondition of the operation it was passed to."""


class UnsupportedParameterError(ValueError):
    """The (family, n, k) combination is outside what the construction defines."""


class ConsistencyError(RuntimeError):
    """An internal identity that must always hold was violated."""
