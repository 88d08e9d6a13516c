"""Exception hierarchy shared by every ginv module."""


class GinvError(Exception):
    """Base class for errors raised by ginv."""


class ParseError(GinvError):
    """An input document could not be read or does not have the expected shape."""


class ValidationError(GinvError):
    """A matrix does not satisfy the standing assumptions on SFT adjacency matrices."""

    condition = "invalid"

    def __init__(self, message: str, *, factor: int | None = None):
        self.factor = factor
        if factor is not None:
            message = f"factor {factor}: {message}"
        super().__init__(message)

    def at(self, factor: int) -> "ValidationError":
        """Return a copy of this error located at the given factor index."""
        return type(self)(str(self), factor=factor)


class NotSquare(ValidationError):
    condition = "not-square"


class NegativeEntry(ValidationError):
    condition = "negative-entry"


class Reducible(ValidationError):
    condition = "reducible"


class PermutationMatrix(ValidationError):
    condition = "permutation-matrix"


class BoundExceeded(GinvError):
    """A finite search would exceed one of the configured bounds."""

    def __init__(self, bound: str, size: int, limit: int):
        self.bound = bound
        self.size = size
        self.limit = limit
        self.passed_filters: tuple[str, ...] = ()
        super().__init__(f"{bound} exceeded: {size} > {limit}")


class IncompatibleParameters(GinvError):
    """Two table elements live over different (n, k)."""


class CoordinateOutOfRange(GinvError):
    pass


class ArityMismatch(GinvError):
    pass


class RefinementDepthExceeded(GinvError):
    pass
