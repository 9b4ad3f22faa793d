"""Exception types shared by all modules."""


class DimensionMismatch(ValueError):
    pass


class InvalidSemigroup(ValueError):
    pass


class NotPointed(ValueError):
    """The cone spanned by the input contains a line."""


class BoundExceeded(RuntimeError):
    """A configured guard (box volume, iteration count, degree cap) was hit.

    ``partial`` carries whatever was computed before the guard fired; it is
    never certified.
    """

    def __init__(self, message, partial=None, guard=None):
        super().__init__(message)
        self.partial = partial
        self.guard = guard


class UncertifiedResult(RuntimeError):
    """An operation was handed a result whose completeness is not proven."""


class NotASystemOfParameters(ValueError):
    pass
