"""Exception hierarchy shared by every module."""


class TorsoidError(Exception):
    """Base class for all errors raised by the package."""


class PreconditionError(TorsoidError, ValueError):
    """The input violates a documented precondition."""


class NotMatchingCovered(PreconditionError):
    pass


class BoundExceeded(PreconditionError):
    """A brute-force enumeration would exceed the configured size bound."""


class InvariantError(TorsoidError, AssertionError):
    """An internal consistency check failed.

    Raised when a value that a theorem guarantees (a tight union, a matching
    covered collapse, ...) turns out not to hold; this indicates a bug rather
    than bad input.
    """
