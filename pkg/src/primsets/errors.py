"""Exception types shared by every module."""


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class InvariantViolation(RuntimeError):
    """A proven property failed to hold.

    Raised when a check that a theorem guarantees comes out false.  This
    means either an implementation bug or a genuine counterexample, so it
    is never swallowed.
    """

    def __init__(self, message, *witnesses):
        super().__init__(message)
        self.witnesses = witnesses


class MalformedWitness(ValueError):
    """A replay record could not be interpreted."""
