"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: DomainError (and its subclass
DataConsistencyError) exit 1, DocumentError exits 2.
"""


class DomainError(ValueError):
    """Arguments lie outside an operation's mathematical domain."""


class DataConsistencyError(DomainError):
    """Inputs that cannot come from an actual canonical threefold.

    Raised when exact evaluation exposes the contradiction, e.g. a
    non-integral Euler characteristic or a nonpositive dual degree.
    """


class DocumentError(ValueError):
    """A malformed input document: bad JSON, bad field, bad rational string."""
