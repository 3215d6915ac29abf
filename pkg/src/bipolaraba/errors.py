"""Exceptions raised on purpose anywhere in the solver."""


class SolverError(Exception):
    """Base class for all deliberate failures."""


class ParseError(SolverError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyClause(ParseError):
    """A CNF clause with no literals. The reduction gadgets assume every
    clause has at least one literal, so this is rejected up front."""


class TooLarge(SolverError):
    """A size guard tripped before starting an exponential enumeration."""

    def __init__(self, what, value, limit):
        super().__init__(f"{what} is {value}, limit is {limit}")
        self.what = what
        self.value = value
        self.limit = limit


class CapExceeded(SolverError):
    """Argument construction exceeded the configured cap."""

    def __init__(self, cap, detail="argument cap exceeded"):
        super().__init__(f"{detail} (cap {cap})")
        self.cap = cap


class NotAnAssumption(SolverError):
    """An operation that only makes sense for assumptions got something else."""


class SupportsPresent(SolverError):
    """Plain AF semantics were requested for a framework with support edges."""
