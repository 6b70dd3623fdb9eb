"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input data: out-of-range indices, mismatched shapes, bad references."""


class PreconditionError(ValueError):
    """A stated precondition of an operation does not hold."""


class TruncationError(ValueError):
    """A construction does not fit inside the requested arity cap."""


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured resource budget."""


class DocumentError(ValueError):
    """A document failed to parse or validate."""

    def __init__(self, message, *, path=None, position=None):
        self.path = path
        self.position = position
        where = ""
        if path is not None:
            where = f" at {path}"
        elif position is not None:
            where = f" at line {position[0]}, column {position[1]}"
        super().__init__(message + where)
