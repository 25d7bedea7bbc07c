"""Exception types shared across the toolkit."""


class InvalidArgument(ValueError):
    """A caller supplied an argument that violates an operation's precondition."""


class ResourceLimit(RuntimeError):
    """A configured search cap was exceeded before an answer was reached."""

    def __init__(self, cap: str, limit: int, message: str | None = None):
        self.cap = cap
        self.limit = limit
        super().__init__(message or f"{cap} exceeded (limit {limit})")


class ParseError(InvalidArgument):
    """Malformed text input, located by 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class PreconditionError(InvalidArgument):
    """A gadget builder was called on a source instance it cannot accept."""
