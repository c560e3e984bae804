"""Exception types shared across the package."""


class CindexError(Exception):
    """Base class for all cindex errors."""


class ParseError(CindexError):
    """Malformed input data. Carries the offending row/line when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SchemaError(CindexError):
    """Invalid feature schema or input header."""


class ValidationError(CindexError):
    """Structurally parseable input that violates a corpus rule."""


class NotFoundError(CindexError):
    """Lookup of an author or publication that does not exist."""
