"""Exception types shared across the package."""


class SizeGuardError(ValueError):
    """Raised when a dense construction would exceed the desk-scale size limits."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class TensorFormatError(ValueError):
    """Malformed tensor or family description (JSON or array input)."""


class ConventionError(RuntimeError):
    """No unique spectral convention could be selected.

    ``table`` maps convention name to the list of residuals that was
    evaluated, so callers can report it instead of silently picking one.
    """

    def __init__(self, message, table):
        self.table = table
        super().__init__(message)
