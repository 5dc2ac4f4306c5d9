"""Exception types shared across the package."""


class TemporalBetweennessError(Exception):
    """Base class for all package-specific errors."""


class EdgeListParseError(TemporalBetweennessError):
    """A line of an edge-list input could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class EdgeListValidationError(TemporalBetweennessError):
    """Edge-list content violates a structural constraint (e.g. negative time)."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class PathCountOverflowError(TemporalBetweennessError):
    """A path/walk counter exceeded the 128-bit range instead of wrapping."""

    def __init__(self, source: int, dest: int):
        super().__init__(
            f"path counter exceeded 128 bits for pair ({source}, {dest})"
        )
        self.pair = (source, dest)

    def __reduce__(self):
        return (PathCountOverflowError, self.pair)


class ResourceLimitError(TemporalBetweennessError):
    """A guarded computation exceeded its configured resource budget."""


class WalkExplosionError(ResourceLimitError):
    """Walk reconstruction exceeded the queue-insertion budget for one pair."""

    def __init__(self, source: int, dest: int, limit: int):
        super().__init__(
            f"walk reconstruction for pair ({source}, {dest}) exceeded "
            f"{limit} queue insertions"
        )
        self.pair = (source, dest)
        self.limit = limit

    def __reduce__(self):
        return (WalkExplosionError, (*self.pair, self.limit))
