"""Exception types shared across the package."""


class GraphletError(Exception):
    """Base class for all package errors."""


class EdgeListParseError(GraphletError):
    """Malformed edge-list input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphSizeError(GraphletError):
    """Operation refused because the graph exceeds a configured size cap."""


class ConsistencyError(GraphletError):
    """An internal identity failed (inexact division, negative count, cache
    mismatch). Signals an algorithm bug, never bad user input."""


class ClassificationError(GraphletError):
    """Invariant triple does not correspond to any 4-node graphlet."""
