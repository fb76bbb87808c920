"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or an operation applied outside its domain."""


class DisconnectedGraphError(GraphError):
    """Operation requires a connected graph."""


class FormatError(GraphError):
    """Malformed graph or manifest file; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GenerationError(GraphError):
    """Generator could not produce a valid graph (e.g. connectivity retries exhausted)."""


class SolverTimeout(RuntimeError):
    """Exact search exceeded its time budget before producing an answer."""
