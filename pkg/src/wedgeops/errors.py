"""Exception types shared across the package."""


class EdgeListParseError(ValueError):
    """Malformed or rejected edge-list input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ResourceLimitError(RuntimeError):
    """A configured size cap (incidence columns, oracle scale) was exceeded."""


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the target residual within the sweep budget."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class PartitionAssignmentError(ValueError):
    """A vertex could not be routed to any block under the deterministic rule."""


class InvariantViolation(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    Signals an implementation bug, never bad user input.
    """
