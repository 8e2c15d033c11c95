"""Exception types shared across the package."""


class FracdomError(Exception):
    """Base class for all package-specific errors."""


class GraphError(FracdomError, ValueError):
    """Invalid digraph construction or vertex-set argument."""


class LoopArc(GraphError):
    """An arc (v, v) was supplied; digraphs here are loopless."""


class DuplicateOrAntiparallel(GraphError):
    """Both (u, v) and (v, u), or a repeated arc, were supplied."""


class OutOfRange(GraphError):
    """A vertex index lies outside 0..n-1."""


class BadParameter(FracdomError, ValueError):
    """A generator or solver parameter violates its precondition."""


class EmptyGraph(FracdomError, ValueError):
    """The operation requires at least one vertex."""


class NotFeasible(FracdomError, ValueError):
    """A supplied weighting fails the feasibility check it claims."""


class TooLarge(FracdomError, RuntimeError):
    """An enumeration exceeded its configured family-size cap."""


class BudgetExceeded(FracdomError, RuntimeError):
    """A search or solve exceeded its configured work budget."""


class ParseError(FracdomError, ValueError):
    """Malformed input text; carries the 1-based offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
