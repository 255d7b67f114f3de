"""Exception types shared across the package."""


class DompackError(Exception):
    """Base class for all package-specific errors."""


class GraphError(DompackError, ValueError):
    """Invalid graph construction or graph operation."""


class VertexRangeError(GraphError):
    """A vertex index lies outside 0..n-1."""


class ParseError(DompackError, ValueError):
    """Malformed graph6 or edge-list input."""


class EmbeddingError(DompackError, ValueError):
    """A rotation system is inconsistent or not planar (genus > 0)."""


class PreconditionError(DompackError, ValueError):
    """A documented operation precondition was violated by the caller."""


class BudgetExceededError(DompackError, RuntimeError):
    """A search exceeded its explicit budget; distinct from a negative answer."""


class ConstructionError(DompackError, RuntimeError):
    """A constructive algorithm produced a certificate that failed revalidation."""


class GenerationBudgetError(DompackError, RuntimeError):
    """Rejection sampling exhausted its attempt budget."""
