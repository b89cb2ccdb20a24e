"""Exception types shared across the package."""


class HypergraphError(Exception):
    """Base class for all package errors."""


class EdgeWrongSize(HypergraphError):
    """An edge does not consist of exactly r distinct vertices."""


class VertexOutOfRange(HypergraphError):
    """A vertex id is negative or >= the vertex count."""


class DuplicateEdge(HypergraphError):
    """The same edge was supplied twice."""


class UniformityMismatch(HypergraphError):
    """Two hypergraphs with different uniformities were combined."""


class UniformityUnderflow(HypergraphError):
    """An operation would produce edges with fewer than one vertex."""


class NotAGraph(HypergraphError):
    """A 2-uniform hypergraph was required."""


class BadUniformity(HypergraphError):
    """A target uniformity below 2 was requested."""


class MalformedSpec(HypergraphError):
    """A pattern specification violates the grammar."""


class BadParameters(HypergraphError):
    """Parameters outside the documented domain of an operation."""


class TooLarge(HypergraphError):
    """An exact solver exceeded its configured size or node budget."""


class BudgetExceeded(HypergraphError):
    """A search exceeded its node budget before reaching a decision."""


class UnknownSuite(HypergraphError):
    """An unrecognized verification suite id."""


class HgParseError(HypergraphError):
    """Malformed .hg input."""
