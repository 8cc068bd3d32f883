"""Exception types shared across the package."""


class NilgraphError(Exception):
    """Base class for all package errors."""


class GraphError(NilgraphError):
    """Base class for graph construction and validation errors."""


class GraphFormatError(GraphError):
    """Syntax error in the line-oriented graph format."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(GraphError):
    """Structural violation: undeclared vertex, duplicate edge
    triple, disallowed loop, or disconnected graph."""


class NonSimpleGraphError(NilgraphError):
    """Operation defined only for simple graphs (no loops or
    parallel edges)."""


class AmbiguousPathError(NilgraphError):
    """A label-induced subgraph branches or closes a cycle, so maximal
    same-labeled paths are not well defined."""


class NotSchreierError(NilgraphError):
    """Operation requires one in- and one out-edge per label at every
    vertex."""


class NotUniformError(NilgraphError):
    """Graph does not carry a uniform coloring."""


class DegreeMismatchError(NilgraphError):
    """Uniform graph whose degree differs from its number of labels."""


class DimensionTooLargeError(NilgraphError):
    """Symbolic determinant expansion refused above the configured bound."""


class BasisMismatchError(NilgraphError):
    """Vector refers to basis elements outside the algebra's basis."""
