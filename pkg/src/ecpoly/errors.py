"""Exception hierarchy shared by every module."""

from __future__ import annotations


class EcpolyError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(EcpolyError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


class OrderTooLarge(EcpolyError, ValueError):
    pass


class TooManyEdges(EcpolyError, ValueError):
    pass


class IsolatedVertex(EcpolyError, ValueError):
    pass


class ZeroPolynomial(EcpolyError, ValueError):
    pass


class ZeroOrUnitPolynomial(EcpolyError, ValueError):
    pass


class NotMonic(EcpolyError, ValueError):
    pass


class DeltaTooSmall(EcpolyError, ValueError):
    pass


class NonIntegerTerm(EcpolyError, ArithmeticError):
    """An identity produced a fraction where an integer was required."""


class OddOrder(EcpolyError, ValueError):
    pass


class OrderOutOfRange(EcpolyError, ValueError):
    pass
