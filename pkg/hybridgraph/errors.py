"""Exceptions raised by hybridgraph.

Every domain error derives from :class:`HybridGraphError`, which is a
``ValueError``: a bad graph, complex or spec is a bad value. Wrong argument
types still raise a plain ``TypeError``.
"""


class HybridGraphError(ValueError):
    """Base class of all hybridgraph domain errors."""


class DuplicateLabel(HybridGraphError):
    """A vertex label was given more than once."""


class UnknownEndpoint(HybridGraphError):
    """An edge endpoint is not one of the graph's vertices."""


class LoopEdge(HybridGraphError):
    """An edge joins a vertex to itself."""


class UnknownVertex(HybridGraphError):
    """A vertex set mentions a vertex outside the graph or universe."""


class UncoveredVertex(HybridGraphError):
    """A universe vertex lies in no facet of a complex."""


class EmptyInput(HybridGraphError):
    """No facets were given to build a complex from."""


class NotAFacet(HybridGraphError):
    """The given set is not a facet of the complex."""


class NotAPermutation(HybridGraphError):
    """A facet order does not list every facet exactly once."""


class NotPure(HybridGraphError):
    """The operation needs a pure complex."""


class BudgetExhausted(HybridGraphError):
    """The shelling search ran out of nodes before reaching a verdict.

    This is not a negative answer: the complex may still be shellable.
    """


class PartsNotPartition(HybridGraphError):
    """The parts A_1, ..., A_r do not partition the base vertex set."""


class PartNotClique(HybridGraphError):
    """A part A_i is not a clique of the base graph."""


class EmptyWhiskerSet(HybridGraphError):
    """A whisker set B_i is empty."""


class LabelCollision(HybridGraphError):
    """Whisker labels clash with each other or with base vertices."""


class ParseError(HybridGraphError):
    """An input file does not match the expected schema."""
