"""Simple undirected graphs on positive integer vertex labels.

The adjacency of a :class:`Graph` is a dense boolean numpy matrix whose rows
are indexed by position in the sorted label list, so neighbourhoods and clique
tests are row and sub-matrix lookups.
"""
import itertools
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy
import scipy.sparse
import scipy.sparse.csgraph

from .errors import DuplicateLabel, LoopEdge, UnknownEndpoint, UnknownVertex

logger = logging.getLogger(__name__)

VertexId = int
VertexSet = FrozenSet[int]
Edge = Tuple[int, int]


def check_label(label) -> int:
    # exact type test: True and False are not vertices
    if type(label) not in [int, numpy.int64, numpy.int32]:
        raise TypeError('vertex labels must be int, got ' + repr(label))
    if label < 1:
        raise ValueError('vertex labels must be positive, got '
                         + str(label))
    return int(label)


def canonical_key(members: Iterable[int]) -> Tuple[int, ...]:
    """Sort key of a vertex set: its members as an ascending tuple."""
    return tuple(sorted(members))


def _bron_kerbosch(adjacency: numpy.ndarray) -> List[FrozenSet[int]]:
    """Maximal cliques of a boolean adjacency matrix, as sets of indices.

    Bron--Kerbosch with the Tomita pivot (the pivot has the most neighbours
    among the candidates). The matrix diagonal must be False.
    """
    size = adjacency.shape[0]
    neighbours = [frozenset(int(u) for u in numpy.nonzero(adjacency[v])[0])
                  for v in range(size)]
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: (len(p & neighbours[u]), -u))
        for v in sorted(p - neighbours[pivot]):
            expand(r | {v}, p & neighbours[v], x & neighbours[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), frozenset(range(size)), frozenset())
    return cliques


class Graph:
    """A simple graph: no loops, no multiple edges.

    Vertex labels are arbitrary positive integers, so whisker vertices with
    labels above the base range can live next to the base vertices. Graphs
    are immutable once built.
    """
    def __init__(self, labels: Iterable[int],
                 edges: Iterable[Sequence[int]] = ()):
        """Builds a graph from its vertex labels and edge list.

        Repeated edges ({1, 2} and {2, 1}) are merged.

        Args:
            labels (iterable of int): the distinct, positive vertex labels
            edges (iterable of pairs of int): the edges; both endpoints
                must be listed in ``labels``

        Raises:
            DuplicateLabel: a label is repeated
            UnknownEndpoint: an edge endpoint is not a label
            LoopEdge: an edge joins a vertex to itself
        """
        labels = [check_label(v) for v in labels]
        if len(set(labels)) != len(labels):
            repeated = sorted(v for v in set(labels) if labels.count(v) > 1)
            raise DuplicateLabel('repeated vertex labels: ' + str(repeated))
        self.__labels = tuple(sorted(labels))
        self.__index = {v: i for i, v in enumerate(self.__labels)}
        adjacency = numpy.zeros((len(labels), len(labels)), dtype=bool)
        for edge in edges:
            edge = tuple(edge)
            if len(edge) != 2:
                raise ValueError('an edge must have exactly two endpoints, '
                                 'got ' + repr(edge))
            u, v = edge
            for w in (u, v):
                if w not in self.__index:
                    raise UnknownEndpoint('edge ' + repr(edge)
                                          + ' has unknown endpoint '
                                          + repr(w))
            if u == v:
                raise LoopEdge('loop at vertex ' + str(u))
            adjacency[self.__index[u], self.__index[v]] = True
            adjacency[self.__index[v], self.__index[u]] = True
        adjacency.setflags(write=False)
        self.__adjacency = adjacency

    @classmethod
    def from_adjacency(cls, labels: Sequence[int],
                       adjacency: numpy.ndarray) -> 'Graph':
        """Builds a graph from sorted labels and a symmetric boolean matrix.
        """
        rows, cols = numpy.nonzero(numpy.triu(adjacency, k=1))
        return cls(labels, [(labels[i], labels[j]) for i, j in
                            zip(rows.tolist(), cols.tolist())])

    def __len__(self) -> int:
        """Returns the number of vertices."""
        return len(self.__labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.__labels == other.labels
                and numpy.array_equal(self.__adjacency, other.adjacency))

    def __hash__(self):
        return hash((self.__labels, tuple(self.edges)))

    def __repr__(self):
        return ('Graph(' + repr(list(self.__labels)) + ', '
                + repr([list(e) for e in self.edges]) + ')')

    def __str__(self):
        return self.name

    @property
    def name(self) -> str:
        """str: a label built from the vertex and edge counts."""
        return ('Graph-' + str(len(self)) + 'vertices-'
                + str(len(self.edges)) + 'edges')

    @property
    def labels(self) -> Tuple[int, ...]:
        """tuple of int: the vertex labels in ascending order."""
        return self.__labels

    @property
    def vertices(self) -> VertexSet:
        """frozenset of int: the vertex set."""
        return frozenset(self.__labels)

    @property
    def n_vertices(self) -> int:
        return len(self.__labels)

    @property
    def adjacency(self) -> numpy.ndarray:
        """numpy.ndarray: the read-only boolean adjacency matrix; row and
        column ``i`` belong to ``labels[i]``."""
        return self.__adjacency

    @property
    def edges(self) -> List[Edge]:
        """list of (int, int): the edges as ``(u, v)`` with ``u < v``, in
        ascending order."""
        rows, cols = numpy.nonzero(numpy.triu(self.__adjacency, k=1))
        return [(self.__labels[i], self.__labels[j])
                for i, j in zip(rows.tolist(), cols.tolist())]

    def index_of(self, vertex: int) -> int:
        """Returns the row of ``vertex`` in the adjacency matrix.

        Raises:
            UnknownVertex: ``vertex`` is not in the graph
        """
        try:
            return self.__index[vertex]
        except KeyError:
            raise UnknownVertex('vertex ' + repr(vertex)
                                + ' is not in the graph') from None

    def _indices(self, vertices: Iterable[int]) -> List[int]:
        return sorted(self.index_of(v) for v in set(vertices))

    def _to_labels(self, indices: Iterable[int]) -> VertexSet:
        return frozenset(self.__labels[i] for i in indices)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.__adjacency[self.index_of(u), self.index_of(v)])

    def neighbourhood(self, vertex: int) -> VertexSet:
        """Returns N(v), the vertices adjacent to ``vertex``."""
        row = self.__adjacency[self.index_of(vertex)]
        return self._to_labels(numpy.nonzero(row)[0].tolist())

    def closed_neighbourhood(self, vertex: int) -> VertexSet:
        """Returns N[v] = N(v) together with ``vertex`` itself."""
        return self.neighbourhood(vertex) | {vertex}

    def induced_subgraph(self, vertices: Iterable[int]) -> 'Graph':
        """Returns G_W, the graph on W with every edge of G inside W.

        Args:
            vertices (iterable of int): the subset W of the vertex set

        Raises:
            UnknownVertex: W is not a subset of the vertex set
        """
        keep = self._indices(vertices)
        sub = self.__adjacency[numpy.ix_(keep, keep)]
        return Graph.from_adjacency([self.__labels[i] for i in keep], sub)

    def complement(self) -> 'Graph':
        """Returns the graph on the same vertices with the non-edges as edges.
        """
        flipped = ~self.__adjacency
        numpy.fill_diagonal(flipped, False)
        return Graph.from_adjacency(self.__labels, flipped)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """True iff every two distinct vertices of the set are adjacent.

        The empty set and singletons are cliques.

        Raises:
            UnknownVertex: the set is not a subset of the vertex set
        """
        keep = self._indices(vertices)
        block = self.__adjacency[numpy.ix_(keep, keep)]
        return int(block.sum()) == len(keep) * (len(keep) - 1)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """True iff no edge has both endpoints in the set."""
        keep = self._indices(vertices)
        return not self.__adjacency[numpy.ix_(keep, keep)].any()

    def is_vertex_cover(self, vertices: Iterable[int]) -> bool:
        """True iff every edge has at least one endpoint in the set."""
        rest = sorted(set(range(len(self))) - set(self._indices(vertices)))
        return not self.__adjacency[numpy.ix_(rest, rest)].any()

    def perfect_elimination_order(self) -> Optional[List[int]]:
        """Returns a perfect elimination order, or None if there is none.

        A candidate order comes from maximum cardinality search (the reverse
        of the visiting order). It is then checked: each vertex's neighbours
        later in the order must form a clique. A graph has a perfect
        elimination order iff it is chordal.
        """
        size = len(self)
        weight = numpy.zeros(size, dtype=int)
        numbered = numpy.zeros(size, dtype=bool)
        visited = []
        for _ in range(size):
            # ties go to the smallest index, so the order is deterministic
            v = int(numpy.argmax(numpy.where(numbered, -1, weight)))
            visited.append(v)
            numbered[v] = True
            weight[self.__adjacency[v] & ~numbered] += 1
        order = [self.__labels[v] for v in reversed(visited)]
        if not self.is_elimination_order(order):
            logger.debug('%s: maximum cardinality search order fails the '
                         'clique check', self.name)
            return None
        return order

    def is_elimination_order(self, order: Sequence[int]) -> bool:
        """True iff each vertex's later neighbours in ``order`` form a
        clique."""
        if sorted(order) != list(self.__labels):
            raise ValueError('order must list every vertex exactly once')
        position = {v: p for p, v in enumerate(order)}
        for v in order:
            later = [u for u in self.neighbourhood(v)
                     if position[u] > position[v]]
            if not self.is_clique(later):
                return False
        return True

    def is_chordal(self) -> Tuple[bool, Optional[List[int]]]:
        """Decides chordality: every cycle of length > 3 has a chord.

        Returns:
            (bool, list of int or None): the verdict, and on True a perfect
            elimination order certifying it
        """
        order = self.perfect_elimination_order()
        return order is not None, order

    def simplicial_vertices(self) -> VertexSet:
        """Returns the vertices whose neighbourhood is a clique."""
        return frozenset(v for v in self.__labels
                         if self.is_clique(self.neighbourhood(v)))

    def maximal_cliques(self) -> List[VertexSet]:
        """Returns the inclusion-maximal cliques, canonically sorted."""
        found = [self._to_labels(c) for c in
                 _bron_kerbosch(self.__adjacency)]
        return sorted(found, key=canonical_key)

    def maximal_independent_sets(self) -> List[VertexSet]:
        """Returns the inclusion-maximal independent sets.

        These are the maximal cliques of the complement graph, found by
        pivoting Bron--Kerbosch. The list is sorted by the ascending member
        tuples. The graph with no vertices has the single set {}.
        """
        flipped = ~self.__adjacency
        numpy.fill_diagonal(flipped, False)
        found = [self._to_labels(c) for c in _bron_kerbosch(flipped)]
        return sorted(found, key=canonical_key)

    def independent_sets(self) -> List[VertexSet]:
        """Returns every independent set, the empty set included, sorted by
        size and then by ascending member tuple."""
        found = set()
        for s in self.maximal_independent_sets():
            for size in range(len(s) + 1):
                found.update(frozenset(c) for c in
                             itertools.combinations(sorted(s), size))
        return sorted(found, key=lambda s: (len(s), canonical_key(s)))

    def minimal_vertex_covers(self) -> List[VertexSet]:
        """Returns the minimal vertex covers: the complements of the maximal
        independent sets, canonically sorted."""
        covers = [self.vertices - s for s in self.maximal_independent_sets()]
        return sorted(covers, key=canonical_key)

    def is_unmixed(self) -> bool:
        """True iff all minimal vertex covers have the same size."""
        return len({len(c) for c in self.minimal_vertex_covers()}) == 1

    def is_connected(self) -> bool:
        """True iff there is a walk between any two vertices.

        The graph with no vertices is not connected.
        """
        if len(self) == 0:
            return False
        matrix = scipy.sparse.csr_matrix(self.__adjacency.astype(numpy.int8))
        count, _ = scipy.sparse.csgraph.connected_components(
            matrix, directed=False)
        return count == 1

    def is_tree(self) -> bool:
        """True iff the graph is connected and has no cycles."""
        return self.is_connected() and len(self.edges) == len(self) - 1


def complete_graph(labels: Iterable[int]) -> Graph:
    """Returns K_m on the given labels."""
    labels = list(labels)
    return Graph(labels, itertools.combinations(labels, 2))


def cycle_graph(length: int) -> Graph:
    """Returns the cycle 1 - 2 - ... - length - 1 (length >= 3)."""
    if length < 3:
        raise ValueError('a cycle needs at least 3 vertices')
    labels = list(range(1, length + 1))
    return Graph(labels, [(v, v % length + 1) for v in labels])


def path_graph(length: int) -> Graph:
    """Returns the path 1 - 2 - ... - length."""
    labels = list(range(1, length + 1))
    return Graph(labels, [(v, v + 1) for v in labels[:-1]])
