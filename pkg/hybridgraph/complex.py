"""Simplicial complexes stored by their facets, and shelling certificates.

A shelling order F_1, ..., F_t is checked in its pairwise form: for every
j < i there is a vertex x in F_i \\ F_j and an earlier facet F_k (k < i) with
F_i \\ F_k = {x}. Positions are 0-based throughout.
"""
import enum
import logging
from typing import (Dict, FrozenSet, Iterable, Iterator, List, NamedTuple,
                    Optional, Sequence, Tuple, Union)

from .errors import (BudgetExhausted, EmptyInput, NotAFacet, NotAPermutation,
                     NotPure, UncoveredVertex, UnknownVertex)
from .graph import Graph, VertexSet, canonical_key

logger = logging.getLogger(__name__)

#: Default number of search nodes :func:`find_shelling` may visit.
DEFAULT_NODE_BUDGET = 1_000_000

CM_VIA_SHELLING = 'Cohen-Macaulay (via shellability)'
CM_UNDETERMINED = 'CM undetermined by this tool'
CM_BUDGET_EXHAUSTED = 'CM undetermined (shelling search budget exhausted)'
NOT_CM_NOT_PURE = 'not Cohen-Macaulay (complex is not pure)'


class SimplicialComplex:
    """A simplicial complex given by its facets.

    Facets are kept as frozensets in canonical order (ascending member
    tuples). No facet contains another and every vertex lies in a facet.
    """
    def __init__(self, universe: Iterable[int], sets: Iterable[Iterable[int]]):
        """Builds the complex generated by ``sets``.

        Sets contained in another set are dropped, as are repeats. Every
        universe vertex must lie in some set.

        Args:
            universe (iterable of int): the labelled vertex universe
            sets (iterable of iterables of int): the generating faces

        Raises:
            UnknownVertex: a set has a vertex outside the universe
            EmptyInput: no sets were given
            UncoveredVertex: a universe vertex lies in no set
        """
        universe = frozenset(universe)
        candidates = {frozenset(s) for s in sets}
        if not candidates:
            raise EmptyInput('a complex needs at least one facet')
        for s in candidates:
            if not s <= universe:
                raise UnknownVertex('face ' + str(sorted(s))
                                    + ' leaves the vertex universe')
        facets = [s for s in candidates
                  if not any(s < other for other in candidates)]
        self.__facets = tuple(sorted(facets, key=canonical_key))
        covered = frozenset().union(*self.__facets)
        if covered != universe:
            raise UncoveredVertex('vertices ' + str(sorted(universe - covered))
                                  + ' lie in no facet')
        self.__vertices = tuple(sorted(universe))

    @classmethod
    def from_facets(cls, universe: Iterable[int],
                    sets: Iterable[Iterable[int]]) -> 'SimplicialComplex':
        """Same as the constructor; reads better at call sites."""
        return cls(universe, sets)

    def __len__(self) -> int:
        """Returns the number of facets."""
        return len(self.__facets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.__facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.__facets == other.facets
                and self.__vertices == other.vertices)

    def __hash__(self):
        return hash(self.__facets)

    def __repr__(self):
        return ('SimplicialComplex(' + repr(list(self.__vertices)) + ', '
                + repr([sorted(f) for f in self.__facets]) + ')')

    @property
    def facets(self) -> Tuple[VertexSet, ...]:
        """tuple of frozenset: the facets in canonical order."""
        return self.__facets

    @property
    def vertices(self) -> Tuple[int, ...]:
        """tuple of int: the vertex labels in ascending order."""
        return self.__vertices

    def dimension(self) -> int:
        """Returns max |F| - 1 over the facets (-1 for the complex {{}})."""
        return max(len(f) for f in self.__facets) - 1

    def is_pure(self) -> bool:
        """True iff all facets have the same cardinality."""
        return len({len(f) for f in self.__facets}) == 1

    def contains_face(self, face: Iterable[int]) -> bool:
        """True iff ``face`` lies inside some facet."""
        face = frozenset(face)
        return any(face <= f for f in self.__facets)

    def index_of(self, facet: Iterable[int]) -> int:
        """Returns the position of ``facet`` in :attr:`facets`.

        Raises:
            NotAFacet: ``facet`` is not a facet of the complex
        """
        facet = frozenset(facet)
        try:
            return self.__facets.index(facet)
        except ValueError:
            raise NotAFacet(str(sorted(facet)) + ' is not a facet') from None

    def free_vertices(self, facet: Iterable[int]) -> VertexSet:
        """Returns the vertices of ``facet`` that lie in no other facet.

        Raises:
            NotAFacet: ``facet`` is not a facet of the complex
        """
        position = self.index_of(facet)
        chosen = self.__facets[position]
        others = frozenset().union(
            *(f for i, f in enumerate(self.__facets) if i != position))
        return chosen - others

    def stanley_reisner_generators(self) -> 'MonomialGeneratorSet':
        """Returns the minimal non-faces, the supports of the square-free
        monomial generators of the Stanley--Reisner ideal.

        Works level by level: a set of size k is a minimal non-face exactly
        when it is not a face but all its (k - 1)-subsets are.
        """
        minimal = []
        level = {frozenset()}
        while level:
            found = set()
            for face in level:
                top = max(face) if face else 0
                for v in self.__vertices:
                    if v <= top:
                        continue
                    candidate = face | {v}
                    if not all(candidate - {u} in level for u in face):
                        continue
                    if self.contains_face(candidate):
                        found.add(candidate)
                    else:
                        minimal.append(candidate)
            level = found
        return MonomialGeneratorSet(minimal)


class MonomialGeneratorSet:
    """Square-free monomial generators, each stored as its support set.

    The supports form an antichain under inclusion. They are ordered by
    degree, then by ascending member tuple; ``x_{}`` = 1 is never stored.
    """
    def __init__(self, supports: Iterable[Iterable[int]]):
        supports = {frozenset(s) for s in supports}
        if frozenset() in supports:
            raise ValueError('the unit monomial is not a generator of a '
                             'proper monomial ideal')
        for s in supports:
            if any(other < s for other in supports):
                raise ValueError('generators must be minimal: '
                                 + str(sorted(s)) + ' is redundant')
        self.__generators = tuple(sorted(
            supports, key=lambda s: (len(s), canonical_key(s))))

    def __len__(self) -> int:
        return len(self.__generators)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.__generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialGeneratorSet):
            return NotImplemented
        return self.__generators == other.generators

    def __repr__(self):
        return ('MonomialGeneratorSet('
                + repr([sorted(g) for g in self.__generators]) + ')')

    @property
    def generators(self) -> Tuple[VertexSet, ...]:
        return self.__generators

    @property
    def degrees(self) -> List[int]:
        """list of int: the degree of each generator."""
        return [len(g) for g in self.__generators]


def independence_complex(g: Graph) -> SimplicialComplex:
    """Returns the complex whose faces are the independent sets of ``g``."""
    return SimplicialComplex(g.labels, g.maximal_independent_sets())


def clique_complex(g: Graph) -> SimplicialComplex:
    """Returns the complex whose faces are the cliques of ``g``."""
    return SimplicialComplex(g.labels, g.maximal_cliques())


def edge_ideal_generators(g: Graph) -> MonomialGeneratorSet:
    """Returns the generators x_i x_j of the edge ideal I(G), one per edge.
    """
    return MonomialGeneratorSet(g.edges)


class Witness(NamedTuple):
    """Why facet ``i`` may follow facet ``j`` in a shelling order.

    ``x`` lies in F_i \\ F_j, and F_i \\ F_k = {x} for the earlier facet
    ``k``.
    """
    i: int
    j: int
    x: int
    k: int


class ShellingViolation:
    """A refusal: no witness exists for facet ``i`` against facet ``j``."""
    valid = False

    def __init__(self, order: Sequence[VertexSet], i: int, j: int):
        self.__order = tuple(order)
        self.__pair = (i, j)

    def __repr__(self):
        return 'ShellingViolation(i=%d, j=%d)' % self.__pair

    @property
    def order(self) -> Tuple[VertexSet, ...]:
        return self.__order

    @property
    def pair(self) -> Tuple[int, int]:
        """(int, int): the first violating positions ``(i, j)``, j < i."""
        return self.__pair


class ShellingCertificate:
    """A shelling order with an explicit witness for every pair j < i.

    The certificate carries everything needed to re-check it without
    searching again; see :meth:`verify`.
    """
    valid = True

    def __init__(self, order: Sequence[Iterable[int]],
                 witnesses: Iterable[Witness]):
        self.__order = tuple(frozenset(f) for f in order)
        table = {}
        for w in witnesses:
            table[(w.i, w.j)] = Witness(*w)
        self.__witnesses = table

    def __len__(self) -> int:
        """Returns t, the number of facets in the order."""
        return len(self.__order)

    def __repr__(self):
        return ('ShellingCertificate('
                + repr([sorted(f) for f in self.__order]) + ')')

    @property
    def order(self) -> Tuple[VertexSet, ...]:
        """tuple of frozenset: the facets F_1, ..., F_t in shelling order."""
        return self.__order

    @property
    def witnesses(self) -> List[Witness]:
        """list of Witness: one per pair, sorted by ``(i, j)``."""
        return [self.__witnesses[key] for key in sorted(self.__witnesses)]

    def witness(self, i: int, j: int) -> Witness:
        return self.__witnesses[(i, j)]

    def verify(self) -> bool:
        """Re-checks every witness against the stored order.

        Returns:
            bool: True iff every pair j < i has a witness (x, k) with
            x in F_i \\ F_j, k < i and F_i \\ F_k = {x}
        """
        order = self.__order
        for i in range(len(order)):
            for j in range(i):
                w = self.__witnesses.get((i, j))
                if w is None or not 0 <= w.k < i:
                    return False
                if w.x not in order[i] - order[j]:
                    return False
                if order[i] - order[w.k] != {w.x}:
                    return False
        return True


def _resolve_order(c: SimplicialComplex,
                   order: Sequence[Union[int, Iterable[int]]]) -> List[int]:
    """Turns facet indices or facet sets into a list of facet indices."""
    order = list(order)
    try:
        if all(type(item) is int for item in order):
            indices = order
        else:
            indices = [c.index_of(item) for item in order]
    except NotAFacet as e:
        raise NotAPermutation(str(e)) from None
    if sorted(indices) != list(range(len(c))):
        raise NotAPermutation('the order must list each of the '
                              + str(len(c)) + ' facets exactly once')
    return indices


def _ridges_before(order: Sequence[VertexSet], i: int) -> Dict[int, int]:
    """Maps each x with F_i \\ F_k = {x} for some k < i to the least such k.
    """
    found = {}
    for k in range(i):
        rest = order[i] - order[k]
        if len(rest) == 1:
            (x,) = rest
            found.setdefault(x, k)
    return found


def is_shelling_order(c: SimplicialComplex,
                      order: Sequence[Union[int, Iterable[int]]]
                      ) -> Union[ShellingCertificate, ShellingViolation]:
    """Checks a facet order against the pairwise shelling condition.

    Args:
        c (SimplicialComplex): the complex
        order (sequence): a permutation of the facets, given either as
            facet indices into ``c.facets`` or as the facet sets themselves

    Returns:
        ShellingCertificate with a witness for every pair j < i, or a
        ShellingViolation naming the first pair (i, j) without one

    Raises:
        NotAPermutation: ``order`` is not a permutation of the facets
    """
    facets = [c.facets[k] for k in _resolve_order(c, order)]
    witnesses = []
    for i in range(1, len(facets)):
        ridges = _ridges_before(facets, i)
        for j in range(i):
            choices = sorted(x for x in facets[i] - facets[j] if x in ridges)
            if not choices:
                logger.debug('no shelling witness for pair (%d, %d)', i, j)
                return ShellingViolation(facets, i, j)
            witnesses.append(Witness(i, j, choices[0], ridges[choices[0]]))
    return ShellingCertificate(facets, witnesses)


class SearchStatus(enum.Enum):
    FOUND = 'found'
    NONE = 'none'
    EXHAUSTED = 'exhausted'


class ShellingSearch:
    """Outcome of :func:`find_shelling`."""
    def __init__(self, status: SearchStatus, nodes: int,
                 certificate: Optional[ShellingCertificate] = None):
        self.__status = status
        self.__nodes = nodes
        self.__certificate = certificate

    def __repr__(self):
        return ('ShellingSearch(' + self.__status.value + ', nodes='
                + str(self.__nodes) + ')')

    @property
    def status(self) -> SearchStatus:
        return self.__status

    @property
    def nodes(self) -> int:
        """int: search nodes visited."""
        return self.__nodes

    @property
    def certificate(self) -> Optional[ShellingCertificate]:
        return self.__certificate

    def result_or_raise(self) -> Optional[ShellingCertificate]:
        """Returns the certificate, or None if the complex is not shellable.

        Raises:
            BudgetExhausted: the search stopped before a verdict
        """
        if self.__status is SearchStatus.EXHAUSTED:
            raise BudgetExhausted('shelling search stopped after '
                                  + str(self.__nodes) + ' nodes')
        return self.__certificate


class _Exhausted(Exception):
    pass


def find_shelling(c: SimplicialComplex,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> ShellingSearch:
    """Searches for a shelling order of a pure complex by backtracking.

    Facets are tried in canonical order, so the first certificate found is
    deterministic. Whether a facet may be appended depends only on the set
    of facets already placed, so sets with no completion are remembered and
    never expanded twice.

    Args:
        c (SimplicialComplex): a pure complex
        node_budget (int): the most search nodes to visit

    Returns:
        ShellingSearch: status FOUND with a certificate, NONE when the whole
        tree was searched, or EXHAUSTED when the budget ran out first

    Raises:
        NotPure: ``c`` is not pure
    """
    if type(node_budget) is not int:
        raise TypeError('node_budget must be int')
    if node_budget < 1:
        raise ValueError('node_budget must be positive')
    if not c.is_pure():
        raise NotPure('shelling search is restricted to pure complexes')
    facets = c.facets
    t = len(facets)
    # ridge[f][k] = x when F_f \ F_k = {x}
    ridge = [{} for _ in range(t)]
    for f in range(t):
        for k in range(t):
            rest = facets[f] - facets[k]
            if len(rest) == 1:
                (x,) = rest
                ridge[f][k] = x
    dead = set()
    nodes = 0

    def addable(used: FrozenSet[int], f: int) -> bool:
        shared = {ridge[f][k] for k in used if k in ridge[f]}
        if not shared:
            return False
        return all((facets[f] - facets[j]) & shared for j in used)

    def extend(prefix: List[int], used: FrozenSet[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _Exhausted()
        if len(prefix) == t:
            return True
        if used in dead:
            return False
        for f in range(t):
            if f in used or (prefix and not addable(used, f)):
                continue
            prefix.append(f)
            if extend(prefix, used | {f}):
                return True
            prefix.pop()
        dead.add(used)
        return False

    prefix = []
    try:
        found = extend(prefix, frozenset())
    except _Exhausted:
        logger.info('shelling search exhausted its budget of %d nodes',
                    node_budget)
        return ShellingSearch(SearchStatus.EXHAUSTED, node_budget)
    logger.debug('shelling search visited %d nodes, %d dead sets',
                 nodes, len(dead))
    if not found:
        return ShellingSearch(SearchStatus.NONE, nodes)
    result = is_shelling_order(c, prefix)
    return ShellingSearch(SearchStatus.FOUND, nodes, result)


def cohen_macaulay_status(c: SimplicialComplex,
                          search: Optional[ShellingSearch] = None) -> str:
    """Reports what shellability says about the Cohen--Macaulay property.

    A pure shellable complex is Cohen--Macaulay; a Cohen--Macaulay complex
    is pure. Nothing else is concluded.

    Args:
        c (SimplicialComplex): the complex
        search (ShellingSearch): an earlier search result; searched with the
            default budget when omitted
    """
    if not c.is_pure():
        return NOT_CM_NOT_PURE
    if search is None:
        search = find_shelling(c)
    if search.status is SearchStatus.FOUND and search.certificate.verify():
        return CM_VIA_SHELLING
    if search.status is SearchStatus.EXHAUSTED:
        return CM_BUDGET_EXHAUSTED
    return CM_UNDETERMINED
