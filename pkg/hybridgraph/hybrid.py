"""Hybrid graphs: construction, facet blocks, shelling, recognition.

Given a base graph G, a partition A_1, ..., A_r of its vertices into cliques
(parts may be empty) and nonempty whisker sets B_1, ..., B_r of fresh labels,
the hybrid graph G' adds to G every edge inside each A_i | B_i.
"""
import itertools
import logging
from typing import (Dict, Iterable, Iterator, List, Optional, Sequence,
                    Tuple)

from .complex import (CM_BUDGET_EXHAUSTED, CM_VIA_SHELLING,
                      DEFAULT_NODE_BUDGET, SearchStatus, ShellingCertificate,
                      ShellingSearch, SimplicialComplex, clique_complex,
                      cohen_macaulay_status, find_shelling,
                      independence_complex, is_shelling_order)
from .errors import (EmptyWhiskerSet, LabelCollision, PartNotClique,
                     PartsNotPartition)
from .graph import Graph, VertexSet, check_label, canonical_key

logger = logging.getLogger(__name__)

CM_CHORDAL = 'Cohen-Macaulay (chordal characterization)'
NOT_CM_CHORDAL = 'not Cohen-Macaulay (chordal characterization)'


class VariableOrder:
    """The total order x_1 > ... > x_n > y_{1,1} > ... > y_{r,s_r}.

    Base vertices come first in ascending label order, then whisker vertices
    by part and by position inside their part. A vertex set is compared by
    the positions of its members, largest variable first; sets of one size
    compare lexicographically under :meth:`key`.
    """
    def __init__(self, base: Sequence[int],
                 whiskers: Sequence[Sequence[int]] = ()):
        self.__sequence = tuple(base) + tuple(
            y for part in whiskers for y in part)
        self.__position = {v: p for p, v in enumerate(self.__sequence)}
        self.__names = {}
        for v in base:
            self.__names[v] = ('x_%d' % v, 'x(%d)' % v)
        for i, part in enumerate(whiskers, start=1):
            for j, y in enumerate(part, start=1):
                self.__names[y] = ('y_%d_%d' % (i, j), 'y(%d)(%d)' % (i, j))

    @classmethod
    def for_graph(cls, g: Graph) -> 'VariableOrder':
        """Every vertex of ``g`` is a base variable x_v."""
        return cls(g.labels)

    def __len__(self) -> int:
        return len(self.__sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.__sequence)

    @property
    def sequence(self) -> Tuple[int, ...]:
        """tuple of int: the labels from largest to smallest variable."""
        return self.__sequence

    def position(self, label: int) -> int:
        return self.__position[label]

    def key(self, members: Iterable[int]) -> Tuple[int, ...]:
        """Sort key of a vertex set: member positions, ascending."""
        return tuple(sorted(self.__position[v] for v in members))

    def macaulay2_name(self, label: int) -> str:
        return self.__names[label][0]

    def singular_name(self, label: int) -> str:
        return self.__names[label][1]

    def names(self) -> Dict[int, Tuple[str, str]]:
        """dict: label -> (Macaulay2 name, Singular name)."""
        return dict(self.__names)


class HybridSpec:
    """The input of the hybrid construction: base graph, parts, whiskers.

    A HybridSpec is validated on construction and immutable afterwards.
    """
    def __init__(self, base: Graph, parts: Sequence[Iterable[int]],
                 whiskers: Sequence[Iterable[int]]):
        """Validates and stores a hybrid spec.

        Args:
            base (Graph): the base graph G
            parts (sequence of sets of int): A_1, ..., A_r, a partition of
                the vertices of G into cliques; a part may be empty
            whiskers (sequence of sets of int): B_1, ..., B_r, nonempty,
                pairwise disjoint and disjoint from the vertices of G

        Raises:
            PartsNotPartition: the parts overlap or miss a vertex
            PartNotClique: a part is not a clique of G
            EmptyWhiskerSet: some B_i is empty
            LabelCollision: whisker labels repeat or reuse a base label
        """
        if type(base) != Graph:
            raise TypeError('base must be a hybridgraph Graph')
        parts = [frozenset(a) for a in parts]
        whiskers = [[check_label(y) for y in b] for b in whiskers]
        for b in whiskers:
            if len(set(b)) != len(b):
                raise LabelCollision('whisker set ' + str(sorted(b))
                                     + ' repeats a label')
        whiskers = [tuple(sorted(b)) for b in whiskers]
        if len(parts) != len(whiskers):
            raise ValueError('need one whisker set per part, got '
                             + str(len(parts)) + ' parts and '
                             + str(len(whiskers)) + ' whisker sets')
        seen = set()
        for a in parts:
            if a & seen:
                raise PartsNotPartition('vertices ' + str(sorted(a & seen))
                                        + ' are in more than one part')
            seen |= a
        if seen != base.vertices:
            raise PartsNotPartition(
                'parts must cover exactly the base vertices; missing '
                + str(sorted(base.vertices - seen)) + ', unknown '
                + str(sorted(seen - base.vertices)))
        for a in parts:
            if not base.is_clique(a):
                raise PartNotClique('part ' + str(sorted(a))
                                    + ' is not a clique of the base graph')
        used = set(base.vertices)
        for b in whiskers:
            if not b:
                raise EmptyWhiskerSet('every whisker set must be nonempty')
            if used.intersection(b):
                raise LabelCollision('whisker labels '
                                     + str(sorted(used.intersection(b)))
                                     + ' are already in use')
            used.update(b)
        self.__base = base
        self.__parts = tuple(parts)
        self.__whiskers = tuple(whiskers)

    @classmethod
    def from_sizes(cls, base: Graph, parts: Sequence[Iterable[int]],
                   sizes: Sequence[int]) -> 'HybridSpec':
        """Builds a spec with whisker labels allocated automatically.

        Labels n + 1, n + 2, ... (n the largest base label) are handed out to
        B_1 first, then B_2, and so on.

        Args:
            base (Graph): the base graph
            parts (sequence of sets of int): the clique partition
            sizes (sequence of int): s_1, ..., s_r, each at least 1
        """
        for s in sizes:
            if type(s) is not int:
                raise TypeError('whisker sizes must be int')
            if s < 1:
                raise EmptyWhiskerSet('whisker sizes must be at least 1')
        label = max(base.labels, default=0) + 1
        whiskers = []
        for s in sizes:
            whiskers.append(range(label, label + s))
            label += s
        return cls(base, parts, whiskers)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HybridSpec):
            return NotImplemented
        return (self.__base == other.base and self.__parts == other.parts
                and self.__whiskers == other.whiskers)

    def __hash__(self):
        return hash((self.__base, self.__parts, self.__whiskers))

    def __repr__(self):
        return ('HybridSpec(' + repr(self.__base) + ', '
                + repr([sorted(a) for a in self.__parts]) + ', '
                + repr([list(b) for b in self.__whiskers]) + ')')

    @property
    def name(self) -> str:
        """str: a label built from the spec's parameters."""
        return ('Hybrid-r=' + str(self.r) + '-sizes='
                + '.'.join(str(s) for s in self.sizes) + '-' + self.__base.name)

    @property
    def base(self) -> Graph:
        return self.__base

    @property
    def parts(self) -> Tuple[VertexSet, ...]:
        """tuple of frozenset: A_1, ..., A_r."""
        return self.__parts

    @property
    def whiskers(self) -> Tuple[Tuple[int, ...], ...]:
        """tuple of tuple of int: B_1, ..., B_r, each in ascending order."""
        return self.__whiskers

    @property
    def r(self) -> int:
        return len(self.__parts)

    @property
    def sizes(self) -> List[int]:
        """list of int: s_1, ..., s_r."""
        return [len(b) for b in self.__whiskers]

    @property
    def labels(self) -> Tuple[int, ...]:
        """tuple of int: every vertex of the hybrid graph, ascending."""
        return tuple(sorted(self.__base.labels
                            + tuple(y for b in self.__whiskers for y in b)))

    def variable_order(self) -> VariableOrder:
        return VariableOrder(self.__base.labels, self.__whiskers)


class FacetBlock:
    """The facets F | F' of the hybrid complex sharing one base face F.

    F' picks one whisker vertex from each B_j whose part A_j misses F.
    """
    def __init__(self, face: VertexSet, free_parts: Sequence[int],
                 choices: Sequence[VertexSet]):
        self.__face = frozenset(face)
        self.__free_parts = tuple(free_parts)
        self.__choices = tuple(choices)

    def __len__(self) -> int:
        return len(self.__choices)

    def __repr__(self):
        return ('FacetBlock(' + str(sorted(self.__face)) + ', '
                + str(len(self)) + ' facets)')

    @property
    def face(self) -> VertexSet:
        """frozenset: F, an independent set of the base graph."""
        return self.__face

    @property
    def free_parts(self) -> Tuple[int, ...]:
        """tuple of int: the 0-based indices j with A_j disjoint from F."""
        return self.__free_parts

    @property
    def choices(self) -> Tuple[VertexSet, ...]:
        """tuple of frozenset: the whisker halves F' in canonical order."""
        return self.__choices

    @property
    def facets(self) -> List[VertexSet]:
        return [self.__face | c for c in self.__choices]


class HybridDecomposition:
    """A witness that a graph is hybrid: base graph H, parts A_i and
    whisker sets B_i."""
    def __init__(self, base: Graph, parts: Sequence[VertexSet],
                 whiskers: Sequence[VertexSet]):
        self.__base = base
        self.__parts = tuple(frozenset(a) for a in parts)
        self.__whiskers = tuple(frozenset(b) for b in whiskers)

    def __repr__(self):
        return ('HybridDecomposition(r=' + str(self.r) + ', parts='
                + str([sorted(a) for a in self.__parts]) + ', whiskers='
                + str([sorted(b) for b in self.__whiskers]) + ')')

    @property
    def base(self) -> Graph:
        return self.__base

    @property
    def parts(self) -> Tuple[VertexSet, ...]:
        return self.__parts

    @property
    def whiskers(self) -> Tuple[VertexSet, ...]:
        return self.__whiskers

    @property
    def r(self) -> int:
        return len(self.__parts)

    def to_spec(self) -> HybridSpec:
        return HybridSpec(self.__base, self.__parts, self.__whiskers)


def build_hybrid(spec: HybridSpec) -> Graph:
    """Returns the hybrid graph G' = G | {every pair inside A_i | B_i}."""
    edges = list(spec.base.edges)
    for a, b in zip(spec.parts, spec.whiskers):
        edges.extend(itertools.combinations(sorted(a) + list(b), 2))
    return Graph(spec.labels, edges)


def hybrid_facets(spec: HybridSpec) -> List[FacetBlock]:
    """Lists the facets of the hybrid graph's independence complex by block.

    There is one block per independent set F of the base graph, the empty
    set included. Its facets are F | F' where F' takes one vertex y_{j,k}
    from each B_j with A_j disjoint from F, so the block has
    prod s_j facets and every facet has exactly r vertices. Blocks come in
    canonical order: by |F|, then by the variable order.
    """
    order = spec.variable_order()
    blocks = []
    for face in spec.base.independent_sets():
        free = [j for j, a in enumerate(spec.parts) if not a & face]
        choices = [frozenset(pick) for pick in
                   itertools.product(*(spec.whiskers[j] for j in free))]
        blocks.append(FacetBlock(face, free, choices))
    blocks.sort(key=lambda block: (len(block.face), order.key(block.face)))
    return blocks


def hybrid_complex(spec: HybridSpec) -> SimplicialComplex:
    """Returns the independence complex of the hybrid graph from its blocks.
    """
    facets = [f for block in hybrid_facets(spec) for f in block.facets]
    return SimplicialComplex(spec.labels, facets)


def krull_dimension(spec: HybridSpec) -> int:
    """Returns dim S/I(G'), the largest facet size of the hybrid complex.

    This is r for every spec.
    """
    return max(len(f) for block in hybrid_facets(spec) for f in block.facets)


def canonical_shelling_order(spec: HybridSpec) -> ShellingCertificate:
    """Returns the shelling order of the hybrid complex, with witnesses.

    Facets are ordered by block (see :func:`hybrid_facets`) and inside a
    block by the variable order of F'. Each facet of a later block has a
    base vertex whose removal gives a facet of a smaller block; inside a
    block, swapping back the first differing whisker gives an earlier
    facet. The order is re-checked by :func:`is_shelling_order`.

    Raises:
        RuntimeError: the order failed the shelling check
    """
    order = spec.variable_order()
    facets = []
    for block in hybrid_facets(spec):
        for choice in sorted(block.choices, key=order.key):
            facets.append(block.face | choice)
    result = is_shelling_order(SimplicialComplex(spec.labels, facets),
                               facets)
    if not result.valid:
        logger.error('%s: canonical order fails at pair %s', spec.name,
                     result.pair)
        raise RuntimeError('canonical order of ' + spec.name
                           + ' is not a shelling order')
    return result


def whisker(g: Graph) -> HybridSpec:
    """Returns the spec adding one whisker at every vertex of ``g``.

    Parts are the singletons {v} in label order.
    """
    return HybridSpec.from_sizes(g, [{v} for v in g.labels], [1] * len(g))


def clique_whisker(g: Graph,
                   partition: Iterable[Iterable[int]]) -> HybridSpec:
    """Returns the spec adding one whisker to each clique of a vertex
    clique-partition.

    Parts are taken in canonical order (ascending member tuples), so the
    all-singletons partition gives exactly :func:`whisker`.

    Raises:
        PartsNotPartition: a part is empty, or the parts do not partition
            the vertices
        PartNotClique: a part is not a clique
    """
    parts = sorted((frozenset(w) for w in partition), key=canonical_key)
    if any(not w for w in parts):
        raise PartsNotPartition('parts of a vertex clique-partition must '
                                'be nonempty')
    return HybridSpec.from_sizes(g, parts, [1] * len(parts))


def hybrid_family(g: Graph, parts: Sequence[Iterable[int]],
                  max_whisker_size: int) -> Iterator[HybridSpec]:
    """Yields the hybrid specs of ``g`` for every whisker-size vector.

    Sizes range over {1, ..., max_whisker_size}^r in lexicographic order.
    """
    if type(max_whisker_size) is not int:
        raise TypeError('max_whisker_size must be int')
    parts = list(parts)
    for sizes in itertools.product(range(1, max_whisker_size + 1),
                                   repeat=len(parts)):
        yield HybridSpec.from_sizes(g, parts, list(sizes))


def _exact_covers(universe: VertexSet,
                  blocks: List[VertexSet]) -> Iterator[List[VertexSet]]:
    """Yields every set of pairwise disjoint blocks covering ``universe``.

    Always branches on the uncovered vertex with the fewest usable blocks.
    """
    membership = {v: [b for b in blocks if v in b] for v in universe}

    def solve(covered, chosen):
        if covered == universe:
            yield list(chosen)
            return
        options = {v: [b for b in membership[v] if not b & covered]
                   for v in universe - covered}
        v = min(options, key=lambda u: (len(options[u]), u))
        for b in options[v]:
            chosen.append(b)
            yield from solve(covered | b, chosen)
            chosen.pop()

    yield from solve(frozenset(), [])


def recognize_hybrid(g: Graph) -> Optional[HybridDecomposition]:
    """Decides whether ``g`` is a hybrid graph and returns a witness.

    A graph is hybrid exactly when its vertices split into disjoint closed
    neighbourhoods N[v] that are cliques: each whisker vertex of B_i has
    N[y] = A_i | B_i. Every such cover is found by exact-cover backtracking
    over the distinct N[v] of simplicial vertices. The one with fewest
    blocks wins, ties broken by the sorted block lists. B_i collects every
    vertex u of the block with N[u] equal to the block.

    Returns:
        HybridDecomposition or None: a decomposition that rebuilds ``g``
        exactly, or None if ``g`` is not hybrid
    """
    closed = {v: g.closed_neighbourhood(v) for v in g.labels}
    blocks = sorted({closed[v] for v in g.simplicial_vertices()},
                    key=canonical_key)
    best = None
    for cover in _exact_covers(g.vertices, blocks):
        rank = (len(cover), sorted(canonical_key(b) for b in cover))
        if best is None or rank < best[0]:
            best = (rank, cover)
    if best is None:
        logger.info('%s is not hybrid', g.name)
        return None
    cover = sorted(best[1], key=canonical_key)
    whiskers = [frozenset(u for u in b if closed[u] == b) for b in cover]
    parts = [b - w for b, w in zip(cover, whiskers)]
    base = g.induced_subgraph(frozenset().union(*parts))
    decomposition = HybridDecomposition(base, parts, whiskers)
    rebuilt = build_hybrid(decomposition.to_spec())
    if rebuilt != g:
        logger.error('%s: decomposition does not rebuild the graph', g.name)
        raise RuntimeError('hybrid decomposition of ' + g.name
                           + ' fails to rebuild it')
    return decomposition


class CMReport:
    """Everything :func:`chordal_cm_check` found out about a graph.

    Args:
        chordal (bool): whether the graph is chordal
        elimination_order (list of int): a perfect elimination order, for
            chordal graphs
        is_tree (bool): whether the graph is a tree
        unmixed (bool): whether all minimal vertex covers have one size
        verdict (str): the Cohen--Macaulay verdict
        free_facets (list of frozenset): clique complex facets with a free
            vertex (chordal graphs only)
        free_facet_partition (list of frozenset): the same facets when they
            partition the vertex set, else None
        hybrid (HybridDecomposition): a hybrid witness, or None
        shelling (ShellingSearch): the shelling search (non-chordal only)
        consistent (bool): whether the chordal conditions all agree
    """
    def __init__(self, chordal: bool, is_tree: bool, unmixed: bool,
                 verdict: str, elimination_order: Optional[List[int]] = None,
                 free_facets: Optional[List[VertexSet]] = None,
                 free_facet_partition: Optional[List[VertexSet]] = None,
                 hybrid: Optional[HybridDecomposition] = None,
                 shelling: Optional[ShellingSearch] = None,
                 consistent: bool = True):
        self.chordal = chordal
        self.elimination_order = elimination_order
        self.is_tree = is_tree
        self.unmixed = unmixed
        self.free_facets = free_facets
        self.free_facet_partition = free_facet_partition
        self.hybrid = hybrid
        self.shelling = shelling
        self.consistent = consistent
        self.verdict = verdict

    def __repr__(self):
        return ('CMReport(chordal=' + str(self.chordal) + ', unmixed='
                + str(self.unmixed) + ', verdict=' + repr(self.verdict) + ')')

    @property
    def characterization_applies(self) -> bool:
        """bool: the chordal characterization covers this graph."""
        return self.chordal

    @property
    def cohen_macaulay(self) -> Optional[bool]:
        """True or False when decided, None when undetermined."""
        if self.verdict in (CM_CHORDAL, CM_VIA_SHELLING):
            return True
        if self.verdict == NOT_CM_CHORDAL or self.verdict.startswith('not '):
            return False
        return None


def free_vertex_facets(g: Graph) -> List[VertexSet]:
    """Returns the facets of the clique complex that have a free vertex."""
    cliques = clique_complex(g)
    return [f for f in cliques.facets if cliques.free_vertices(f)]


def _disjoint_cover(universe: VertexSet,
                    sets: Sequence[VertexSet]) -> bool:
    return (sum(len(s) for s in sets) == len(universe)
            and frozenset().union(*sets) == universe)


def chordal_cm_check(g: Graph,
                     node_budget: int = DEFAULT_NODE_BUDGET) -> CMReport:
    """Decides the Cohen--Macaulay property of a chordal graph.

    For a chordal graph the following are equivalent: G is Cohen--Macaulay;
    G is unmixed; the facets of the clique complex with a free vertex
    partition the vertex set; G is hybrid. All three computable conditions
    are evaluated and cross-checked, and the verdict follows the partition
    condition.

    For a non-chordal graph the characterization does not apply. An
    unmixed graph is then searched for a shelling (a pure shellable complex
    is Cohen--Macaulay); a mixed graph is not Cohen--Macaulay. If the search
    budget runs out on a hybrid graph, its canonical shelling order is used.

    Args:
        g (Graph): the graph
        node_budget (int): the shelling search budget for non-chordal input
    """
    chordal, elimination = g.is_chordal()
    unmixed = g.is_unmixed()
    hybrid = recognize_hybrid(g)
    fields = dict(chordal=chordal, elimination_order=elimination,
                  is_tree=g.is_tree(), unmixed=unmixed, hybrid=hybrid)
    if chordal:
        free = free_vertex_facets(g)
        partition = free if _disjoint_cover(g.vertices, free) else None
        consistent = unmixed == (partition is not None) == (
            hybrid is not None)
        if not consistent:
            logger.warning('%s: chordal conditions disagree (unmixed=%s, '
                           'partition=%s, hybrid=%s)', g.name, unmixed,
                           partition is not None, hybrid is not None)
        verdict = CM_CHORDAL if partition is not None else NOT_CM_CHORDAL
        logger.info('%s: %s', g.name, verdict)
        return CMReport(free_facets=free, free_facet_partition=partition,
                        consistent=consistent, verdict=verdict, **fields)
    complex_ = independence_complex(g)
    search = find_shelling(complex_, node_budget) if unmixed else None
    verdict = cohen_macaulay_status(complex_, search)
    if verdict == CM_BUDGET_EXHAUSTED and hybrid is not None:
        certificate = canonical_shelling_order(hybrid.to_spec())
        search = ShellingSearch(SearchStatus.FOUND, search.nodes, certificate)
        verdict = CM_VIA_SHELLING
    logger.info('%s: not chordal; %s', g.name, verdict)
    return CMReport(shelling=search, verdict=verdict, **fields)


def tree_cm_check(g: Graph) -> CMReport:
    """For a tree: Cohen--Macaulay iff unmixed iff hybrid.

    Raises:
        ValueError: ``g`` is not a tree
    """
    if not g.is_tree():
        raise ValueError(g.name + ' is not a tree')
    return chordal_cm_check(g)
