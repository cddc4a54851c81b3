"""Random drivers, brute-force oracles and property suites.

Each ``suite_*`` function takes a case count and a seed, runs its property
checks on seeded random inputs and returns a list of failure messages (empty
when everything holds). The CLI ``selftest`` verb and the unit tests both
run them.
"""
import itertools
import logging
import random
from typing import Callable, Dict, Iterator, List, Optional

from .complex import (CM_VIA_SHELLING, SearchStatus, SimplicialComplex,
                      edge_ideal_generators, find_shelling,
                      independence_complex, is_shelling_order)
from .graph import Graph, VertexSet, cycle_graph
from .hybrid import (HybridSpec, build_hybrid, canonical_shelling_order,
                     chordal_cm_check, clique_whisker, free_vertex_facets,
                     hybrid_facets, recognize_hybrid, whisker)

logger = logging.getLogger(__name__)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Returns a G(n, p) random graph on the labels 1..n."""
    labels = list(range(1, n + 1))
    return Graph(labels, [e for e in itertools.combinations(labels, 2)
                          if rng.random() < p])


def random_chordal_graph(rng: random.Random, n: int) -> Graph:
    """Returns a random chordal graph on 1..n.

    Vertices arrive one at a time, each joined to a random subset of a
    random maximal clique of the graph so far, so every new vertex is
    simplicial when it arrives.
    """
    edges = []
    for v in range(2, n + 1):
        g = Graph(range(1, v), edges)
        clique = sorted(rng.choice(g.maximal_cliques()))
        edges.extend((u, v) for u in clique if rng.random() < 0.6)
    return Graph(range(1, n + 1), edges)


def random_clique_partition(rng: random.Random,
                            g: Graph) -> List[VertexSet]:
    """Splits the vertices of ``g`` into nonempty cliques at random."""
    parts = []
    order = list(g.labels)
    rng.shuffle(order)
    for v in order:
        fits = [p for p in parts if all(g.has_edge(u, v) for u in p)]
        if fits and rng.random() < 0.7:
            rng.choice(fits).add(v)
        else:
            parts.append({v})
    return [frozenset(p) for p in parts]


def random_hybrid_spec(rng: random.Random, max_vertices: int = 7,
                       max_parts: int = 4,
                       max_whisker: int = 3) -> HybridSpec:
    """Returns a random valid spec: base |V| <= max_vertices, r <= max_parts,
    s_i <= max_whisker.

    Vertices are dealt into r parts (possibly empty), each part is made a
    clique and every edge between parts is kept with probability 1/2.
    """
    r = rng.randint(1, max_parts)
    n = rng.randint(0, max_vertices)
    owner = {v: rng.randrange(r) for v in range(1, n + 1)}
    edges = [(u, v) for u, v in itertools.combinations(range(1, n + 1), 2)
             if owner[u] == owner[v] or rng.random() < 0.5]
    base = Graph(range(1, n + 1), edges)
    parts = [{v for v in owner if owner[v] == i} for i in range(r)]
    sizes = [rng.randint(1, max_whisker) for _ in range(r)]
    return HybridSpec.from_sizes(base, parts, sizes)


def all_labelled_graphs(n: int) -> Iterator[Graph]:
    """Yields every graph on the labels 1..n."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(1, n + 1),
                    [e for b, e in enumerate(pairs) if mask >> b & 1])


def set_partitions(items: List[int]) -> Iterator[List[List[int]]]:
    """Yields every partition of ``items`` into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] \
                + partition[i + 1:]


def chordal_by_cycles(g: Graph) -> bool:
    """Definition check: no cycle of length > 3 lacks a chord."""
    labels = list(g.labels)
    for size in range(4, len(labels) + 1):
        for subset in itertools.combinations(labels, size):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                cycle = (first,) + perm
                if not all(g.has_edge(cycle[p], cycle[(p + 1) % size])
                           for p in range(size)):
                    continue
                chords = [(cycle[p], cycle[q])
                          for p, q in itertools.combinations(range(size), 2)
                          if (q - p) % size not in (1, size - 1)]
                if not any(g.has_edge(u, v) for u, v in chords):
                    return False
    return True


def hybrid_by_partitions(g: Graph) -> bool:
    """Definition check: try every split of the vertices into blocks
    A_i | B_i with nonempty B_i, and rebuild."""
    for partition in set_partitions(list(g.labels)):
        if not all(g.is_clique(block) for block in partition):
            continue
        choices = [[frozenset(b) for size in range(1, len(block) + 1)
                    for b in itertools.combinations(block, size)]
                   for block in partition]
        for whiskers in itertools.product(*choices):
            parts = [frozenset(block) - b
                     for block, b in zip(partition, whiskers)]
            base = g.induced_subgraph(frozenset().union(*parts))
            spec = HybridSpec(base, parts, whiskers)
            if build_hybrid(spec) == g:
                return True
    return False


def complex_from_generators(universe: List[int],
                            generators) -> SimplicialComplex:
    """Rebuilds a complex from its minimal non-faces by brute force."""
    faces = [frozenset(s) for size in range(len(universe) + 1)
             for s in itertools.combinations(universe, size)
             if not any(g <= frozenset(s) for g in generators)]
    return SimplicialComplex(universe, faces)


def suite_graph_core(count: int = 100, seed: int = 0) -> List[str]:
    """Cover/independent-set duality, chordality against the cycle
    definition, elimination orders and simplicial vertices."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        g = random_graph(rng, rng.randint(0, 8), rng.choice([0.3, 0.5, 0.7]))
        covers = set(g.minimal_vertex_covers())
        if covers != {g.vertices - s for s in g.maximal_independent_sets()}:
            failures.append('cover duality fails on %r' % g)
        chordal, order = g.is_chordal()
        if chordal != chordal_by_cycles(g):
            failures.append('chordality disagrees on %r' % g)
        if chordal and not g.is_elimination_order(order):
            failures.append('bad elimination order on %r' % g)
        simplicial = {v for v in g.labels
                      if g.is_clique(g.neighbourhood(v))}
        if g.simplicial_vertices() != simplicial:
            failures.append('simplicial vertices wrong on %r' % g)
    return failures


def suite_complex(count: int = 100, seed: int = 0) -> List[str]:
    """from_facets is idempotent and the Stanley--Reisner generators give
    back the complex."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        universe = list(range(1, rng.randint(1, 8) + 1))
        sets = [[v for v in universe if rng.random() < 0.4]
                for _ in range(rng.randint(1, 5))]
        sets.extend([v] for v in universe)
        c = SimplicialComplex(universe, sets)
        if SimplicialComplex(c.vertices, c.facets) != c:
            failures.append('from_facets not idempotent on %r' % c)
        rebuilt = complex_from_generators(
            list(c.vertices), c.stanley_reisner_generators().generators)
        if rebuilt != c:
            failures.append('generators do not rebuild %r' % c)
    return failures


def suite_stanley_reisner(count: int = 500, seed: int = 0) -> List[str]:
    """The edge ideal is the Stanley--Reisner ideal of the independence
    complex."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        g = random_graph(rng, rng.randint(0, 6), rng.random())
        sr = independence_complex(g).stanley_reisner_generators()
        if sr != edge_ideal_generators(g):
            failures.append('edge ideal differs on %r' % g)
    return failures


def check_hybrid_spec(spec: HybridSpec) -> List[str]:
    """All facet-level properties of one hybrid spec."""
    failures = []
    g = build_hybrid(spec)
    blocks = hybrid_facets(spec)
    facets = [f for b in blocks for f in b.facets]
    if set(facets) != set(g.maximal_independent_sets()) \
            or len(facets) != len(set(facets)):
        failures.append('facet blocks differ from the oracle for %r' % spec)
    if any(len(f) != spec.r for f in facets):
        failures.append('a facet does not have r vertices for %r' % spec)
    c = independence_complex(g)
    if not c.is_pure() or c.dimension() != spec.r - 1:
        failures.append('complex not pure of dimension r - 1 for %r' % spec)
    for b in blocks:
        expected = 1
        for j in b.free_parts:
            expected *= spec.sizes[j]
        if len(b) != expected:
            failures.append('block size wrong for %r' % spec)
    for f in facets:
        for a, w in zip(spec.parts, spec.whiskers):
            if len(f & (a | set(w))) != 1:
                failures.append('cross-section fails for %r' % spec)
    cert = canonical_shelling_order(spec)
    if not cert.verify():
        failures.append('certificate does not re-verify for %r' % spec)
    if not is_shelling_order(c, cert.order).valid:
        failures.append('canonical order refused for %r' % spec)
    return failures


def suite_hybrid_structure(count: int = 200, seed: int = 0) -> List[str]:
    """Purity, dimension r - 1, block facets against maximal independent
    sets, and the canonical shelling order, on random specs."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        failures.extend(check_hybrid_spec(random_hybrid_spec(rng)))
    return failures


def suite_whisker(count: int = 100, seed: int = 0) -> List[str]:
    """Whiskered graphs shell canonically and are unmixed with covers of
    size n."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        spec = whisker(g)
        if not canonical_shelling_order(spec).verify():
            failures.append('whiskered %r does not shell' % g)
        covers = build_hybrid(spec).minimal_vertex_covers()
        if {len(c) for c in covers} != {len(g)}:
            failures.append('whiskered %r is not unmixed of size n' % g)
        if clique_whisker(g, [{v} for v in g.labels]) != spec:
            failures.append('singleton clique-whiskering differs on %r' % g)
    return failures


def suite_clique_whisker(count: int = 50, seed: int = 0) -> List[str]:
    """Clique-whiskered random chordal graphs shell canonically."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        g = random_chordal_graph(rng, rng.randint(1, 7))
        spec = clique_whisker(g, random_clique_partition(rng, g))
        if not canonical_shelling_order(spec).verify():
            failures.append('clique-whiskered %r does not shell' % g)
    return failures


def suite_chordal_equivalence(count: int = 100, seed: int = 0) -> List[str]:
    """For chordal graphs: unmixed iff free-vertex facets partition V iff
    hybrid."""
    rng = random.Random(seed)
    failures = []
    for case in range(count):
        g = random_chordal_graph(rng, rng.randint(1, 9))
        free = free_vertex_facets(g)
        partition = (sum(len(f) for f in free) == len(g)
                     and frozenset().union(*free) == g.vertices)
        unmixed = g.is_unmixed()
        hybrid = recognize_hybrid(g) is not None
        if not unmixed == partition == hybrid:
            failures.append('conditions disagree on %r: unmixed=%s '
                            'partition=%s hybrid=%s'
                            % (g, unmixed, partition, hybrid))
        if not chordal_cm_check(g).consistent:
            failures.append('report inconsistent on %r' % g)
    return failures


def suite_remark(count: int = 1, seed: int = 0) -> List[str]:
    """The 5-cycle is Cohen--Macaulay but not hybrid."""
    failures = []
    g = cycle_graph(5)
    if recognize_hybrid(g) is not None:
        failures.append('5-cycle recognized as hybrid')
    if not g.is_unmixed():
        failures.append('5-cycle reported mixed')
    search = find_shelling(independence_complex(g))
    if search.status is not SearchStatus.FOUND:
        failures.append('no shelling found for the 5-cycle')
    if chordal_cm_check(g).verdict != CM_VIA_SHELLING:
        failures.append('5-cycle not reported Cohen-Macaulay via shelling')
    return failures


def suite_recognition_oracle(count: int = 5, seed: int = 0) -> List[str]:
    """recognize_hybrid against the partition oracle on every labelled
    graph with at most ``count`` vertices."""
    failures = []
    for n in range(count + 1):
        for g in all_labelled_graphs(n):
            found = recognize_hybrid(g)
            if (found is not None) != hybrid_by_partitions(g):
                failures.append('recognition disagrees on %r' % g)
            elif found is not None and build_hybrid(found.to_spec()) != g:
                failures.append('decomposition does not rebuild %r' % g)
    return failures


SUITES: Dict[str, Callable[[int, int], List[str]]] = {
    'graph-core': suite_graph_core,
    'complex': suite_complex,
    'stanley-reisner': suite_stanley_reisner,
    'hybrid-structure': suite_hybrid_structure,
    'whisker': suite_whisker,
    'clique-whisker': suite_clique_whisker,
    'chordal-equivalence': suite_chordal_equivalence,
    'remark': suite_remark,
    'recognition-oracle': suite_recognition_oracle,
}


def run_all(count: Optional[int] = None,
            seed: int = 0) -> Dict[str, List[str]]:
    """Runs every suite; ``count`` overrides each suite's default size,
    except the exhaustive recognition suite, which is capped at 5 vertices.
    """
    results = {}
    for name, suite in SUITES.items():
        if count is None:
            results[name] = suite(seed=seed)
        elif name == 'recognition-oracle':
            results[name] = suite(min(count, 5), seed)
        else:
            results[name] = suite(count, seed)
        logger.info('suite %s: %d failures', name, len(results[name]))
    return results
