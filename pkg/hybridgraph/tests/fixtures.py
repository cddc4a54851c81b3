#
# Shared example graphs and specs, with their facet tables.
#
import hybridgraph as hg

# two triangles {1,2,3} and {2,3,4} sharing the edge {2,3}
EXAMPLE_EDGES = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


def example_graph():
    return hg.Graph([1, 2, 3, 4], EXAMPLE_EDGES)


def spec_a():
    """Singleton parts, whisker sizes 2, 1, 1, 3 (labels 5..11)."""
    return hg.HybridSpec.from_sizes(example_graph(),
                                    [{1}, {2}, {3}, {4}], [2, 1, 1, 3])


def spec_b():
    """Parts {1,3}, {2}, {4}; whisker sizes 1, 1, 3 (labels 5..9)."""
    return hg.HybridSpec(example_graph(), [{1, 3}, {2}, {4}],
                         [{5}, {6}, {7, 8, 9}])


def spec_c():
    """Parts {1,2,3}, {4}; whisker sizes 1, 2 (labels 5..7)."""
    return hg.HybridSpec(example_graph(), [{1, 2, 3}, {4}], [{5}, {6, 7}])


BLOCK_FACES = [set(), {1}, {2}, {3}, {4}, {1, 4}]

TABLE_A = {
    frozenset(): [
        {5, 7, 8, 9}, {5, 7, 8, 10}, {5, 7, 8, 11},
        {6, 7, 8, 9}, {6, 7, 8, 10}, {6, 7, 8, 11}],
    frozenset({1}): [{1, 7, 8, 9}, {1, 7, 8, 10}, {1, 7, 8, 11}],
    frozenset({2}): [
        {2, 5, 8, 9}, {2, 5, 8, 10}, {2, 5, 8, 11},
        {2, 6, 8, 9}, {2, 6, 8, 10}, {2, 6, 8, 11}],
    frozenset({3}): [
        {3, 5, 7, 9}, {3, 5, 7, 10}, {3, 5, 7, 11},
        {3, 6, 7, 9}, {3, 6, 7, 10}, {3, 6, 7, 11}],
    frozenset({4}): [{4, 5, 7, 8}, {4, 6, 7, 8}],
    frozenset({1, 4}): [{1, 4, 7, 8}],
}

TABLE_B = {
    frozenset(): [{5, 6, 7}, {5, 6, 8}, {5, 6, 9}],
    frozenset({1}): [{1, 6, 7}, {1, 6, 8}, {1, 6, 9}],
    frozenset({2}): [{2, 5, 7}, {2, 5, 8}, {2, 5, 9}],
    frozenset({3}): [{3, 6, 7}, {3, 6, 8}, {3, 6, 9}],
    frozenset({4}): [{4, 5, 6}],
    frozenset({1, 4}): [{1, 4, 6}],
}

TABLE_C = {
    frozenset(): [{5, 6}, {5, 7}],
    frozenset({1}): [{1, 6}, {1, 7}],
    frozenset({2}): [{2, 6}, {2, 7}],
    frozenset({3}): [{3, 6}, {3, 7}],
    frozenset({4}): [{4, 5}],
    frozenset({1, 4}): [{1, 4}],
}

TABLE_C_ORDER = [{5, 6}, {5, 7}, {1, 6}, {1, 7}, {2, 6}, {2, 7},
                 {3, 6}, {3, 7}, {4, 5}, {1, 4}]


def table_facets(table):
    return {frozenset(f) for rows in table.values() for f in rows}
