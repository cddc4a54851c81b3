import unittest

import hybridgraph as hg
from hybridgraph import errors
from hybridgraph.complex import CM_UNDETERMINED, CM_VIA_SHELLING
from hybridgraph.graph import complete_graph, cycle_graph, path_graph
from hybridgraph.hybrid import CM_CHORDAL, NOT_CM_CHORDAL
from hybridgraph.tests import fixtures


class HybridSpecTest(unittest.TestCase):
    """
    Tests the :class:`HybridSpec` class.
    """
    def test_create(self):
        """
        Tests HybridSpec creation and whisker label allocation.
        """
        spec = fixtures.spec_a()
        self.assertEqual(spec.r, 4)
        self.assertEqual(spec.sizes, [2, 1, 1, 3])
        self.assertEqual(spec.whiskers, ((5, 6), (7,), (8,), (9, 10, 11)))
        self.assertEqual(spec.parts, ({1}, {2}, {3}, {4}))
        self.assertEqual(spec.labels, tuple(range(1, 12)))
        self.assertEqual(spec.name,
                         'Hybrid-r=4-sizes=2.1.1.3-Graph-4vertices-5edges')
        self.assertEqual(spec, hg.HybridSpec(
            fixtures.example_graph(), [{1}, {2}, {3}, {4}],
            [{6, 5}, {7}, {8}, {11, 10, 9}]))

    def test_create_errors(self):
        """
        Tests HybridSpec creation rejects invalid input.
        """
        g = fixtures.example_graph()
        with self.assertRaises(errors.PartsNotPartition):
            hg.HybridSpec(g, [{1, 2}, {2, 3}, {4}], [{5}, {6}, {7}])
        with self.assertRaises(errors.PartsNotPartition):
            hg.HybridSpec(g, [{1, 2, 3}], [{5}])
        with self.assertRaises(errors.PartsNotPartition):
            hg.HybridSpec(g, [{1, 2, 3}, {4, 9}], [{5}, {6}])
        with self.assertRaises(errors.PartNotClique):
            hg.HybridSpec(g, [{1, 4}, {2}, {3}], [{5}, {6}, {7}])
        with self.assertRaises(errors.EmptyWhiskerSet):
            hg.HybridSpec(g, [{1, 2, 3}, {4}], [{5}, set()])
        with self.assertRaises(errors.EmptyWhiskerSet):
            hg.HybridSpec.from_sizes(g, [{1, 2, 3}, {4}], [1, 0])
        with self.assertRaises(errors.LabelCollision):
            hg.HybridSpec(g, [{1, 2, 3}, {4}], [{5}, {3}])
        with self.assertRaises(errors.LabelCollision):
            hg.HybridSpec(g, [{1, 2, 3}, {4}], [{5, 6}, {6}])
        with self.assertRaises(errors.LabelCollision):
            hg.HybridSpec(g, [{1, 2, 3}, {4}], [[5, 5], [6]])
        with self.assertRaises(ValueError):
            hg.HybridSpec(g, [{1, 2, 3}, {4}], [{5}])
        with self.assertRaises(TypeError):
            hg.HybridSpec('graph', [], [])
        with self.assertRaises(TypeError):
            hg.HybridSpec.from_sizes(g, [{1, 2, 3}, {4}], [1, 1.5])

    def test_empty_parts(self):
        """
        Tests parts may be empty and r may be zero.
        """
        g = fixtures.example_graph()
        spec = hg.HybridSpec(g, [{1, 2, 3}, set(), {4}], [{5}, {6}, {7}])
        self.assertEqual(spec.r, 3)
        self.assertEqual(hg.krull_dimension(spec), 3)
        empty = hg.HybridSpec(hg.Graph([]), [], [])
        self.assertEqual(hg.build_hybrid(empty), hg.Graph([]))
        self.assertEqual(hg.krull_dimension(empty), 0)

    def test_variable_order(self):
        """
        Tests the variable order and the variable names.
        """
        order = fixtures.spec_a().variable_order()
        self.assertEqual(order.sequence, tuple(range(1, 12)))
        self.assertEqual(order.key({9, 2, 5}), (1, 4, 8))
        self.assertEqual(order.macaulay2_name(3), 'x_3')
        self.assertEqual(order.macaulay2_name(6), 'y_1_2')
        self.assertEqual(order.macaulay2_name(11), 'y_4_3')
        self.assertEqual(order.singular_name(1), 'x(1)')
        self.assertEqual(order.singular_name(10), 'y(4)(2)')
        self.assertEqual(len(order), 11)
        self.assertEqual(order.names()[7], ('y_2_1', 'y(2)(1)'))
        plain = hg.VariableOrder.for_graph(fixtures.example_graph())
        self.assertEqual(list(plain), [1, 2, 3, 4])


class BuildTest(unittest.TestCase):
    """
    Tests building hybrid graphs and listing their facets.
    """
    def test_build(self):
        """
        Tests the hybrid graph completes every A_i together with B_i.
        """
        g = hg.build_hybrid(fixtures.spec_a())
        self.assertEqual(g.labels, tuple(range(1, 12)))
        self.assertEqual(len(g.edges), 16)
        self.assertTrue(g.is_clique({1, 5, 6}))
        self.assertTrue(g.is_clique({4, 9, 10, 11}))
        self.assertFalse(g.has_edge(5, 7))
        self.assertEqual(g.induced_subgraph({1, 2, 3, 4}),
                         fixtures.example_graph())
        g = hg.build_hybrid(fixtures.spec_b())
        self.assertTrue(g.is_clique({1, 3, 5}))
        self.assertFalse(g.has_edge(1, 6))

    def check_table(self, spec, table, sizes):
        blocks = hg.hybrid_facets(spec)
        self.assertEqual([b.face for b in blocks], fixtures.BLOCK_FACES)
        self.assertEqual([len(b) for b in blocks], sizes)
        for b in blocks:
            self.assertEqual(set(b.facets),
                             {frozenset(f) for f in table[b.face]})
        facets = [f for b in blocks for f in b.facets]
        self.assertEqual(len(facets), sum(sizes))
        self.assertTrue(all(len(f) == spec.r for f in facets))
        oracle = hg.build_hybrid(spec).maximal_independent_sets()
        self.assertEqual(set(facets), set(oracle))
        self.assertEqual(set(facets), fixtures.table_facets(table))

    def test_table_a(self):
        """
        Tests the facet blocks of the first example spec.
        """
        self.check_table(fixtures.spec_a(), fixtures.TABLE_A,
                         [6, 3, 6, 6, 2, 1])
        blocks = hg.hybrid_facets(fixtures.spec_a())
        self.assertEqual(blocks[5].facets, [{1, 4, 7, 8}])
        self.assertEqual(blocks[5].free_parts, (1, 2))
        self.assertEqual(blocks[0].free_parts, (0, 1, 2, 3))

    def test_table_b(self):
        """
        Tests the facet blocks of the second example spec.
        """
        self.check_table(fixtures.spec_b(), fixtures.TABLE_B,
                         [3, 3, 3, 3, 1, 1])

    def test_table_c(self):
        """
        Tests the facet blocks of the third example spec.
        """
        self.check_table(fixtures.spec_c(), fixtures.TABLE_C,
                         [2, 2, 2, 2, 1, 1])

    def test_complex(self):
        """
        Tests the hybrid complex is pure of dimension r - 1.
        """
        for spec, r in [(fixtures.spec_a(), 4), (fixtures.spec_b(), 3),
                        (fixtures.spec_c(), 2)]:
            c = hg.hybrid_complex(spec)
            self.assertTrue(c.is_pure())
            self.assertEqual(c.dimension(), r - 1)
            self.assertEqual(hg.krull_dimension(spec), r)
            self.assertEqual(c, hg.independence_complex(hg.build_hybrid(spec)))


class CanonicalShellingTest(unittest.TestCase):
    """
    Tests the canonical shelling order of hybrid complexes.
    """
    def test_table_c_order(self):
        """
        Tests the canonical order of the third example spec.
        """
        cert = hg.canonical_shelling_order(fixtures.spec_c())
        self.assertEqual(list(cert.order), fixtures.TABLE_C_ORDER)
        self.assertTrue(cert.verify())

    def test_examples(self):
        """
        Tests the canonical orders of all example specs are shellings.
        """
        for spec in [fixtures.spec_a(), fixtures.spec_b(), fixtures.spec_c()]:
            cert = hg.canonical_shelling_order(spec)
            self.assertTrue(cert.verify())
            c = hg.independence_complex(hg.build_hybrid(spec))
            self.assertTrue(hg.is_shelling_order(c, cert.order).valid)

    def test_block_order(self):
        """
        Tests facets come block by block, whisker halves in order.
        """
        cert = hg.canonical_shelling_order(fixtures.spec_a())
        self.assertEqual(cert.order[0], {5, 7, 8, 9})
        self.assertEqual(cert.order[5], {6, 7, 8, 11})
        self.assertEqual(cert.order[6], {1, 7, 8, 9})
        self.assertEqual(cert.order[-1], {1, 4, 7, 8})


class WhiskerTest(unittest.TestCase):
    """
    Tests whiskers, clique-whiskers and hybrid families.
    """
    def test_whisker(self):
        """
        Tests one whisker at every vertex.
        """
        spec = hg.whisker(fixtures.example_graph())
        self.assertEqual(spec.parts, ({1}, {2}, {3}, {4}))
        self.assertEqual(spec.whiskers, ((5,), (6,), (7,), (8,)))
        g = hg.build_hybrid(spec)
        self.assertTrue(g.is_unmixed())
        self.assertEqual({len(c) for c in g.minimal_vertex_covers()}, {4})
        self.assertTrue(hg.canonical_shelling_order(spec).verify())

    def test_clique_whisker(self):
        """
        Tests one whisker per clique of a clique partition.
        """
        g = fixtures.example_graph()
        spec = hg.clique_whisker(g, [{4}, {1, 2, 3}])
        self.assertEqual(spec.parts, ({1, 2, 3}, {4}))
        self.assertEqual(spec.whiskers, ((5,), (6,)))
        self.assertEqual(len(hg.build_hybrid(spec)), 6)
        self.assertEqual(
            hg.clique_whisker(g, [{1}, {2}, {3}, {4}]), hg.whisker(g))
        with self.assertRaises(errors.PartsNotPartition):
            hg.clique_whisker(g, [{1, 2, 3}, {4}, set()])
        with self.assertRaises(errors.PartNotClique):
            hg.clique_whisker(g, [{1, 4}, {2}, {3}])

    def test_family(self):
        """
        Tests the family of specs over whisker sizes.
        """
        g = fixtures.example_graph()
        family = list(hg.hybrid_family(g, [{1, 2, 3}, {4}], 2))
        self.assertEqual([s.sizes for s in family],
                         [[1, 1], [1, 2], [2, 1], [2, 2]])
        self.assertEqual(family[1], fixtures.spec_c())
        with self.assertRaises(TypeError):
            list(hg.hybrid_family(g, [{1, 2, 3}, {4}], '2'))


class RecognitionTest(unittest.TestCase):
    """
    Tests :func:`recognize_hybrid`.
    """
    def test_examples(self):
        """
        Tests the example hybrid graphs are recognized and rebuilt.
        """
        for spec in [fixtures.spec_a(), fixtures.spec_b()]:
            found = hg.recognize_hybrid(hg.build_hybrid(spec))
            self.assertIsNotNone(found)
            self.assertEqual(found.r, spec.r)
            self.assertEqual(found.to_spec(), spec)
            self.assertEqual(found.base, fixtures.example_graph())

    def test_not_hybrid(self):
        """
        Tests graphs that are not hybrid.
        """
        self.assertIsNone(hg.recognize_hybrid(fixtures.example_graph()))
        self.assertIsNone(hg.recognize_hybrid(cycle_graph(5)))
        self.assertIsNone(hg.recognize_hybrid(path_graph(3)))

    def test_small_cases(self):
        """
        Tests complete graphs, isolated vertices and the empty graph.
        """
        found = hg.recognize_hybrid(complete_graph([1, 2, 3]))
        self.assertEqual(found.r, 1)
        self.assertEqual(found.parts, (frozenset(),))
        self.assertEqual(found.whiskers, ({1, 2, 3},))
        found = hg.recognize_hybrid(hg.Graph([1, 2]))
        self.assertEqual(found.whiskers, ({1}, {2}))
        found = hg.recognize_hybrid(hg.Graph([]))
        self.assertEqual(found.r, 0)

    def test_twins_join_whiskers(self):
        """
        Tests every vertex whose closed neighbourhood is the whole block
        becomes a whisker vertex.
        """
        g = hg.build_hybrid(fixtures.spec_c())
        found = hg.recognize_hybrid(g)
        self.assertEqual(found.r, 2)
        self.assertEqual(found.parts, ({2, 3}, {4}))
        self.assertEqual(found.whiskers, ({1, 5}, {6, 7}))
        self.assertEqual(hg.build_hybrid(found.to_spec()), g)

    def test_path(self):
        """
        Tests the path on four vertices is a whiskered edge.
        """
        found = hg.recognize_hybrid(path_graph(4))
        self.assertEqual(found.r, 2)
        self.assertEqual(found.parts, ({2}, {3}))
        self.assertEqual(found.whiskers, ({1}, {4}))


class ChordalCMTest(unittest.TestCase):
    """
    Tests :func:`chordal_cm_check` and :func:`tree_cm_check`.
    """
    def test_chordal_not_cm(self):
        """
        Tests a chordal graph that is not Cohen-Macaulay.
        """
        report = hg.chordal_cm_check(fixtures.example_graph())
        self.assertTrue(report.chordal)
        self.assertTrue(report.characterization_applies)
        self.assertFalse(report.unmixed)
        self.assertIsNone(report.hybrid)
        self.assertEqual(report.free_facets, [{1, 2, 3}, {2, 3, 4}])
        self.assertIsNone(report.free_facet_partition)
        self.assertTrue(report.consistent)
        self.assertEqual(report.verdict, NOT_CM_CHORDAL)
        self.assertFalse(report.cohen_macaulay)

    def test_chordal_cm(self):
        """
        Tests a hybrid chordal graph is Cohen-Macaulay.
        """
        g = hg.build_hybrid(fixtures.spec_a())
        report = hg.chordal_cm_check(g)
        self.assertTrue(report.chordal)
        self.assertTrue(g.is_elimination_order(report.elimination_order))
        self.assertEqual(report.free_facet_partition,
                         [{1, 5, 6}, {2, 7}, {3, 8}, {4, 9, 10, 11}])
        self.assertIsNotNone(report.hybrid)
        self.assertTrue(report.consistent)
        self.assertEqual(report.verdict, CM_CHORDAL)
        self.assertTrue(report.cohen_macaulay)

    def test_not_chordal(self):
        """
        Tests graphs outside the chordal characterization.
        """
        report = hg.chordal_cm_check(cycle_graph(5))
        self.assertFalse(report.chordal)
        self.assertFalse(report.characterization_applies)
        self.assertEqual(report.verdict, CM_VIA_SHELLING)
        self.assertTrue(report.shelling.certificate.verify())
        report = hg.chordal_cm_check(cycle_graph(4))
        self.assertEqual(report.verdict, CM_UNDETERMINED)
        self.assertIsNone(report.cohen_macaulay)
        report = hg.chordal_cm_check(cycle_graph(6))
        self.assertFalse(report.unmixed)
        self.assertIsNone(report.shelling)
        self.assertFalse(report.cohen_macaulay)
        whiskered = hg.build_hybrid(hg.whisker(cycle_graph(4)))
        report = hg.chordal_cm_check(whiskered)
        self.assertFalse(report.chordal)
        self.assertEqual(report.shelling.status, hg.SearchStatus.FOUND)
        self.assertEqual(report.verdict, CM_VIA_SHELLING)

    def test_budget_fallback(self):
        """
        Tests a hybrid graph falls back to its canonical order when the
        search budget runs out.
        """
        base = cycle_graph(4)
        spec = hg.whisker(base)
        report = hg.chordal_cm_check(hg.build_hybrid(spec), node_budget=1)
        self.assertFalse(report.chordal)
        self.assertEqual(report.verdict, CM_VIA_SHELLING)
        self.assertEqual(report.shelling.status, hg.SearchStatus.FOUND)
        self.assertTrue(report.shelling.certificate.verify())

    def test_complete(self):
        """
        Tests a complete graph is Cohen-Macaulay.
        """
        report = hg.chordal_cm_check(complete_graph([1, 2, 3, 4]))
        self.assertTrue(report.unmixed)
        self.assertEqual(report.free_facet_partition, [{1, 2, 3, 4}])
        self.assertEqual(report.verdict, CM_CHORDAL)

    def test_tree(self):
        """
        Tests the tree case.
        """
        self.assertEqual(hg.tree_cm_check(path_graph(4)).verdict, CM_CHORDAL)
        self.assertEqual(hg.tree_cm_check(path_graph(3)).verdict,
                         NOT_CM_CHORDAL)
        self.assertTrue(hg.tree_cm_check(path_graph(2)).is_tree)
        with self.assertRaises(ValueError):
            hg.tree_cm_check(cycle_graph(3))
        with self.assertRaises(ValueError):
            hg.tree_cm_check(hg.Graph([1, 2]))
