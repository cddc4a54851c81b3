import random
import unittest

import hybridgraph as hg
from hybridgraph import selftest
from hybridgraph.graph import cycle_graph, path_graph
from hybridgraph.tests import fixtures


class OracleTest(unittest.TestCase):
    """
    Tests the brute-force oracles and random generators.
    """
    def test_chordal_by_cycles(self):
        """
        Tests the cycle definition of chordality.
        """
        self.assertTrue(selftest.chordal_by_cycles(fixtures.example_graph()))
        self.assertFalse(selftest.chordal_by_cycles(cycle_graph(4)))
        self.assertFalse(selftest.chordal_by_cycles(cycle_graph(6)))
        self.assertTrue(selftest.chordal_by_cycles(path_graph(5)))

    def test_hybrid_by_partitions(self):
        """
        Tests the partition oracle for hybrid graphs.
        """
        self.assertTrue(selftest.hybrid_by_partitions(
            hg.build_hybrid(fixtures.spec_c())))
        self.assertFalse(selftest.hybrid_by_partitions(cycle_graph(5)))
        self.assertFalse(selftest.hybrid_by_partitions(path_graph(3)))

    def test_set_partitions(self):
        """
        Tests set partitions are counted by the Bell numbers.
        """
        counts = [len(list(selftest.set_partitions(list(range(n)))))
                  for n in range(6)]
        self.assertEqual(counts, [1, 1, 2, 5, 15, 52])
        self.assertEqual(len(list(selftest.all_labelled_graphs(4))), 64)

    def test_generators(self):
        """
        Tests the random generators give valid input.
        """
        rng = random.Random(1)
        for case in range(20):
            g = selftest.random_chordal_graph(rng, rng.randint(1, 8))
            self.assertTrue(g.is_chordal()[0])
            parts = selftest.random_clique_partition(rng, g)
            self.assertTrue(all(g.is_clique(p) for p in parts))
            self.assertEqual(frozenset().union(*parts), g.vertices)
            spec = selftest.random_hybrid_spec(rng)
            self.assertLessEqual(len(spec.base), 7)
            self.assertLessEqual(spec.r, 4)
            self.assertLessEqual(max(spec.sizes), 3)


class SuiteTest(unittest.TestCase):
    """
    Runs every property suite at full size.
    """
    def test_graph_core(self):
        """
        Tests graph invariants on 100 random graphs.
        """
        self.assertEqual(selftest.suite_graph_core(100), [])

    def test_complex(self):
        """
        Tests complex invariants on 100 random complexes.
        """
        self.assertEqual(selftest.suite_complex(100), [])

    def test_stanley_reisner(self):
        """
        Tests the edge ideal equals the Stanley-Reisner ideal on 500 graphs.
        """
        self.assertEqual(selftest.suite_stanley_reisner(500), [])

    def test_hybrid_structure(self):
        """
        Tests purity, facet blocks and canonical shellings on 200 specs.
        """
        self.assertEqual(selftest.suite_hybrid_structure(200), [])

    def test_whisker(self):
        """
        Tests whiskered graphs on 100 random graphs.
        """
        self.assertEqual(selftest.suite_whisker(100), [])

    def test_clique_whisker(self):
        """
        Tests clique-whiskered chordal graphs on 50 random cases.
        """
        self.assertEqual(selftest.suite_clique_whisker(50), [])

    def test_chordal_equivalence(self):
        """
        Tests the chordal conditions agree on 100 random chordal graphs.
        """
        self.assertEqual(selftest.suite_chordal_equivalence(100), [])

    def test_five_cycle(self):
        """
        Tests the 5-cycle is Cohen-Macaulay by shelling but not hybrid.
        """
        self.assertEqual(selftest.suite_remark(), [])

    def test_recognition_oracle(self):
        """
        Tests recognition against the oracle on all graphs up to 5 vertices.
        """
        self.assertEqual(selftest.suite_recognition_oracle(5), [])

    def test_run_all(self):
        """
        Tests run_all reports every suite.
        """
        results = selftest.run_all(count=3, seed=7)
        self.assertEqual(set(results), set(selftest.SUITES))
        self.assertEqual(sum(len(f) for f in results.values()), 0)
