from itertools import combinations
from unittest import TestCase

import networkx as nx
import pytest
from hypothesis import given

from kecs.exceptions import NotBipartiteError, TransversalCapExceeded
from kecs.graph import (
    MultiGraph,
    Side,
    bipartition,
    is_bipartite,
    is_nearly_bipartite,
    odd_cycle_transversal,
    odd_cycle_transversal_number,
    require_bipartition,
)
from tests.graph.test_multigraph import FIGURE1_PAIRS, multigraphs


def cycle(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class BipartitionTestCase(TestCase):
    def test_even_cycle(self):
        split = bipartition(cycle(6))
        self.assertTrue(split)
        self.assertEqual(split.u_side, [0, 2, 4])
        self.assertEqual(split.w_side, [1, 3, 5])

    def test_every_edge_crosses(self):
        graph = MultiGraph.from_networkx(nx.hypercube_graph(3))
        split = bipartition(graph)
        for _, u, v in graph.edges:
            self.assertIs(split.side[u].opposite, split.side[v])

    def test_odd_cycle_witness(self):
        split = bipartition(cycle(5))
        self.assertFalse(split)
        witness = split.witness
        self.assertEqual(len(witness) % 2, 1)
        pairs = {tuple(sorted(p)) for p in cycle(5).edge_pairs()}
        for x, y in zip(witness, (*witness[1:], witness[0])):
            self.assertIn(tuple(sorted((x, y))), pairs)

    def test_parallel_edges_are_bipartite(self):
        self.assertTrue(is_bipartite(MultiGraph(2, [(0, 1)] * 4)))

    def test_removed_vertices(self):
        graph = MultiGraph(6, FIGURE1_PAIRS)
        self.assertFalse(bipartition(graph))
        split = bipartition(graph, removed=[2, 3])
        self.assertTrue(split)
        self.assertIsNone(split.side[2])

    def test_edge_subset(self):
        graph = MultiGraph(6, FIGURE1_PAIRS)
        self.assertTrue(bipartition(graph, edges={0, 1, 3, 4, 5}))

    def test_isolated_vertex_side(self):
        split = bipartition(MultiGraph(3, [(1, 2)]))
        self.assertIs(split.side[0], Side.U)

    def test_require_bipartition_raises_with_witness(self):
        with self.assertRaises(NotBipartiteError) as context:
            require_bipartition(complete(3), "Testing")
        self.assertEqual(len(context.exception.witness), 3)
        self.assertIn("Testing", str(context.exception))
        self.assertIn("oracle", str(context.exception))


class TransversalTestCase(TestCase):
    def test_bipartite_graph(self):
        self.assertEqual(odd_cycle_transversal(cycle(4)), ())
        self.assertEqual(odd_cycle_transversal_number(cycle(4)), 0)

    def test_figure1_needs_two_vertices(self):
        graph = MultiGraph(6, FIGURE1_PAIRS)
        self.assertEqual(odd_cycle_transversal_number(graph), 2)
        self.assertFalse(is_nearly_bipartite(graph))

    def test_lexicographically_first(self):
        self.assertEqual(odd_cycle_transversal(cycle(5)), (0,))
        self.assertTrue(is_nearly_bipartite(cycle(5)))

    def test_complete_graphs(self):
        self.assertEqual(odd_cycle_transversal_number(complete(4)), 2)
        self.assertEqual(odd_cycle_transversal_number(complete(5)), 3)

    def test_cap(self):
        with self.assertRaises(TransversalCapExceeded):
            odd_cycle_transversal(complete(5), cap=2)


@given(multigraphs())
def test_bipartite_matches_networkx(graph: MultiGraph):
    assert is_bipartite(graph) == nx.is_bipartite(nx.Graph(graph.to_networkx()))


@given(multigraphs(max_n=6))
def test_transversal_leaves_a_bipartite_graph(graph: MultiGraph):
    transversal = odd_cycle_transversal(graph)
    assert bipartition(graph, removed=transversal)
    if transversal:
        for smaller in combinations(range(graph.n), len(transversal) - 1):
            assert not bipartition(graph, removed=smaller)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_cycles_are_nearly_bipartite(n: int):
    assert odd_cycle_transversal_number(cycle(n)) == 1


def test_petersen_needs_three_vertices():
    petersen = MultiGraph.from_networkx(nx.petersen_graph())
    assert odd_cycle_transversal_number(petersen) == 3
    assert not is_nearly_bipartite(petersen)


def test_bipartition_iff_empty_transversal_on_the_atlas():
    # Every graph with at most 7 vertices, up to isomorphism.
    for atlas_graph in nx.graph_atlas_g()[1:]:
        graph = MultiGraph.from_networkx(atlas_graph)
        assert bool(bipartition(graph)) == (odd_cycle_transversal_number(graph) == 0)


@given(multigraphs(max_n=8, max_m=16))
def test_bipartition_iff_empty_transversal_on_eight_vertices(graph: MultiGraph):
    assert bool(bipartition(graph)) == (odd_cycle_transversal_number(graph) == 0)
