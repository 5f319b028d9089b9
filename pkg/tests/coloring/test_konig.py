from unittest import TestCase

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from kecs.coloring import color_classes_are_matchings, konig_color, verify_coloring
from kecs.exceptions import DegreeExceedsK, NotBipartiteError
from kecs.genio import read_graph
from kecs.graph import EdgeSubgraph, MultiGraph
from kecs.solver import solve
from tests.fixtures import DIGON_EDGE_LIST, K33_EDGE_LIST


@st.composite
def bipartite_multigraphs(draw, max_side: int = 4, max_m: int = 14) -> MultiGraph:
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    pair = st.tuples(st.integers(0, a - 1), st.integers(a, a + b - 1))
    return MultiGraph(a + b, draw(st.lists(pair, max_size=max_m)))


class KonigColorTestCase(TestCase):
    def test_k33(self):
        graph = read_graph(K33_EDGE_LIST)
        whole = EdgeSubgraph.whole(graph)
        coloring = konig_color(whole, 3)
        self.assertEqual(len(coloring), 9)
        self.assertTrue(verify_coloring(whole, coloring, 3))

    def test_parallel_edges(self):
        graph = read_graph(DIGON_EDGE_LIST)
        whole = EdgeSubgraph.whole(graph)
        self.assertEqual(whole.max_degree, 4)
        self.assertTrue(verify_coloring(whole, konig_color(whole, 4), 4))

    def test_cube(self):
        cube = MultiGraph.from_networkx(nx.hypercube_graph(3))
        coloring = konig_color(EdgeSubgraph.whole(cube), 3)
        self.assertTrue(color_classes_are_matchings(coloring))
        self.assertEqual(sorted(len(members) for members in coloring.classes.values()), [4, 4, 4])

    def test_spare_colors(self):
        graph = MultiGraph(3, [(0, 1), (1, 2)])
        coloring = konig_color(EdgeSubgraph.whole(graph), 5)
        self.assertEqual(coloring.assign, {0: 1, 1: 2})

    def test_subgraph_of_a_non_bipartite_graph(self):
        triangle = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
        subgraph = EdgeSubgraph(triangle, [0, 2])
        coloring = konig_color(subgraph, 2)
        self.assertIsNone(coloring.color(1))
        self.assertTrue(verify_coloring(subgraph, coloring, 2))

    def test_degree_exceeds_k(self):
        graph = read_graph(DIGON_EDGE_LIST)
        with self.assertRaises(DegreeExceedsK):
            konig_color(EdgeSubgraph.whole(graph), 3)

    def test_odd_cycle_raises(self):
        triangle = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
        with self.assertRaises(NotBipartiteError):
            konig_color(EdgeSubgraph.whole(triangle), 2)


@given(bipartite_multigraphs())
def test_max_degree_colors_suffice(graph: MultiGraph):
    whole = EdgeSubgraph.whole(graph)
    k = max(whole.max_degree, 1)
    coloring = konig_color(whole, k)
    assert verify_coloring(whole, coloring, k)
    assert coloring.is_total(whole)


@given(bipartite_multigraphs(), st.data())
def test_spare_colors_match_the_flow_value(graph: MultiGraph, data: st.DataObject):
    whole = EdgeSubgraph.whole(graph)
    delta = max(whole.max_degree, 1)
    k = data.draw(st.integers(delta, 2 * delta))
    coloring = konig_color(whole, k)
    assert verify_coloring(whole, coloring, k)
    assert len(coloring) == solve(graph, k, "flow").nu == graph.m
