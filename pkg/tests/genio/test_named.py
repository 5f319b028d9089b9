from unittest import TestCase

import pytest

from kecs.coloring import verify_coloring
from kecs.exceptions import UnknownGraphName
from kecs.genio import FIGURE1_A2, figure1, figure1_a2, gen_named, read_graph
from kecs.solver import nu_oracle
from tests.fixtures import FIGURE1_EDGE_LIST, K33_EDGE_LIST


class NamedGraphTestCase(TestCase):
    def test_fixed_instances_match_the_files(self):
        self.assertEqual(gen_named("figure1"), read_graph(FIGURE1_EDGE_LIST))
        self.assertEqual(gen_named("k33").fingerprint, read_graph(K33_EDGE_LIST).fingerprint)

    def test_case_and_whitespace(self):
        self.assertEqual(gen_named(" KBIP:2,3 ").m, 6)

    def test_theta(self):
        graph = gen_named("theta:1,2,3")
        self.assertEqual((graph.n, graph.m), (5, 6))
        self.assertEqual(graph.degree(0), 3)

    def test_shannon(self):
        graph = gen_named("shannon:2")
        self.assertEqual(graph.max_multiplicity, 2)
        self.assertEqual(graph.max_degree, 4)

    def test_figure1_companion_is_maximum(self):
        subgraph, coloring = figure1_a2()
        self.assertEqual(subgraph.sorted(), sorted(FIGURE1_A2))
        self.assertTrue(verify_coloring(subgraph, coloring, 2))
        self.assertEqual(nu_oracle(figure1(), 2).nu, len(subgraph))


@pytest.mark.parametrize(
    "name,n,m",
    [
        ("cycle:2", 2, 2),
        ("path:1", 1, 0),
        ("star:0", 1, 0),
        ("complete:5", 5, 10),
        ("cube", 8, 12),
        ("k4", 4, 6),
    ],
)
def test_sizes(name: str, n: int, m: int):
    graph = gen_named(name)
    assert (graph.n, graph.m) == (n, m)


@pytest.mark.parametrize("name", ["dodecahedron", "cycle", "cycle:1", "cycle:x", "kbip:2", "theta:1,2"])
def test_bad_names(name: str):
    with pytest.raises(UnknownGraphName):
        gen_named(name)
