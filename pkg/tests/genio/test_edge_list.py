from unittest import TestCase

import pytest

from kecs.exceptions import EdgeListParseError
from kecs.genio import format_edge_list, parse_edge_list, read_graph
from tests.fixtures import DIGON_EDGE_LIST, FIGURE1_EDGE_LIST, LOOP_EDGE_LIST


class ParseEdgeListTestCase(TestCase):
    def test_figure1(self):
        graph = read_graph(FIGURE1_EDGE_LIST)
        self.assertEqual(graph.n, 6)
        self.assertEqual(graph.edge_pairs(), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])

    def test_parallel_lines_are_parallel_edges(self):
        graph = read_graph(DIGON_EDGE_LIST)
        self.assertEqual(graph.max_multiplicity, 3)
        self.assertEqual(graph.m, 4)

    def test_comments_and_blank_lines(self):
        graph = parse_edge_list("c first\n\np el 3 1\nc\n   e 3 1  \n")
        self.assertEqual(graph.edge(0).u, 2)
        self.assertEqual(graph.pair(0), (0, 2))

    def test_comment_without_a_space(self):
        graph = parse_edge_list("cgenerated by hand\np el 2 1\nc:note\ne 1 2\n")
        self.assertEqual(graph.edge_pairs(), [(0, 1)])

    def test_isolated_vertices(self):
        graph = parse_edge_list("p el 4 0\n")
        self.assertEqual((graph.n, graph.m), (4, 0))

    def test_loop_raises(self):
        with self.assertRaises(EdgeListParseError) as context:
            read_graph(LOOP_EDGE_LIST)
        self.assertIn("Line 3", str(context.exception))

    def test_format(self):
        graph = read_graph(DIGON_EDGE_LIST)
        text = format_edge_list(graph, ["doubled", ""])
        self.assertEqual(text, "c doubled\nc\np el 3 4\ne 1 2\ne 1 2\ne 1 2\ne 2 3\n")
        self.assertEqual(parse_edge_list(text), graph)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "e 1 2\n",
        "p el 2 1\np el 2 1\ne 1 2\n",
        "p el two 1\n",
        "p el 2 1\ne 1\n",
        "p el 2 1\ne 0 1\n",
        "p el 2 1\ne 1 3\n",
        "p el 2 2\ne 1 2\n",
        "p el 2 1\ne 1 2\ne 1 2\n",
        "p el 2 1\nx 1 2\n",
    ],
)
def test_malformed_edge_lists(text: str):
    with pytest.raises(EdgeListParseError):
        parse_edge_list(text)
