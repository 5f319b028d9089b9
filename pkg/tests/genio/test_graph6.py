from unittest import TestCase

import networkx as nx
import pytest

from kecs.exceptions import GenioError, Graph6ParseError
from kecs.genio import format_graph6, parse_graph6, read_graph, write_graph
from kecs.genio.named import shannon
from tests.fixtures import PETERSEN_GRAPH6


class Graph6TestCase(TestCase):
    def test_petersen_file(self):
        graph = read_graph(PETERSEN_GRAPH6)
        self.assertEqual(graph.fingerprint, (10, 15, (3,) * 10))
        self.assertTrue(nx.is_isomorphic(nx.Graph(graph.to_networkx()), nx.petersen_graph()))

    def test_without_header(self):
        self.assertEqual(parse_graph6("Bw\n").edge_pairs(), [(0, 1), (0, 2), (1, 2)])

    def test_parallel_edges_collapse(self):
        encoded = format_graph6(shannon(3))
        self.assertEqual(encoded, "Bw")
        self.assertEqual(parse_graph6(encoded).m, 3)

    def test_empty_raises(self):
        with self.assertRaises(Graph6ParseError):
            parse_graph6("\n\n")

    def test_long_form_raises(self):
        with self.assertRaises(Graph6ParseError):
            parse_graph6("~?@cxxxx")

    def test_non_ascii_raises(self):
        with self.assertRaises(Graph6ParseError):
            parse_graph6("Bé")


@pytest.mark.parametrize(
    ("text", "offset"),
    [("A!", 1), ("C#", 1), ("D?_!", 3), ("!A", 0)],
)
def test_bytes_below_range_raise(text: str, offset: int):
    with pytest.raises(Graph6ParseError, match=f"at offset {offset} is outside 63..126"):
        parse_graph6(text)


def test_write_and_read_files(tmp_path):
    graph = shannon(2)
    write_graph(tmp_path / "shannon.el", graph, ("doubled triangle",))
    assert read_graph(tmp_path / "shannon.el") == graph
    write_graph(tmp_path / "shannon.g6", graph)
    assert read_graph(tmp_path / "shannon.g6").m == 3


def test_unknown_extension(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("p el 1 0\n", encoding="utf-8")
    with pytest.raises(GenioError, match="graph.txt"):
        read_graph(path)
