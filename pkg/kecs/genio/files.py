"""
Reading and writing graph files, dispatching on the file extension.
"""
from __future__ import annotations

from pathlib import Path

from kecs.exceptions import GenioError
from kecs.genio import messages
from kecs.genio.edge_list import format_edge_list, parse_edge_list
from kecs.genio.graph6 import format_graph6, parse_graph6
from kecs.graph import MultiGraph

#: Edge list extension.
EDGE_LIST_SUFFIX = ".el"

#: graph6 extension.
GRAPH6_SUFFIX = ".g6"


def read_graph(path: str | Path) -> MultiGraph:
    """
    Reads a ``.el`` or ``.g6`` file.

    Raises
    ------
    GenioError
        Unknown extension or invalid contents
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == EDGE_LIST_SUFFIX:
        return parse_edge_list(text)
    if path.suffix == GRAPH6_SUFFIX:
        return parse_graph6(text)
    message = messages.UNKNOWN_EXTENSION.format(path=path)
    raise GenioError(message)


def write_graph(path: str | Path, graph: MultiGraph, comments: tuple[str, ...] = ()):
    """
    Writes `graph` as an edge list, or as graph6 for ``.g6`` paths (which
    loses parallel edges).
    """
    path = Path(path)
    if path.suffix == GRAPH6_SUFFIX:
        path.write_text(format_graph6(graph) + "\n", encoding="utf-8")
    else:
        path.write_text(format_edge_list(graph, comments), encoding="utf-8")
