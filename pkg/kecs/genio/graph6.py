"""
Import of simple graphs in the graph6 format of small-graph catalogs.

Only the short form (n ≤ 62, one size byte) is accepted. Decoding is left
to :func:`networkx.from_graph6_bytes`.
"""
from __future__ import annotations

import networkx as nx

from kecs.exceptions import Graph6ParseError
from kecs.genio import messages
from kecs.graph import MultiGraph

#: Optional header of graph6 files.
HEADER = ">>graph6<<"

#: Printable range of graph6 bytes (6-bit values offset by 63).
MIN_BYTE = 63
MAX_BYTE = 126


def parse_graph6(text: str) -> MultiGraph:
    """
    Parses the first graph6 string in `text`.

    Raises
    ------
    Graph6ParseError
        Empty input, a long-form size or an invalid encoding
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise Graph6ParseError(messages.GRAPH6_EMPTY)
    data = lines[0].removeprefix(HEADER)
    if data.startswith("~"):
        message = messages.GRAPH6_LONG.format(text=data)
        raise Graph6ParseError(message)
    for offset, char in enumerate(data):
        if not MIN_BYTE <= ord(char) <= MAX_BYTE:
            message = messages.GRAPH6_BYTE.format(text=data, byte=char, offset=offset)
            raise Graph6ParseError(message)
    try:
        graph = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as error:
        message = messages.GRAPH6_INVALID.format(text=data, reason=error)
        raise Graph6ParseError(message) from error
    return MultiGraph.from_networkx(graph)


def format_graph6(graph: MultiGraph) -> str:
    """
    Encodes the underlying simple graph (parallel edges collapse).
    """
    simple = nx.Graph(graph.to_networkx())
    return nx.to_graph6_bytes(simple, header=False).decode("ascii").strip()
