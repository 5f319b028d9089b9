"""
The ``.el`` edge list format, the canonical interchange format for
multigraphs.

Example::

    c a doubled edge
    p el 2 2
    e 1 2
    e 1 2

Vertices are 1-based in the file and 0-based in memory. The i-th edge line
becomes the edge with id i - 1, and repeated lines are parallel edges.
Blank lines and lines starting with ``c`` are ignored.
"""
from __future__ import annotations

import re
from collections.abc import Iterable

from kecs.exceptions import EdgeListParseError
from kecs.genio import messages
from kecs.graph import MultiGraph

#: Header line regular expression pattern.
HEADER_PATTERN = r"^p\s+el\s+(\d+)\s+(\d+)$"

#: Regular expression to match the header line.
HEADER_RE = re.compile(HEADER_PATTERN)

#: Edge line regular expression pattern.
EDGE_PATTERN = r"^e\s+(-?\d+)\s+(-?\d+)$"

#: Regular expression to match an edge line.
EDGE_RE = re.compile(EDGE_PATTERN)

#: Comment line regular expression pattern.
COMMENT_PATTERN = r"^c"

#: Regular expression to match a comment line.
COMMENT_RE = re.compile(COMMENT_PATTERN)


def parse_edge_list(text: str) -> MultiGraph:
    """
    Parses an edge list.

    Parameters
    ----------
    text : str
        File contents

    Returns
    -------
    MultiGraph
        Graph with edge ids in file order

    Raises
    ------
    EdgeListParseError
        Malformed or missing header, malformed edge line, loop, vertex out
        of range or a wrong number of edges
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or COMMENT_RE.match(line):
            continue
        if line.startswith("p"):
            if header is not None:
                message = messages.DUPLICATE_HEADER.format(line=number, text=line)
                raise EdgeListParseError(message)
            match = HEADER_RE.match(line)
            if match is None:
                message = messages.BAD_HEADER.format(line=number, text=line)
                raise EdgeListParseError(message)
            header = int(match.group(1)), int(match.group(2))
            continue
        match = EDGE_RE.match(line)
        if match is None:
            message = messages.BAD_EDGE_LINE.format(line=number, text=line)
            raise EdgeListParseError(message)
        if header is None:
            message = messages.EDGE_BEFORE_HEADER.format(line=number)
            raise EdgeListParseError(message)
        u, v = int(match.group(1)), int(match.group(2))
        for vertex in (u, v):
            if not 1 <= vertex <= header[0]:
                message = messages.EDGE_VERTEX_RANGE.format(line=number, vertex=vertex, n=header[0])
                raise EdgeListParseError(message)
        if u == v:
            message = messages.EDGE_LOOP.format(line=number, vertex=u)
            raise EdgeListParseError(message)
        pairs.append((u - 1, v - 1))
    if header is None:
        raise EdgeListParseError(messages.MISSING_HEADER)
    n, m = header
    if len(pairs) != m:
        message = messages.EDGE_COUNT.format(expected=m, found=len(pairs))
        raise EdgeListParseError(message)
    return MultiGraph(n, pairs)


def format_edge_list(graph: MultiGraph, comments: Iterable[str] = ()) -> str:
    """
    Serializes `graph` so that :func:`parse_edge_list` gives it back with
    the same edge ids.
    """
    lines = [f"c {comment}".rstrip() for comment in comments]
    lines.append(f"p el {graph.n} {graph.m}")
    lines.extend(f"e {u + 1} {v + 1}" for _, u, v in graph.edges)
    return "\n".join(lines) + "\n"
