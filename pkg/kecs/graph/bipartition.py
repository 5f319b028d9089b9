"""
Bipartition detection and the odd cycle transversal number b(G).

:func:`bipartition` 2-colors the graph breadth-first. When two adjacent
vertices end up on the same side, the tree paths from both of them to
their lowest common ancestor close an odd cycle, which is returned as
the witness.
"""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Collection, Iterable
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from kecs.exceptions import NotBipartiteError, TransversalCapExceeded
from kecs.graph import messages
from kecs.graph.multigraph import MultiGraph
from kecs.messages import NOT_BIPARTITE

log = logging.getLogger(__name__)


class Side(str, Enum):
    U = "U"
    W = "W"

    @property
    def opposite(self) -> Side:
        return Side.W if self is Side.U else Side.U


@dataclass(frozen=True)
class Bipartition:
    """
    Either a two-sided labeling (`side`) or, when the graph has an odd
    cycle, the vertex sequence of an odd closed walk (`witness`); the walk
    closes from its last vertex back to the first one.

    Removed vertices are labeled ``None``.
    """

    side: tuple[Side | None, ...] | None = None
    witness: tuple[int, ...] | None = None

    @property
    def present(self) -> bool:
        return self.side is not None

    def __bool__(self) -> bool:
        return self.present

    @property
    def u_side(self) -> list[int]:
        return [v for v, s in enumerate(self.side or ()) if s is Side.U]

    @property
    def w_side(self) -> list[int]:
        return [v for v, s in enumerate(self.side or ()) if s is Side.W]


def _tree_path(parent: list[int], vertex: int) -> list[int]:
    path = [vertex]
    while parent[path[-1]] != path[-1]:
        path.append(parent[path[-1]])
    return path


def _odd_cycle(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    up_x = _tree_path(parent, x)
    up_y = _tree_path(parent, y)
    on_y = set(up_y)
    lca = next(v for v in up_x if v in on_y)
    head = up_x[: up_x.index(lca) + 1]
    tail = up_y[: up_y.index(lca)]
    return (*head, *reversed(tail))


def bipartition(
    graph: MultiGraph,
    removed: Iterable[int] = (),
    edges: Collection[int] | None = None,
) -> Bipartition:
    """
    Tries to split the vertices into two sides U and W such that every
    edge joins U to W.

    Parameters
    ----------
    graph : MultiGraph
        Input graph
    removed : Iterable[int], optional
        Vertices to ignore, i.e. test G − S instead of G
    edges : Collection[int], optional
        Only consider these edge ids (e.g. the members of an
        :class:`~kecs.graph.multigraph.EdgeSubgraph`)

    Returns
    -------
    Bipartition
        Sides when bipartite, otherwise an odd closed walk witness
    """
    dropped = set(removed)
    side: list[Side | None] = [None] * graph.n
    parent = list(range(graph.n))
    for start in range(graph.n):
        if start in dropped or side[start] is not None:
            continue
        side[start] = Side.U
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for edge_id, y in graph.incident(x):
                if y in dropped or (edges is not None and edge_id not in edges):
                    continue
                if side[y] is None:
                    side[y] = side[x].opposite
                    parent[y] = x
                    queue.append(y)
                elif side[y] is side[x]:
                    return Bipartition(witness=_odd_cycle(parent, x, y))
    return Bipartition(side=tuple(side))


def require_bipartition(graph: MultiGraph, operation: str, edges: Collection[int] | None = None) -> Bipartition:
    """
    Returns the bipartition of `graph` or raises :class:`NotBipartiteError`
    naming `operation`.
    """
    split = bipartition(graph, edges=edges)
    if not split:
        message = NOT_BIPARTITE.format(operation=operation, witness=list(split.witness))
        raise NotBipartiteError(message, split.witness)
    return split


def is_bipartite(graph: MultiGraph) -> bool:
    return bipartition(graph).present


def odd_cycle_transversal(graph: MultiGraph, cap: int | None = None) -> tuple[int, ...]:
    """
    Returns a smallest vertex set S such that G − S is bipartite.

    Subsets are tried exhaustively in increasing size, and in
    lexicographic order within one size, so the result is deterministic.

    Parameters
    ----------
    graph : MultiGraph
        Input graph
    cap : int, optional
        Largest transversal size worth trying

    Returns
    -------
    tuple[int, ...]
        Sorted transversal

    Raises
    ------
    TransversalCapExceeded
        No transversal of size at most `cap` exists
    """
    limit = graph.n if cap is None else min(cap, graph.n)
    for size in range(limit + 1):
        for subset in combinations(range(graph.n), size):
            if bipartition(graph, removed=subset):
                log.debug("Odd cycle transversal of %r: %s", graph, subset)
                return subset
    message = messages.CAP_EXCEEDED.format(cap=cap)
    raise TransversalCapExceeded(message)


def odd_cycle_transversal_number(graph: MultiGraph, cap: int | None = None) -> int:
    """
    Returns b(G), the smallest number of vertices whose removal leaves a
    bipartite graph. b(G) = 0 iff G is bipartite and b(G) ≤ 1 iff G is
    nearly bipartite.

    See Also
    --------
    * :func:`odd_cycle_transversal`
    """
    return len(odd_cycle_transversal(graph, cap))


def is_nearly_bipartite(graph: MultiGraph) -> bool:
    try:
        odd_cycle_transversal(graph, cap=1)
    except TransversalCapExceeded:
        return False
    return True
