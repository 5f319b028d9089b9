"""
Kempe chains: maximal α-β alternating walks of an edge coloring.

Every vertex has at most one α-edge and one β-edge, so the component of
E_α ∪ E_β through a vertex is a path or an even cycle. Exchanging α and β
along a whole component keeps the coloring proper.
"""
from __future__ import annotations

from dataclasses import dataclass

from kecs.coloring import messages
from kecs.coloring.coloring import EdgeColoring
from kecs.exceptions import ColoringError, StaleKempePath


@dataclass(frozen=True)
class KempePath:
    """
    An α-β Kempe chain through :attr:`anchor`.

    For paths, :attr:`walk` runs from ``endpoints[0]`` to ``endpoints[1]``;
    for cycles it starts and ends at the anchor and :attr:`endpoints` is
    ``None``.
    """

    colors: tuple[int, int]
    walk: tuple[int, ...]
    anchor: int
    endpoints: tuple[int, int] | None
    is_cycle: bool = False

    def __len__(self) -> int:
        return len(self.walk)

    @property
    def is_empty(self) -> bool:
        return not self.walk


def _follow(coloring: EdgeColoring, start: int, first: int, alpha: int, beta: int) -> tuple[list[int], int, bool]:
    """
    Walks from `start` beginning with color `first`, alternating between
    `alpha` and `beta`. Returns the edges, the last vertex and whether the
    walk came back to its first edge (a cycle).
    """
    walk: list[int] = []
    vertex, color = start, first
    while True:
        edge_id = coloring.edge_at(vertex, color)
        if edge_id is None:
            return walk, vertex, False
        if walk and edge_id == walk[0]:
            return walk, vertex, True
        walk.append(edge_id)
        vertex = coloring.graph.other(edge_id, vertex)
        color = beta if color == alpha else alpha


def kempe_path(coloring: EdgeColoring, vertex: int, alpha: int, beta: int) -> KempePath:
    """
    Returns the maximal α-β alternating walk containing `vertex`.

    Parameters
    ----------
    coloring : EdgeColoring
        Current coloring
    vertex : int
        Vertex the chain must contain
    alpha, beta : int
        The two (distinct) colors

    Returns
    -------
    KempePath
        Path (possibly empty when `vertex` misses both colors) or cycle
    """
    if alpha == beta:
        message = messages.SAME_COLORS.format(alpha=alpha)
        raise ColoringError(message)
    coloring.graph.incident(vertex)  # range check
    forward, forward_end, closed = _follow(coloring, vertex, alpha, alpha, beta)
    if closed:
        return KempePath((alpha, beta), tuple(forward), vertex, None, is_cycle=True)
    backward, backward_end, _ = _follow(coloring, vertex, beta, alpha, beta)
    walk = (*reversed(backward), *forward)
    return KempePath((alpha, beta), walk, vertex, (backward_end, forward_end))


def kempe_swap(coloring: EdgeColoring, path: KempePath) -> EdgeColoring:
    """
    Returns a new coloring with α and β exchanged on the edges of `path`.

    Raises
    ------
    StaleKempePath
        `path` is no longer a maximal chain of `coloring`
    """
    alpha, beta = path.colors
    current = kempe_path(coloring, path.anchor, alpha, beta)
    if set(current.walk) != set(path.walk):
        message = messages.STALE_PATH.format(walk=list(path.walk), alpha=alpha, beta=beta)
        raise StaleKempePath(message)
    swapped = coloring.copy()
    _swap_in_place(swapped, path)
    return swapped


def _swap_in_place(coloring: EdgeColoring, path: KempePath):
    alpha, beta = path.colors
    changes = {edge_id: beta if coloring.color(edge_id) == alpha else alpha for edge_id in path.walk}
    coloring.recolor(changes)
