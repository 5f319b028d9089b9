"""
Constructive König coloring: a bipartite (multi)graph with maximum degree
at most k has a proper k-edge-coloring.
"""
from __future__ import annotations

import logging

from kecs.coloring import messages
from kecs.coloring.coloring import EdgeColoring
from kecs.coloring.kempe import _swap_in_place, kempe_path
from kecs.exceptions import DegreeExceedsK, KempeChainClosed
from kecs.graph import EdgeSubgraph, require_bipartition

log = logging.getLogger(__name__)


def konig_color(subgraph: EdgeSubgraph, k: int) -> EdgeColoring:
    """
    Colors every edge of a bipartite subgraph with colors ``1..k``.

    Edges are inserted by ascending id. An edge uv takes the lowest color
    free at both ends; otherwise, with α the lowest color free at u and β
    the lowest free at v, the α/β chain starting at v is swapped (it cannot
    reach u, or together with uv it would close an odd cycle) and uv gets
    α.

    Parameters
    ----------
    subgraph : EdgeSubgraph
        Edges to color
    k : int
        Number of colors

    Returns
    -------
    EdgeColoring
        Total proper coloring of `subgraph`

    Raises
    ------
    NotBipartiteError
        The subgraph contains an odd cycle
    DegreeExceedsK
        Some vertex has more than `k` incident subgraph edges
    """
    host = subgraph.host
    require_bipartition(host, "König coloring", edges=subgraph.members)
    if subgraph.max_degree > k:
        vertex = subgraph.deg.index(subgraph.max_degree)
        message = messages.DEGREE_EXCEEDS_K.format(degree=subgraph.max_degree, vertex=vertex, k=k)
        raise DegreeExceedsK(message)
    coloring = EdgeColoring(host, k)
    swaps = 0
    for edge_id in subgraph:
        _, u, v = host.edges[edge_id]
        color = coloring.free_color(u, v)
        if color is None:
            alpha = coloring.missing_colors(u)[0]
            beta = coloring.missing_colors(v)[0]
            chain = kempe_path(coloring, v, alpha, beta)
            if u in chain.endpoints:
                message = messages.CHAIN_CLOSED.format(alpha=alpha, beta=beta, start=v, end=u)
                raise KempeChainClosed(message)
            _swap_in_place(coloring, chain)
            swaps += 1
            color = alpha
        coloring.set_color(edge_id, color)
    log.debug("König coloring of %d edges with k=%d used %d Kempe swaps", len(subgraph), k, swaps)
    return coloring
