"""
Augmenting paths for k-edge-colorable subgraphs of bipartite graphs.

A simple u-v path is A-augmenting when it has odd length, its odd edges
(1st, 3rd, ...) lie outside A, its even edges lie in A, and both u and v
have degree at most k − 1 in A. Exchanging the path's edges grows A by
one edge and keeps every degree at most k, which in a bipartite graph is
the same as staying k-edge-colorable. Conversely, as long as A is not
maximum, such a path exists.

Paths are found in the residual network of the flow encoding used by
:mod:`kecs.solver.network`: a residual source-sink path runs
source → u, then alternates forward (non-member) and backward (member)
edge arcs, and ends w → sink, i.e. it is exactly an augmenting path.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from kecs.coloring import konig_color
from kecs.exceptions import InvalidAugmentingPath
from kecs.graph import EdgeSubgraph, MultiGraph, bipartition, require_bipartition
from kecs.solver import messages
from kecs.solver.network import DegreeNetwork
from kecs.solver.result import Method, SolveResult

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AugmentingPath:
    """
    Odd alternating path: :attr:`walk` holds the edge ids, :attr:`vertices`
    the visited vertices (one more than edges).
    """

    walk: tuple[int, ...]
    vertices: tuple[int, ...]
    k: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def odd_edges(self) -> tuple[int, ...]:
        return self.walk[0::2]

    @property
    def even_edges(self) -> tuple[int, ...]:
        return self.walk[1::2]

    def __len__(self) -> int:
        return len(self.walk)


def greedy_initial(graph: MultiGraph, k: int) -> EdgeSubgraph:
    """
    Returns a maximal (not necessarily maximum) subgraph with maximum
    degree at most `k`: edges are scanned by ascending id and kept when
    both endpoints still have degree below `k`.
    """
    degree = [0] * graph.n
    members = []
    for edge_id, u, v in graph.edges:
        if degree[u] < k and degree[v] < k:
            members.append(edge_id)
            degree[u] += 1
            degree[v] += 1
    return EdgeSubgraph(graph, members)


def validate_augmenting_path(subgraph: EdgeSubgraph, path: AugmentingPath):
    """
    Checks every defining property of an augmenting path.

    Raises
    ------
    InvalidAugmentingPath
        Naming the first property that fails
    """
    graph, k = subgraph.host, path.k
    if subgraph.max_degree > k:
        message = messages.DEGREE_ABOVE_K.format(degree=subgraph.max_degree, k=k)
        raise InvalidAugmentingPath(message)
    if len(path.walk) % 2 == 0:
        message = messages.PATH_EVEN.format(length=len(path.walk))
        raise InvalidAugmentingPath(message)
    seen: set[int] = set()
    for vertex in path.vertices:
        if vertex in seen:
            message = messages.PATH_NOT_SIMPLE.format(vertex=vertex)
            raise InvalidAugmentingPath(message)
        seen.add(vertex)
    if len(path.vertices) != len(path.walk) + 1:
        message = messages.PATH_LENGTHS.format(edges=len(path.walk), vertices=len(path.vertices))
        raise InvalidAugmentingPath(message)
    for position, edge_id in enumerate(path.walk, start=1):
        here, there = path.vertices[position - 1], path.vertices[position]
        if not 0 <= edge_id < graph.m or graph.pair(edge_id) != tuple(sorted((here, there))):
            message = messages.PATH_BROKEN.format(edge_id=edge_id, position=position, vertex=here)
            raise InvalidAugmentingPath(message)
        should_be_member = position % 2 == 0
        if (edge_id in subgraph) != should_be_member:
            expected = "belong to" if should_be_member else "lie outside"
            message = messages.PATH_PARITY.format(edge_id=edge_id, position=position, expected=expected)
            raise InvalidAugmentingPath(message)
    for vertex in path.endpoints:
        if subgraph.degree(vertex) > k - 1:
            message = messages.PATH_ENDPOINT.format(vertex=vertex, degree=subgraph.degree(vertex), limit=k - 1)
            raise InvalidAugmentingPath(message)


def _search_alternating(subgraph: EdgeSubgraph, k: int) -> AugmentingPath | None:
    """
    Exhaustive depth-first search over simple alternating paths; works on
    any graph, lowest edge id first.
    """
    graph = subgraph.host

    def extend(vertices: list[int], walk: list[int]) -> AugmentingPath | None:
        want_member = len(walk) % 2 == 1
        for edge_id, neighbor in graph.incident(vertices[-1]):
            if (edge_id in subgraph) != want_member or neighbor in vertices:
                continue
            vertices.append(neighbor)
            walk.append(edge_id)
            if not want_member and subgraph.degree(neighbor) <= k - 1:
                return AugmentingPath(tuple(walk), tuple(vertices), k)
            found = extend(vertices, walk)
            if found is not None:
                return found
            vertices.pop()
            walk.pop()
        return None

    for start in range(graph.n):
        if subgraph.degree(start) <= k - 1:
            found = extend([start], [])
            if found is not None:
                return found
    return None


def find_augmenting_path(
    graph: MultiGraph,
    subgraph: EdgeSubgraph,
    k: int,
    *,
    require_bipartite: bool = True,
) -> AugmentingPath | None:
    """
    Looks for an augmenting path with respect to `subgraph`.

    On a bipartite graph the search runs in the residual network of the
    flow encoding and is complete: ``None`` means `subgraph` is maximum.
    With ``require_bipartite=False`` a non-bipartite graph is searched
    exhaustively instead; there a path may exist even for a maximum
    subgraph, and its absence proves nothing.

    Parameters
    ----------
    graph : MultiGraph
        Host graph
    subgraph : EdgeSubgraph
        Current subgraph, maximum degree at most `k`
    k : int
        Degree bound / number of colors
    require_bipartite : bool, optional
        Raise for non-bipartite graphs (default) instead of searching
        exhaustively

    Returns
    -------
    AugmentingPath or None
        Shortest residual path (lowest edge ids on ties), or ``None``

    Raises
    ------
    NotBipartiteError
        `graph` has an odd cycle and `require_bipartite` is set
    """
    if subgraph.max_degree > k:
        message = messages.DEGREE_ABOVE_K.format(degree=subgraph.max_degree, k=k)
        raise InvalidAugmentingPath(message)
    if k <= 0:
        return None
    split = bipartition(graph)
    if not split:
        if require_bipartite:
            require_bipartition(graph, "Augmenting path search")
        log.debug("Searching alternating paths exhaustively in non-bipartite %r", graph)
        return _search_alternating(subgraph, k)
    network = DegreeNetwork(graph, split, k, subgraph.members)
    arcs = network.network.shortest_path(network.source, network.sink)
    if arcs is None:
        return None
    walk, vertices = network.translate(arcs)
    path = AugmentingPath(walk, vertices, k)
    validate_augmenting_path(subgraph, path)
    return path


def augment(subgraph: EdgeSubgraph, path: AugmentingPath) -> EdgeSubgraph:
    """
    Removes the even edges of `path` from `subgraph` and adds the odd ones,
    yielding a subgraph with one more edge and maximum degree at most k.

    Raises
    ------
    InvalidAugmentingPath
        `path` is not augmenting for `subgraph`
    """
    validate_augmenting_path(subgraph, path)
    return subgraph.replace(remove=path.even_edges, add=path.odd_edges)


def solve_augmenting(graph: MultiGraph, k: int) -> SolveResult:
    """
    Grows the greedy subgraph along augmenting paths until none is left;
    the final subgraph is maximum and is colored with König's method.

    Raises
    ------
    NotBipartiteError
        `graph` has an odd cycle
    """
    require_bipartition(graph, "The augmenting path solver")
    if k == 0:
        subgraph = EdgeSubgraph(graph)
        stats = {"initial": 0, "augmentations": 0}
    elif k >= graph.max_degree:
        subgraph = EdgeSubgraph.whole(graph)
        stats = {"initial": graph.m, "augmentations": 0}
    else:
        subgraph = greedy_initial(graph, k)
        stats = {"initial": len(subgraph), "augmentations": 0}
        while (path := find_augmenting_path(graph, subgraph, k)) is not None:
            subgraph = augment(subgraph, path)
            stats["augmentations"] += 1
            log.debug("Augmented along %s to %d edges", list(path.walk), len(subgraph))
    coloring = konig_color(subgraph, k)
    return SolveResult(graph, k, subgraph, coloring, Method.AUGMENTING, stats)
