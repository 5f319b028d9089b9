"""
Flow encoding of degree-bounded subgraphs of a bipartite multigraph.

Nodes are the graph's vertices plus a source and a sink. The source feeds
every U-vertex with capacity min(k, deg), every edge becomes a unit arc
from its U-end to its W-end (parallel edges give parallel arcs) and every
W-vertex drains into the sink with capacity min(k, deg). Integral flows
correspond one-to-one to subgraphs with maximum degree at most k, the
flow value being the number of edges.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable

from kecs.coloring import konig_color
from kecs.graph import Bipartition, EdgeSubgraph, MultiGraph, Side, require_bipartition
from kecs.solver.flow import FlowNetwork
from kecs.solver.result import Method, SolveResult

log = logging.getLogger(__name__)


class DegreeNetwork:
    def __init__(self, graph: MultiGraph, split: Bipartition, k: int, members: Iterable[int] = ()):
        """
        Builds the network and loads the flow of an existing subgraph.

        Parameters
        ----------
        graph : MultiGraph
            Bipartite host graph
        split : Bipartition
            Sides of `graph`
        k : int
            Degree bound
        members : Iterable[int], optional
            Edge ids of a subgraph with maximum degree at most `k`
        """
        self.graph = graph
        self.k = k
        self.source = graph.n
        self.sink = graph.n + 1
        self.network = FlowNetwork(graph.n + 2)
        self._vertex_arc: list[int] = [-1] * graph.n
        self._edge_arc: list[int] = [-1] * graph.m
        self._arc_edge: dict[int, int] = {}
        for vertex in split.u_side:
            cap = min(k, graph.degree(vertex))
            self._vertex_arc[vertex] = self.network.add_arc(self.source, vertex, cap)
        for edge_id, u, v in graph.edges:
            tail, head = (u, v) if split.side[u] is Side.U else (v, u)
            arc = self.network.add_arc(tail, head, 1)
            self._edge_arc[edge_id] = arc
            self._arc_edge[arc] = edge_id
        for vertex in split.w_side:
            cap = min(k, graph.degree(vertex))
            self._vertex_arc[vertex] = self.network.add_arc(vertex, self.sink, cap)
        for edge_id in members:
            _, u, v = graph.edges[edge_id]
            self.network.push(self._edge_arc[edge_id], 1)
            for vertex in (u, v):
                self.network.push(self._vertex_arc[vertex], 1)

    def max_flow(self) -> int:
        return self.network.max_flow(self.source, self.sink)

    def subgraph(self) -> EdgeSubgraph:
        """
        Returns the edges whose arcs carry flow.
        """
        members = [edge_id for edge_id, arc in enumerate(self._edge_arc) if self.network.flow[arc] > 0]
        return EdgeSubgraph(self.graph, members)

    def translate(self, arcs: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """
        Turns a residual source-sink path into the edge ids and vertices of
        the corresponding augmenting path.
        """
        inner = arcs[1:-1]
        walk = tuple(self._arc_edge[arc & ~1] for arc in inner)
        vertices = (self.network.head[arcs[0]], *(self.network.head[arc] for arc in inner))
        return walk, vertices


def solve_flow(graph: MultiGraph, k: int) -> SolveResult:
    """
    Computes ν_k of a bipartite multigraph as an integral maximum flow
    (Dinitz) in the degree network; the saturated edge arcs form the
    maximum subgraph, which is then colored with König's method.

    Raises
    ------
    NotBipartiteError
        `graph` has an odd cycle
    """
    split = require_bipartition(graph, "The flow solver")
    if k == 0:
        subgraph, stats = EdgeSubgraph(graph), {"flow": 0, "phases": 0}
    elif k >= graph.max_degree:
        subgraph, stats = EdgeSubgraph.whole(graph), {"flow": graph.m, "phases": 0}
    else:
        network = DegreeNetwork(graph, split, k)
        value = network.max_flow()
        subgraph = network.subgraph()
        stats = {"flow": value, "phases": network.network.phases}
        log.debug("Max flow %d after %d phases (k=%d)", value, network.network.phases, k)
    coloring = konig_color(subgraph, k)
    return SolveResult(graph, k, subgraph, coloring, Method.FLOW, stats)
