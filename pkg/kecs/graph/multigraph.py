"""
Definition of the :class:`MultiGraph` and :class:`EdgeSubgraph` classes.

Graphs are finite, undirected and loopless, but may contain parallel
edges. Vertices are the integers ``0..n-1`` and every edge is identified by
its position in the edge sequence, so two parallel edges are still two
distinct edges with two distinct ids.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from kecs.exceptions import EdgeRangeError, GraphError, LoopError, VertexRangeError
from kecs.graph import messages

if TYPE_CHECKING:
    import networkx as nx


class Edge(NamedTuple):
    id: int
    u: int
    v: int


class Deletion(NamedTuple):
    """
    Result of a deletion: the new graph and the translation of surviving
    edge ids (and vertices) from the old graph to the new one.
    """

    graph: MultiGraph
    edge_map: dict[int, int]
    vertex_map: dict[int, int]


#: (n, m, degree multiset in non-increasing order).
Fingerprint = tuple[int, int, tuple[int, ...]]


class MultiGraph:
    """
    Immutable loopless multigraph with stable, dense edge ids.

    Examples
    --------
    >>> g = MultiGraph(2, [(0, 1), (0, 1)])
    >>> g.m, g.degrees
    (2, (2, 2))
    >>> g.incident(0)
    ((0, 1), (1, 1))
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        """
        Initialize a new `MultiGraph` instance.

        Parameters
        ----------
        n : int
            Number of vertices
        edges : Iterable[tuple[int, int]]
            Endpoint pairs; the i-th pair becomes the edge with id i

        Raises
        ------
        LoopError
            Some edge joins a vertex to itself
        VertexRangeError
            Some endpoint is not in ``0..n-1``
        """
        if n < 0:
            message = messages.NEGATIVE_ORDER.format(n=n)
            raise GraphError(message)
        self.n = n
        built = []
        for edge_id, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            for vertex in (u, v):
                if not 0 <= vertex < n:
                    message = messages.VERTEX_RANGE.format(vertex=vertex, n=n)
                    raise VertexRangeError(message)
            if u == v:
                message = messages.LOOP.format(edge_id=edge_id, vertex=u)
                raise LoopError(message)
            built.append(Edge(edge_id, u, v))
        self._edges: tuple[Edge, ...] = tuple(built)
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for edge in self._edges:
            adjacency[edge.u].append((edge.id, edge.v))
            adjacency[edge.v].append((edge.id, edge.u))
        self._adjacency = tuple(tuple(incident) for incident in adjacency)
        endpoints = np.array([(e.u, e.v) for e in self._edges], dtype=np.int64).reshape(-1, 2)
        self._degrees = tuple(int(d) for d in np.bincount(endpoints.ravel(), minlength=n))

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def max_degree(self) -> int:
        """
        Returns Δ(G), the maximum vertex degree (0 for graphs without
        vertices).

        Returns
        -------
        int
            Maximum degree
        """
        return max(self._degrees, default=0)

    @property
    def max_multiplicity(self) -> int:
        pairs = Counter(self.pair(e.id) for e in self._edges)
        return max(pairs.values(), default=0)

    @property
    def fingerprint(self) -> Fingerprint:
        return self.n, self.m, tuple(sorted(self._degrees, reverse=True))

    def edge(self, edge_id: int) -> Edge:
        self._check_edge(edge_id)
        return self._edges[edge_id]

    def pair(self, edge_id: int) -> tuple[int, int]:
        """
        Returns the endpoints of an edge as a sorted pair.
        """
        _, u, v = self._edges[edge_id]
        return (u, v) if u < v else (v, u)

    def other(self, edge_id: int, vertex: int) -> int:
        _, u, v = self.edge(edge_id)
        return v if vertex == u else u

    def incident(self, vertex: int) -> tuple[tuple[int, int], ...]:
        """
        Returns the ``(edge_id, neighbor)`` pairs at `vertex`, ordered by
        edge id.
        """
        self._check_vertex(vertex)
        return self._adjacency[vertex]

    def degree(self, vertex: int) -> int:
        self._check_vertex(vertex)
        return self._degrees[vertex]

    def is_regular(self, k: int | None = None) -> bool:
        if not self._degrees:
            return k in (None, 0)
        first = self._degrees[0]
        return all(d == first for d in self._degrees) and (k is None or first == k)

    @property
    def is_cubic(self) -> bool:
        return self.n > 0 and self.is_regular(3)

    def delete_vertex(self, vertex: int) -> Deletion:
        """
        Returns G − v. Vertices above `vertex` shift down by one and the
        surviving edges are re-numbered densely, keeping their order.

        Raises
        ------
        VertexRangeError
            `vertex` is not a vertex of this graph
        """
        self._check_vertex(vertex)
        vertex_map = {old: old - (old > vertex) for old in range(self.n) if old != vertex}
        edge_map: dict[int, int] = {}
        pairs = []
        for edge in self._edges:
            if vertex in (edge.u, edge.v):
                continue
            edge_map[edge.id] = len(pairs)
            pairs.append((vertex_map[edge.u], vertex_map[edge.v]))
        return Deletion(MultiGraph(self.n - 1, pairs), edge_map, vertex_map)

    def delete_edge(self, edge_id: int) -> Deletion:
        """
        Returns G − e with re-densified edge ids.

        Raises
        ------
        EdgeRangeError
            `edge_id` is not an edge of this graph
        """
        self._check_edge(edge_id)
        edge_map = {old: old - (old > edge_id) for old in range(self.m) if old != edge_id}
        pairs = [(e.u, e.v) for e in self._edges if e.id != edge_id]
        return Deletion(MultiGraph(self.n, pairs), edge_map, {v: v for v in range(self.n)})

    def add_edge(self, u: int, v: int) -> MultiGraph:
        """
        Returns a copy of this graph with one more edge (id ``m``).
        """
        return MultiGraph(self.n, [*((e.u, e.v) for e in self._edges), (u, v)])

    def components(self) -> list[list[int]]:
        """
        Returns the vertex sets of the connected components, each sorted,
        ordered by their smallest vertex.
        """
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, component = [start], [start]
            while stack:
                x = stack.pop()
                for _, y in self._adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        component.append(y)
            result.append(sorted(component))
        return result

    def induced(self, vertices: Iterable[int]) -> MultiGraph:
        """
        Returns the subgraph induced by `vertices`, relabeled in ascending
        order.
        """
        kept = sorted(set(vertices))
        index = {old: new for new, old in enumerate(kept)}
        pairs = [(index[e.u], index[e.v]) for e in self._edges if e.u in index and e.v in index]
        return MultiGraph(len(kept), pairs)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self._edges]

    def to_record(self) -> dict[str, object]:
        """
        Returns a JSON-ready description: ``{"n": n, "edges": [[u, v], ...]}``
        with edges in id order.
        """
        return {"n": self.n, "edges": [[e.u, e.v] for e in self._edges]}

    @classmethod
    def from_record(cls, record: object) -> MultiGraph:
        """
        Inverse of :meth:`to_record`.

        Raises
        ------
        GraphError
            `record` does not have the expected shape
        """
        try:
            n = record["n"]  # type: ignore[index]
            pairs = [(u, v) for u, v in record["edges"]]  # type: ignore[index]
        except (KeyError, TypeError, ValueError):
            message = messages.BAD_RECORD.format(record=record)
            raise GraphError(message) from None
        if not isinstance(n, int) or not all(isinstance(x, int) for pair in pairs for x in pair):
            message = messages.BAD_RECORD.format(record=record)
            raise GraphError(message)
        return cls(n, pairs)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> MultiGraph:
        """
        Converts a networkx graph (simple or multi). Nodes are relabeled
        in sorted order and edges are numbered by their sorted endpoint
        pairs, so the result does not depend on insertion order.
        """
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        pairs = sorted(tuple(sorted((index[u], index[v]))) for u, v in graph.edges())
        return cls(len(nodes), pairs)

    def to_networkx(self) -> nx.MultiGraph:
        import networkx as nx

        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for edge in self._edges:
            graph.add_edge(edge.u, edge.v, key=edge.id)
        return graph

    def _check_vertex(self, vertex: int):
        if not 0 <= vertex < self.n:
            message = messages.VERTEX_RANGE.format(vertex=vertex, n=self.n)
            raise VertexRangeError(message)

    def _check_edge(self, edge_id: int):
        if not 0 <= edge_id < self.m:
            message = messages.EDGE_RANGE.format(edge_id=edge_id, m=self.m)
            raise EdgeRangeError(message)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edge_pairs() == other.edge_pairs()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.edge_pairs())))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m}, Δ={self.max_degree})"


class EdgeSubgraph:
    """
    A set of edge ids of a host :class:`MultiGraph` together with the
    degrees it induces. Instances are immutable; :meth:`replace` returns
    a new subgraph.
    """

    def __init__(self, host: MultiGraph, members: Iterable[int] = ()):
        self.host = host
        self.members = frozenset(int(e) for e in members)
        deg = [0] * host.n
        for edge_id in self.members:
            if not 0 <= edge_id < host.m:
                message = messages.EDGE_RANGE.format(edge_id=edge_id, m=host.m)
                raise EdgeRangeError(message)
            _, u, v = host.edges[edge_id]
            deg[u] += 1
            deg[v] += 1
        self.deg = tuple(deg)

    @classmethod
    def whole(cls, host: MultiGraph) -> EdgeSubgraph:
        return cls(host, range(host.m))

    def degree(self, vertex: int) -> int:
        return self.deg[vertex]

    @property
    def max_degree(self) -> int:
        return max(self.deg, default=0)

    def replace(self, remove: Iterable[int] = (), add: Iterable[int] = ()) -> EdgeSubgraph:
        return EdgeSubgraph(self.host, (self.members - set(remove)) | set(add))

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeSubgraph):
            return NotImplemented
        return self.host == other.host and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.host, self.members))

    def __repr__(self) -> str:
        return f"EdgeSubgraph({self.sorted()})"
