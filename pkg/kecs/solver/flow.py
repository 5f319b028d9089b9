"""
Integral maximum flow (Dinitz's algorithm) on a small residual network.

Arcs are stored in insertion order in flat lists, each arc followed
directly by its reverse arc, so the reverse of arc ``a`` is ``a ^ 1``.
Adjacency lists preserve insertion order, which makes every search (and
therefore every result) deterministic.
"""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    """
    Directed network with integer capacities.

    Examples
    --------
    >>> net = FlowNetwork(4)
    >>> _ = net.add_arc(0, 1, 2), net.add_arc(1, 3, 1), net.add_arc(0, 2, 1), net.add_arc(2, 3, 2)
    >>> net.max_flow(0, 3)
    2
    """

    def __init__(self, n_nodes: int):
        self.n_nodes = n_nodes
        self.head: list[int] = []
        self.capacity: list[int] = []
        self.flow: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n_nodes)]
        #: Number of BFS phases run by the last :meth:`max_flow` call.
        self.phases = 0

    def add_arc(self, tail: int, head: int, capacity: int) -> int:
        """
        Adds an arc and its zero-capacity reverse.

        Returns
        -------
        int
            Id of the forward arc
        """
        arc = len(self.head)
        for start, end, cap in ((tail, head, capacity), (head, tail, 0)):
            self.out[start].append(len(self.head))
            self.head.append(end)
            self.capacity.append(cap)
            self.flow.append(0)
        return arc

    def tail(self, arc: int) -> int:
        return self.head[arc ^ 1]

    def residual(self, arc: int) -> int:
        return self.capacity[arc] - self.flow[arc]

    def push(self, arc: int, amount: int):
        self.flow[arc] += amount
        self.flow[arc ^ 1] -= amount

    def value(self, source: int) -> int:
        return sum(self.flow[arc] for arc in self.out[source] if arc % 2 == 0)

    def levels(self, source: int, sink: int) -> list[int]:
        """
        Breadth-first distances from `source` in the residual network
        (``-1`` for unreachable nodes).
        """
        level = [-1] * self.n_nodes
        level[source] = 0
        queue = deque([source])
        while queue:
            node = queue.popleft()
            if node == sink:
                break
            for arc in self.out[node]:
                head = self.head[arc]
                if level[head] < 0 and self.residual(arc) > 0:
                    level[head] = level[node] + 1
                    queue.append(head)
        return level

    def _blocking(self, node: int, sink: int, pushed: int, level: list[int], cursor: list[int]) -> int:
        if node == sink:
            return pushed
        arcs = self.out[node]
        while cursor[node] < len(arcs):
            arc = arcs[cursor[node]]
            head = self.head[arc]
            if level[head] == level[node] + 1 and self.residual(arc) > 0:
                sent = self._blocking(head, sink, min(pushed, self.residual(arc)), level, cursor)
                if sent > 0:
                    self.push(arc, sent)
                    return sent
            cursor[node] += 1
        return 0

    def max_flow(self, source: int, sink: int) -> int:
        """
        Augments the current flow to a maximum one.

        Returns
        -------
        int
            Total flow value out of `source`
        """
        self.phases = 0
        while True:
            level = self.levels(source, sink)
            if level[sink] < 0:
                return self.value(source)
            self.phases += 1
            cursor = [0] * self.n_nodes
            while self._blocking(source, sink, sum(self.capacity[a] for a in self.out[source]), level, cursor):
                pass

    def shortest_path(self, source: int, sink: int) -> list[int] | None:
        """
        Returns the arcs of a shortest residual `source`-`sink` path, or
        ``None`` when the flow is maximum.
        """
        via: list[int | None] = [None] * self.n_nodes
        seen = [False] * self.n_nodes
        seen[source] = True
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for arc in self.out[node]:
                head = self.head[arc]
                if not seen[head] and self.residual(arc) > 0:
                    seen[head] = True
                    via[head] = arc
                    if head == sink:
                        return self._trace(via, source, sink)
                    queue.append(head)
        return None

    def _trace(self, via: list[int | None], source: int, sink: int) -> list[int]:
        arcs = []
        node = sink
        while node != source:
            arc = via[node]
            arcs.append(arc)
            node = self.tail(arc)
        return arcs[::-1]
