"""
Exact ν_k for arbitrary loopless multigraphs by branch and bound.

Every edge is either colored with one of ``1..k`` or skipped. The search
keeps one bitmask of used colors per vertex, so properness is enforced
edge by edge, and prunes a branch once it provably cannot beat the best
subgraph found so far.
"""
from __future__ import annotations

import logging

from kecs.coloring import EdgeColoring
from kecs.exceptions import BudgetExhausted
from kecs.graph import EdgeSubgraph, MultiGraph
from kecs.solver import messages
from kecs.solver.result import Method, SolveResult

log = logging.getLogger(__name__)


class NuOracle:
    """
    Branch-and-bound search for a maximum k-edge-colorable subgraph.

    Edges are decided in order of descending degree sum (ties by id),
    colors before skipping and lower colors first. Since colors are
    interchangeable, an edge may only open the lowest color not used so
    far. A branch is cut when the colored edges plus the smaller of

    * the number of undecided edges and
    * ⌊Σ_v min(k − used(v), undecided(v)) / 2⌋

    cannot exceed the incumbent, which starts as the first-fit coloring.
    """

    #: Default limit on the number of search nodes.
    DEFAULT_BUDGET: int = 5_000_000

    def __init__(self, graph: MultiGraph, k: int, budget: int | None = None):
        self.graph = graph
        self.k = k
        self.budget = self.DEFAULT_BUDGET if budget is None else budget
        degrees = graph.degrees
        self.order = sorted(graph.edges, key=lambda e: (-(degrees[e.u] + degrees[e.v]), e.id))
        self.nodes = 0
        self.best: dict[int, int] = {}
        self.bound = min(graph.m, sum(min(k, d) for d in degrees) // 2)

    def first_fit(self) -> dict[int, int]:
        """
        Colors the edges in search order with the lowest color free at
        both ends, skipping edges that have none.
        """
        used = [0] * self.graph.n
        assign = {}
        for edge_id, u, v in self.order:
            taken = used[u] | used[v]
            for color in range(1, self.k + 1):
                bit = 1 << color
                if not taken & bit:
                    assign[edge_id] = color
                    used[u] |= bit
                    used[v] |= bit
                    break
        return assign

    def _optimistic(self, used: list[int], left: list[int], colored: int, position: int) -> int:
        capacity = sum(min(self.k - bin(mask).count("1"), rest) for mask, rest in zip(used, left))
        return colored + min(len(self.order) - position, capacity // 2)

    def _branch(self, position: int, used: list[int], left: list[int], assign: dict[int, int], top: int):
        self.nodes += 1
        if self.nodes > self.budget:
            message = messages.BUDGET.format(budget=self.budget, best=len(self.best))
            raise BudgetExhausted(message)
        if len(assign) > len(self.best):
            self.best = dict(assign)
            log.debug("Oracle incumbent %d after %d nodes", len(assign), self.nodes)
        if position == len(self.order) or len(self.best) == self.bound:
            return
        if self._optimistic(used, left, len(assign), position) <= len(self.best):
            return
        edge_id, u, v = self.order[position]
        left[u] -= 1
        left[v] -= 1
        taken = used[u] | used[v]
        for color in range(1, min(self.k, top + 1) + 1):
            bit = 1 << color
            if taken & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assign[edge_id] = color
            self._branch(position + 1, used, left, assign, max(top, color))
            del assign[edge_id]
            used[u] &= ~bit
            used[v] &= ~bit
            if len(self.best) == self.bound:
                break
        if len(self.best) < self.bound:
            self._branch(position + 1, used, left, assign, top)
        left[u] += 1
        left[v] += 1

    def run(self) -> SolveResult:
        """
        Runs the search.

        Returns
        -------
        SolveResult
            Maximum subgraph with its coloring; when the node budget runs
            out, the best subgraph found so far with ``verified=False``
        """
        verified = True
        if self.k > 0 and self.graph.m:
            self.best = self.first_fit()
            left = list(self.graph.degrees)
            try:
                self._branch(0, [0] * self.graph.n, left, {}, 0)
            except BudgetExhausted as error:
                log.warning(str(error))
                verified = False
        subgraph = EdgeSubgraph(self.graph, self.best)
        coloring = EdgeColoring(self.graph, self.k, self.best)
        stats = {"nodes": self.nodes, "bound": self.bound}
        return SolveResult(self.graph, self.k, subgraph, coloring, Method.ORACLE, stats, verified=verified)


def nu_oracle(graph: MultiGraph, k: int, budget: int | None = None) -> SolveResult:
    """
    Computes ν_k of any loopless multigraph exactly (intended for up to
    about 15 edges).

    Parameters
    ----------
    graph : MultiGraph
        Input graph
    k : int
        Number of colors
    budget : int, optional
        Search node limit, :attr:`NuOracle.DEFAULT_BUDGET` by default

    Returns
    -------
    SolveResult
        Unverified (a lower bound) when `budget` was exhausted
    """
    return NuOracle(graph, k, budget).run()
