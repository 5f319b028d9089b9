"""
Method dispatch and cross-checking of the three ν_k solvers.
"""
from __future__ import annotations

import logging

from kecs import messages as common
from kecs.exceptions import BudgetExhausted, MethodDisagreement, SolverError
from kecs.graph import MultiGraph, is_bipartite
from kecs.solver import messages
from kecs.solver.augmenting import solve_augmenting
from kecs.solver.network import solve_flow
from kecs.solver.oracle import NuOracle, nu_oracle
from kecs.solver.result import Method, SolveResult

log = logging.getLogger(__name__)


def solve(
    graph: MultiGraph,
    k: int,
    method: str | Method = Method.AUGMENTING,
    budget: int | None = None,
) -> SolveResult:
    """
    Computes a maximum k-edge-colorable subgraph of `graph`.

    Parameters
    ----------
    graph : MultiGraph
        Input graph
    k : int
        Number of colors
    method : str or Method
        ``augmenting`` (alias ``augment``) and ``flow`` need a bipartite
        graph, ``oracle`` accepts any graph
    budget : int, optional
        Node budget of the oracle

    Returns
    -------
    SolveResult
        Subgraph, coloring and statistics

    Raises
    ------
    UnknownMethod
        `method` is not a known method name
    NotBipartiteError
        A bipartite-only method got a graph with an odd cycle
    """
    if k < 0:
        message = common.NEGATIVE_K.format(k=k)
        raise SolverError(message)
    method = Method.parse(method)
    if method is Method.AUGMENTING:
        return solve_augmenting(graph, k)
    if method is Method.FLOW:
        return solve_flow(graph, k)
    return nu_oracle(graph, k, budget)


def cross_check(graph: MultiGraph, k: int, budget: int | None = None) -> dict[Method, SolveResult]:
    """
    Runs every method applicable to `graph` (all three on bipartite
    graphs, the oracle only otherwise) and compares their ν_k.

    Returns
    -------
    dict[Method, SolveResult]
        Result per method

    Raises
    ------
    MethodDisagreement
        Two methods returned different values, or a certificate failed
    BudgetExhausted
        The oracle could not finish within `budget`
    """
    methods = list(Method) if is_bipartite(graph) else [Method.ORACLE]
    results = {method: solve(graph, k, method, budget) for method in methods}
    oracle = results[Method.ORACLE]
    if not oracle.verified:
        message = messages.BUDGET.format(budget=budget or NuOracle.DEFAULT_BUDGET, best=oracle.nu)
        raise BudgetExhausted(message)
    values = {method.value: result.nu for method, result in results.items()}
    broken = [method.value for method, result in results.items() if not result.check()]
    if len(set(values.values())) > 1 or broken:
        message = messages.DISAGREEMENT.format(k=k, values=values)
        raise MethodDisagreement(message)
    log.debug("All methods agree on ν_%d = %d for %r", k, oracle.nu, graph)
    return results
