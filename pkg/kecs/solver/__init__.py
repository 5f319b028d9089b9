"""
Exact solvers for ν_k: augmenting paths and maximum flow on bipartite
multigraphs, branch and bound on general ones.
"""
from kecs.solver.augmenting import (
    AugmentingPath,
    augment,
    find_augmenting_path,
    greedy_initial,
    solve_augmenting,
    validate_augmenting_path,
)
from kecs.solver.flow import FlowNetwork
from kecs.solver.network import DegreeNetwork, solve_flow
from kecs.solver.oracle import NuOracle, nu_oracle
from kecs.solver.result import Method, SolveResult
from kecs.solver.solve import cross_check, solve

__all__ = [
    "AugmentingPath",
    "DegreeNetwork",
    "FlowNetwork",
    "Method",
    "NuOracle",
    "SolveResult",
    "augment",
    "cross_check",
    "find_augmenting_path",
    "greedy_initial",
    "nu_oracle",
    "solve",
    "solve_augmenting",
    "solve_flow",
    "validate_augmenting_path",
]
