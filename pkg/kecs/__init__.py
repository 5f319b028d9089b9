"""
Exact maximum k-edge-colorable subgraphs of loopless multigraphs.

ν_k(G) is the largest number of edges of G that can be properly colored
with k colors. On bipartite multigraphs it is computed by augmenting
paths or by a maximum flow, on any multigraph by an exhaustive branch
and bound. Every result comes with an explicit coloring that can be
re-checked without the solver. On top of the solvers, the package
checks inequalities between ν_0, ν_1, ... of a graph and searches small
graphs for counterexamples to conjectured ones.
"""
from kecs.__about__ import __version__
from kecs.coloring import EdgeColoring, konig_color, verify_coloring
from kecs.genio import emit_certificate, gen_named, read_graph, verify_certificate
from kecs.graph import EdgeSubgraph, MultiGraph, is_bipartite, odd_cycle_transversal_number
from kecs.solver import Method, SolveResult, cross_check, find_augmenting_path, nu_oracle, solve
from kecs.spectrum import CounterexampleSearch, NuSpectrum, spectrum

__all__ = [
    "CounterexampleSearch",
    "EdgeColoring",
    "EdgeSubgraph",
    "Method",
    "MultiGraph",
    "NuSpectrum",
    "SolveResult",
    "__version__",
    "cross_check",
    "emit_certificate",
    "find_augmenting_path",
    "gen_named",
    "is_bipartite",
    "konig_color",
    "nu_oracle",
    "odd_cycle_transversal_number",
    "read_graph",
    "solve",
    "spectrum",
    "verify_certificate",
]
