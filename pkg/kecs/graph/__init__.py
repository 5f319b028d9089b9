"""
Loopless multigraphs with stable edge identities, bipartition detection
and the odd cycle transversal number.
"""
from kecs.graph.bipartition import (
    Bipartition,
    Side,
    bipartition,
    is_bipartite,
    is_nearly_bipartite,
    odd_cycle_transversal,
    odd_cycle_transversal_number,
    require_bipartition,
)
from kecs.graph.multigraph import Deletion, Edge, EdgeSubgraph, MultiGraph

__all__ = [
    "Bipartition",
    "Deletion",
    "Edge",
    "EdgeSubgraph",
    "MultiGraph",
    "Side",
    "bipartition",
    "is_bipartite",
    "is_nearly_bipartite",
    "odd_cycle_transversal",
    "odd_cycle_transversal_number",
    "require_bipartition",
]
