"""
Messages for the :mod:`~kecs.coloring` module.
"""
COLOR_RANGE: str = "Color {color} of edge #{edge_id} is outside 1..{k}."
CONFLICT: str = "Cannot color edge #{edge_id} with {color}: vertex {vertex} already has edge #{other} of that color."
DEGREE_EXCEEDS_K: str = "Subgraph has maximum degree {degree} (vertex {vertex}), which exceeds k={k}."
SAME_COLORS: str = "Kempe chains need two different colors, got {alpha} twice."
STALE_PATH: str = "Kempe path {walk} for colors ({alpha}, {beta}) does not match the coloring any more."
CHAIN_CLOSED: str = (
    "The {alpha}/{beta} chain from vertex {start} reached vertex {end}; the graph is not bipartite."
)
