"""
Messages shared across the :mod:`kecs` library.
"""
NOT_BIPARTITE: str = (
    "{operation} requires a bipartite graph, but an odd closed walk was found: {witness}!\n"
    "Use the 'oracle' method for general graphs."
)
NEGATIVE_K: str = "The number of colors must be non-negative, got k={k}."
