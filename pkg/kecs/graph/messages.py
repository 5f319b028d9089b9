"""
Messages for the :mod:`~kecs.graph` module.
"""
LOOP: str = "Edge #{edge_id} is a loop at vertex {vertex}! Graphs are loopless (parallel edges are allowed)."
VERTEX_RANGE: str = "Vertex {vertex} is out of range for a graph with {n} vertices."
EDGE_RANGE: str = "Edge #{edge_id} is out of range for a graph with {m} edges."
NEGATIVE_ORDER: str = "Vertex count must be non-negative, got {n}."
CAP_EXCEEDED: str = "No odd cycle transversal of size at most {cap} exists."
BAD_RECORD: str = "Malformed graph record {record!r}; expected {{'n': int, 'edges': [[u, v], ...]}}."
