"""
Messages for the :mod:`~kecs.solver` module.
"""
UNKNOWN_METHOD: str = "Unknown method {method!r}! Valid methods are {valid}."
DEGREE_ABOVE_K: str = "Subgraph has maximum degree {degree}, which exceeds k={k}."
PATH_EVEN: str = "Augmenting path must have odd length, got {length} edges."
PATH_NOT_SIMPLE: str = "Augmenting path visits vertex {vertex} twice."
PATH_BROKEN: str = "Edge #{edge_id} at position {position} does not continue the path at vertex {vertex}."
PATH_PARITY: str = "Edge #{edge_id} at position {position} should {expected} the subgraph."
PATH_ENDPOINT: str = "Endpoint {vertex} has degree {degree} in the subgraph; at most {limit} is allowed."
PATH_LENGTHS: str = "Augmenting path has {edges} edges but {vertices} vertices."
DISAGREEMENT: str = "Methods disagree on ν_{k}: {values}."
BUDGET: str = "Oracle budget of {budget} nodes exhausted (best so far: {best})."
