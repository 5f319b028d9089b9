"""
Messages for the :mod:`~kecs.cli` module.
"""
NOT_BIPARTITE_HINT: str = "Hint: rerun with '--method oracle' for graphs with odd cycles."
INTERNAL_ERROR: str = "Internal error: {error}"
BUDGET: str = "Oracle budget exhausted; the results above are lower bounds. Raise '--budget' to finish."
BAD_SEED: str = "KECS_SEED must be an integer, got {value!r}."
MISSING_PARAMETER: str = "Model {model!r} needs --{name}."
REPLAY_MISMATCH: str = "Replayed verdict {replayed!r} differs from the stored verdict {stored!r}."
UNKNOWN_CLAIM: str = "Unknown claim {claim!r}! Valid claims are {valid}."
PRECONDITION: str = "Rule {rule!r} was not run: its precondition fails on this graph ({summary})."
