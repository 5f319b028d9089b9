"""
Messages for the :mod:`~kecs.spectrum` module.
"""
SPECTRUM_RANGE: str = "ν_{index} is not available: the spectrum covers k=0..{top} and does not reach m yet."
NEGATIVE_INDEX: str = "Spectrum indices must be non-negative, got k={k} and i={i}."
NOT_NEARLY_BIPARTITE: str = "Rule {rule!r} needs a nearly bipartite graph (b ≤ 1), but b = {b}."
NOT_CUBIC: str = "Rule {rule!r} needs a cubic graph, got degrees {degrees}."
NO_PERFECT_MATCHING: str = "Rule {rule!r} needs a perfect matching, but ν_1 = {nu1} < n/2 = {half}."
UNKNOWN_RULE: str = "Unknown rule {rule!r}! Valid rules are {valid}."
UNKNOWN_CLASS: str = "Unknown graph class {name!r}! Valid classes are {valid}."
BAD_RECORD: str = "Report record is missing the {field!r} field."
SPECTRUM_METHOD: str = "Spectrum method must be 'auto' or one of {valid}, got {method!r}."
EXHAUSTIVE_LIMIT: str = "Exhaustive enumeration is limited to n ≤ {limit}, got max_n={max_n}; use sampling instead."
SPECTRUM_BUDGET: str = "The spectrum of {graph!r} is incomplete: the oracle ran out of budget."
