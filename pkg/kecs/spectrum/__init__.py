"""
The ν spectrum of a graph, the inequalities checked over it and the
counterexample search.
"""
from kecs.spectrum.checks import (
    CheckReport,
    Relation,
    RuleKind,
    Verdict,
    check_additivity,
    check_b_conjecture,
    check_concavity,
    check_cubic_bound,
    check_cubic_lower,
    check_cubic_perfect_matching,
    check_deletions,
    check_lemma5,
    check_midpoint,
    check_midpoint_all,
    check_nearly_bipartite,
    check_theorem7,
)
from kecs.spectrum.rules import ALIASES, RULES, Rule, RuleContext, evaluate_rules, replay, resolve_rules
from kecs.spectrum.search import CounterexampleSearch, GraphClass, SearchSummary, search_counterexamples
from kecs.spectrum.spectrum import NuSpectrum, spectrum

__all__ = [
    "ALIASES",
    "RULES",
    "CheckReport",
    "CounterexampleSearch",
    "GraphClass",
    "NuSpectrum",
    "Relation",
    "Rule",
    "RuleContext",
    "RuleKind",
    "SearchSummary",
    "Verdict",
    "check_additivity",
    "check_b_conjecture",
    "check_concavity",
    "check_cubic_bound",
    "check_cubic_lower",
    "check_cubic_perfect_matching",
    "check_deletions",
    "check_lemma5",
    "check_midpoint",
    "check_midpoint_all",
    "check_nearly_bipartite",
    "check_theorem7",
    "evaluate_rules",
    "replay",
    "resolve_rules",
    "search_counterexamples",
    "spectrum",
]
