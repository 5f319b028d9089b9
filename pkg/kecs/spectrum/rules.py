"""
Registry of named rules, as used by ``kecs verify --rules`` and by the
counterexample search.
"""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from kecs.exceptions import BudgetExhausted, CheckError, UnknownRule
from kecs.graph import MultiGraph, odd_cycle_transversal_number
from kecs.solver import solve
from kecs.spectrum import checks, messages
from kecs.spectrum.checks import CheckReport, RuleKind
from kecs.spectrum.spectrum import NuSpectrum, spectrum

log = logging.getLogger(__name__)


class RuleContext:
    """
    A graph with its spectrum, computing b(G) and exact ν values lazily
    so that rules can share them.
    """

    def __init__(self, graph: MultiGraph, s: NuSpectrum | None = None, budget: int | None = None):
        self.graph = graph
        self.budget = budget
        self.spectrum = s if s is not None else spectrum(graph, budget=budget)

    @cached_property
    def b(self) -> int:
        return odd_cycle_transversal_number(self.graph)

    @property
    def ks(self) -> range:
        return range(self.spectrum.top + 1)

    def nu(self, graph: MultiGraph, k: int) -> int:
        return checks.exact_nu(graph, k, self.budget)


@dataclass(frozen=True)
class Rule:
    name: str
    kind: RuleKind
    summary: str
    evaluate: Callable[[RuleContext], CheckReport]
    applies: Callable[[RuleContext], bool] = lambda context: True

    def __call__(self, context: RuleContext) -> CheckReport:
        return self.evaluate(context)


def _over_k(name: str, kind: RuleKind, context: RuleContext, reports: Iterable[CheckReport]) -> CheckReport:
    return checks.summarize(name, kind, context.spectrum, reports, graph=context.graph)


def _lemma5(context: RuleContext) -> CheckReport:
    s, graph = context.spectrum, context.graph
    results = s.results or tuple(solve(graph, k, "oracle", context.budget) for k in context.ks)
    reports = [checks.check_lemma5(graph, result, s) for result in results]
    informational = not s.bipartite
    return checks.summarize("lemma5", RuleKind.THEOREM, s, reports, informational=informational, graph=graph)


def _props34(context: RuleContext) -> CheckReport:
    reports = [checks.check_deletions(context.graph, k, context.nu, context.spectrum) for k in context.ks]
    return _over_k("props34", RuleKind.THEOREM, context, reports)


def _additivity(context: RuleContext) -> CheckReport:
    reports = [checks.check_additivity(context.graph, k, context.nu, context.spectrum) for k in context.ks]
    return _over_k("additivity", RuleKind.THEOREM, context, reports)


def _is_cubic(context: RuleContext) -> bool:
    return context.graph.is_cubic


def _has_perfect_matching(context: RuleContext) -> bool:
    return context.graph.is_cubic and 2 * context.spectrum.at(1) == context.graph.n


_RULES = [
    Rule(
        "concavity",
        RuleKind.THEOREM,
        "ν_k − ν_{k−1} ≥ ν_{k+1} − ν_k",
        lambda c: checks.check_concavity(c.spectrum, c.graph),
    ),
    Rule(
        "midpoint",
        RuleKind.THEOREM,
        "2ν_k ≥ ν_{k−i} + ν_{k+i}",
        lambda c: checks.check_midpoint_all(c.spectrum, c.graph),
    ),
    Rule(
        "theorem7",
        RuleKind.THEOREM,
        "2ν_k ≥ ν_{k−1} + ν_{k+1}",
        lambda c: checks.check_theorem7(c.spectrum, c.graph),
    ),
    Rule(
        "conj1",
        RuleKind.CONJECTURE,
        "ν_k ≥ ⌊(ν_{k−1} + ν_{k+1})/2⌋ if b ≤ 1",
        lambda c: checks.check_nearly_bipartite(c.graph, c.spectrum),
        lambda c: c.b <= 1,
    ),
    Rule(
        "conj2",
        RuleKind.CONJECTURE,
        "2ν_k ≥ ν_{k−i} + ν_{k+i} − b",
        lambda c: checks.check_b_conjecture(c.graph, c.spectrum, c.b),
    ),
    Rule(
        "conj2-floor",
        RuleKind.CONJECTURE,
        "ν_k ≥ ⌊(ν_{k−i} + ν_{k+i} − b)/2⌋",
        lambda c: checks.check_b_conjecture(c.graph, c.spectrum, c.b, floor=True),
    ),
    Rule(
        "cubic",
        RuleKind.BOUND,
        "4ν_2 ≤ n + 2ν_3 (cubic)",
        lambda c: checks.check_cubic_bound(c.graph, c.spectrum),
        _is_cubic,
    ),
    Rule(
        "cubic-lower",
        RuleKind.BOUND,
        "5ν_2 ≥ 4n, 6ν_3 ≥ 7n, ν_2 + ν_3 ≥ 2n (cubic)",
        lambda c: checks.check_cubic_lower(c.graph, c.spectrum),
        _is_cubic,
    ),
    Rule(
        "cubic-pm",
        RuleKind.BOUND,
        "2ν_2 ≤ ν_1 + ν_3 (cubic with a perfect matching)",
        lambda c: checks.check_cubic_perfect_matching(c.graph, c.spectrum),
        _has_perfect_matching,
    ),
    Rule("lemma5", RuleKind.THEOREM, "edges outside H_k touch a vertex of H_k-degree k", _lemma5),
    Rule(
        "props34",
        RuleKind.THEOREM,
        "ν_k(G) ≤ ν_k(G−v) + k, ν_k(G−e) ≤ ν_k(G) ≤ ν_k(G−e) + 1",
        _props34,
    ),
    Rule("additivity", RuleKind.THEOREM, "ν_k(G) = Σ ν_k(component)", _additivity),
]

#: Every rule by name.
RULES: dict[str, Rule] = {rule.name: rule for rule in _RULES}

#: Names accepted on the command line that expand to several rules.
ALIASES: dict[str, tuple[str, ...]] = {
    "conjecture1": ("conj1",),
    "conjecture2": ("conj2", "conj2-floor"),
    "conj2": ("conj2", "conj2-floor"),
    "cubic": ("cubic", "cubic-lower", "cubic-pm"),
    "all": tuple(RULES),
}


def resolve_rules(names: Iterable[str]) -> list[Rule]:
    """
    Expands rule names and aliases, keeping the first occurrence of each
    rule.

    Raises
    ------
    UnknownRule
        Some name is neither a rule nor an alias
    """
    resolved: dict[str, Rule] = {}
    for name in names:
        name = name.strip()
        if not name:
            continue
        expanded = ALIASES.get(name, (name,))
        for member in expanded:
            if member not in RULES:
                valid = sorted({*RULES, *ALIASES})
                message = messages.UNKNOWN_RULE.format(rule=name, valid=valid)
                raise UnknownRule(message)
            resolved.setdefault(member, RULES[member])
    return list(resolved.values())


def evaluate_rules(
    context: RuleContext,
    rules: Iterable[Rule],
    skipped: list[Rule] | None = None,
) -> list[CheckReport]:
    """
    Runs every applicable rule. Rules whose precondition fails are not
    run; they are appended to `skipped` when it is given.
    """
    reports = []
    for rule in rules:
        if not rule.applies(context):
            log.debug("Rule %s does not apply to %r", rule.name, context.graph)
            if skipped is not None:
                skipped.append(rule)
            continue
        reports.append(rule(context))
    return reports


def replay(record: dict[str, Any], budget: int | None = None) -> CheckReport:
    """
    Re-derives a report from the graph serialized in `record`, without
    trusting any of its values.

    Raises
    ------
    CheckError
        `record` lacks a rule or graph
    UnknownRule
        The rule is not known
    BudgetExhausted
        The spectrum could not be computed within `budget`
    """
    for name in ("rule", "graph"):
        if record.get(name) is None:
            message = messages.BAD_RECORD.format(field=name)
            raise CheckError(message)
    rule = RULES.get(record["rule"])
    if rule is None:
        message = messages.UNKNOWN_RULE.format(rule=record["rule"], valid=sorted(RULES))
        raise UnknownRule(message)
    graph = MultiGraph.from_record(record["graph"])
    context = RuleContext(graph, budget=budget)
    if not context.spectrum.verified:
        message = messages.SPECTRUM_BUDGET.format(graph=graph)
        raise BudgetExhausted(message)
    report = rule(context)
    report.seed = record.get("seed")
    return report
