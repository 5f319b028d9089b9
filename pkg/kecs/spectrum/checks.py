"""
Inequalities between the values of a ν-spectrum, each evaluated in exact
integer arithmetic and turned into a :class:`CheckReport`.

Rules that compare many pairs (all k, all (k, i), all vertices, ...)
report the first violated comparison, or, when everything holds, the
tightest one. The verdict is ``equality`` iff that comparison has no
slack.
"""
from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from kecs.exceptions import (
    BudgetExhausted,
    CheckError,
    NotCubicError,
    PreconditionError,
    SpectrumRangeError,
    TransversalCapExceeded,
)
from kecs.graph import MultiGraph, is_bipartite, odd_cycle_transversal_number
from kecs.graph.multigraph import Fingerprint
from kecs.solver import Method, NuOracle, SolveResult, solve
from kecs.solver import messages as solver_messages
from kecs.spectrum import messages
from kecs.spectrum.spectrum import NuSpectrum

log = logging.getLogger(__name__)

#: ν_k of a graph; must be exact.
Solver = Callable[[MultiGraph, int], int]


class Verdict(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    EQUALITY = "equality"


class RuleKind(str, Enum):
    #: Proved statement; a violation means a bug.
    THEOREM = "theorem"
    #: Open statement; a violation is a counterexample.
    CONJECTURE = "conjecture"
    #: Proved bound cited from the literature.
    BOUND = "bound"


class Relation(str, Enum):
    GE = ">="
    LE = "<="
    EQ = "=="

    def slack(self, lhs: int, rhs: int) -> int:
        if self is Relation.GE:
            return lhs - rhs
        if self is Relation.LE:
            return rhs - lhs
        return -abs(lhs - rhs)


@dataclass
class CheckReport:
    """
    Outcome of one rule on one graph: the deciding comparison
    ``lhs <relation> rhs`` with its parameters.
    """

    rule: str
    kind: RuleKind
    fingerprint: Fingerprint
    lhs: int
    rhs: int
    relation: Relation
    verdict: Verdict
    k: int | None = None
    i: int | None = None
    #: Set when the statement is only claimed for bipartite graphs and the
    #: input is not bipartite; such violations never fail a run.
    informational: bool = False
    witness: dict[str, Any] | None = None
    graph: MultiGraph | None = field(default=None, compare=False, repr=False)
    seed: int | None = None
    detail: str = ""

    @property
    def slack(self) -> int:
        return self.relation.slack(self.lhs, self.rhs)

    @property
    def violated(self) -> bool:
        return self.verdict is Verdict.VIOLATED

    @property
    def failed(self) -> bool:
        return self.violated and not self.informational

    @property
    def counterexample(self) -> bool:
        return self.failed and self.kind is RuleKind.CONJECTURE

    def to_record(self) -> dict[str, Any]:
        """
        Returns a JSON-ready description that is complete enough to
        re-check the report from scratch.
        """
        n, m, degrees = self.fingerprint
        return {
            "rule": self.rule,
            "kind": self.kind.value,
            "graph": self.graph.to_record() if self.graph is not None else None,
            "fingerprint": [n, m, list(degrees)],
            "k": self.k,
            "i": self.i,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation.value,
            "verdict": self.verdict.value,
            "informational": self.informational,
            "witness": self.witness,
            "seed": self.seed,
            "detail": self.detail,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> CheckReport:
        """
        Inverse of :meth:`to_record`.

        Raises
        ------
        CheckError
            A required field is missing
        """
        for name in ("rule", "kind", "fingerprint", "lhs", "rhs", "relation", "verdict"):
            if name not in record:
                message = messages.BAD_RECORD.format(field=name)
                raise CheckError(message)
        n, m, degrees = record["fingerprint"]
        graph = record.get("graph")
        return cls(
            rule=record["rule"],
            kind=RuleKind(record["kind"]),
            fingerprint=(n, m, tuple(degrees)),
            lhs=record["lhs"],
            rhs=record["rhs"],
            relation=Relation(record["relation"]),
            verdict=Verdict(record["verdict"]),
            k=record.get("k"),
            i=record.get("i"),
            informational=record.get("informational", False),
            witness=record.get("witness"),
            graph=MultiGraph.from_record(graph) if graph is not None else None,
            seed=record.get("seed"),
            detail=record.get("detail", ""),
        )


def compare(
    rule: str,
    kind: RuleKind,
    s: NuSpectrum,
    lhs: int,
    rhs: int,
    relation: Relation,
    *,
    k: int | None = None,
    i: int | None = None,
    informational: bool = False,
    graph: MultiGraph | None = None,
    **extra: Any,
) -> CheckReport:
    """
    Evaluates one comparison. Violations carry the spectrum (and any
    `extra` data) as witness.
    """
    slack = relation.slack(lhs, rhs)
    verdict = Verdict.VIOLATED if slack < 0 else Verdict.EQUALITY if slack == 0 else Verdict.HOLDS
    witness = {"spectrum": list(s.values), **extra} if slack < 0 else None
    return CheckReport(rule, kind, s.fingerprint, lhs, rhs, relation, verdict, k, i, informational, witness, graph)


def summarize(rule: str, kind: RuleKind, s: NuSpectrum, reports: Iterable[CheckReport], **options: Any) -> CheckReport:
    """
    Picks the first violated report, or the one with the least slack.
    Without any comparison the rule holds vacuously.
    """
    reports = list(reports)
    for report in reports:
        if report.violated:
            return report
    if not reports:
        report = CheckReport(rule, kind, s.fingerprint, 0, 0, Relation.GE, Verdict.HOLDS, detail="vacuous")
        report.informational = options.get("informational", False)
        report.graph = options.get("graph")
        return report
    return min(reports, key=lambda report: report.slack)


def exact_nu(graph: MultiGraph, k: int, budget: int | None = None) -> int:
    """
    ν_k by the flow solver on bipartite graphs and the oracle otherwise.

    Raises
    ------
    BudgetExhausted
        The oracle could not finish
    """
    method = Method.FLOW if is_bipartite(graph) else Method.ORACLE
    result = solve(graph, k, method, budget)
    if not result.verified:
        message = solver_messages.BUDGET.format(budget=budget or NuOracle.DEFAULT_BUDGET, best=result.nu)
        raise BudgetExhausted(message)
    return result.nu


def check_concavity(s: NuSpectrum, graph: MultiGraph | None = None) -> CheckReport:
    """
    ν_1 − ν_0 ≥ ν_2 − ν_1 ≥ ... (proved for bipartite graphs). The
    comparison between the k-th and (k+1)-th difference is reported
    with index k.

    Examples
    --------
    >>> check_concavity(NuSpectrum.from_values([0, 1, 3])).k
    1
    """
    d, informational = s.differences, not s.bipartite
    reports = [
        compare(
            "concavity", RuleKind.THEOREM, s, d[j - 1], d[j], Relation.GE, k=j, informational=informational, graph=graph
        )
        for j in range(1, len(d))
    ]
    return summarize("concavity", RuleKind.THEOREM, s, reports, informational=informational, graph=graph)


def check_midpoint(s: NuSpectrum, k: int, i: int, graph: MultiGraph | None = None) -> CheckReport:
    """
    2·ν_k ≥ ν_{k−i} + ν_{k+i}, the midpoint inequality of bipartite
    graphs.

    Raises
    ------
    SpectrumRangeError
        k − i is negative or ν_{k+i} is not available
    """
    if k < 0 or i < 0:
        message = messages.NEGATIVE_INDEX.format(k=k, i=i)
        raise SpectrumRangeError(message)
    lhs = 2 * s.at(k)
    rhs = s.at(k - i) + s.at(k + i)
    informational = not s.bipartite
    return compare(
        "midpoint", RuleKind.THEOREM, s, lhs, rhs, Relation.GE, k=k, i=i, informational=informational, graph=graph
    )


def check_theorem7(s: NuSpectrum, graph: MultiGraph | None = None) -> CheckReport:
    """
    The midpoint inequality with i = 1 at every inner k.
    """
    reports = [check_midpoint(s, k, 1, graph) for k in range(1, s.top)]
    for report in reports:
        report.rule = "theorem7"
    return summarize("theorem7", RuleKind.THEOREM, s, reports, informational=not s.bipartite, graph=graph)


def check_midpoint_all(s: NuSpectrum, graph: MultiGraph | None = None) -> CheckReport:
    """
    The midpoint inequality for every 1 ≤ i ≤ k with k + i ≤ K.
    """
    reports = [check_midpoint(s, k, i, graph) for k in range(1, s.top) for i in range(1, min(k, s.top - k) + 1)]
    return summarize("midpoint", RuleKind.THEOREM, s, reports, informational=not s.bipartite, graph=graph)


def _transversal_number(graph: MultiGraph, cap: int | None = None) -> int | None:
    try:
        return odd_cycle_transversal_number(graph, cap)
    except TransversalCapExceeded:
        return None


def check_nearly_bipartite(graph: MultiGraph, s: NuSpectrum) -> CheckReport:
    """
    ν_k ≥ ⌊(ν_{k−1} + ν_{k+1}) / 2⌋ for a graph that turns bipartite after
    removing one vertex (conjectured).

    Raises
    ------
    PreconditionError
        `graph` is not nearly bipartite
    """
    b = _transversal_number(graph, cap=1)
    if b is None:
        message = messages.NOT_NEARLY_BIPARTITE.format(rule="conj1", b="≥ 2")
        raise PreconditionError(message)
    reports = [
        compare(
            "conj1",
            RuleKind.CONJECTURE,
            s,
            s.at(k),
            (s.at(k - 1) + s.at(k + 1)) // 2,
            Relation.GE,
            k=k,
            i=1,
            graph=graph,
            b=b,
        )
        for k in range(1, s.top)
    ]
    return summarize("conj1", RuleKind.CONJECTURE, s, reports, graph=graph)


def check_b_conjecture(graph: MultiGraph, s: NuSpectrum, b: int | None = None, floor: bool = False) -> CheckReport:
    """
    2·ν_k ≥ ν_{k−i} + ν_{k+i} − b(G) for every valid (k, i)
    (conjectured). With `floor` the weaker ν_k ≥ ⌊(ν_{k−i} + ν_{k+i} −
    b) / 2⌋ is checked instead and reported as ``conj2-floor``.
    """
    if b is None:
        b = odd_cycle_transversal_number(graph)
    rule = "conj2-floor" if floor else "conj2"
    reports = []
    for k in range(1, s.top):
        for i in range(1, min(k, s.top - k) + 1):
            total = s.at(k - i) + s.at(k + i) - b
            lhs, rhs = (s.at(k), total // 2) if floor else (2 * s.at(k), total)
            reports.append(compare(rule, RuleKind.CONJECTURE, s, lhs, rhs, Relation.GE, k=k, i=i, graph=graph, b=b))
    return summarize(rule, RuleKind.CONJECTURE, s, reports, graph=graph)


def _require_cubic(graph: MultiGraph, rule: str):
    if not graph.is_cubic:
        message = messages.NOT_CUBIC.format(rule=rule, degrees=sorted(set(graph.degrees)))
        raise NotCubicError(message)


def check_cubic_bound(graph: MultiGraph, s: NuSpectrum) -> CheckReport:
    """
    4·ν_2 ≤ n + 2·ν_3 for cubic graphs.

    Raises
    ------
    NotCubicError
        `graph` is not 3-regular
    """
    _require_cubic(graph, "cubic")
    lhs = 4 * s.at(2)
    rhs = graph.n + 2 * s.at(3)
    return compare("cubic", RuleKind.BOUND, s, lhs, rhs, Relation.LE, k=2, i=1, graph=graph)


def check_cubic_lower(graph: MultiGraph, s: NuSpectrum) -> CheckReport:
    """
    The lower bounds 5·ν_2 ≥ 4n, 6·ν_3 ≥ 7n and ν_2 + ν_3 ≥ 2n of cubic
    graphs.

    Raises
    ------
    NotCubicError
        `graph` is not 3-regular
    """
    _require_cubic(graph, "cubic-lower")
    n, nu2, nu3 = graph.n, s.at(2), s.at(3)
    bounds = [
        (5 * nu2, 4 * n, 2, "5ν2 ≥ 4n"),
        (6 * nu3, 7 * n, 3, "6ν3 ≥ 7n"),
        (nu2 + nu3, 2 * n, 2, "ν2+ν3 ≥ 2n"),
    ]
    reports = [
        compare("cubic-lower", RuleKind.BOUND, s, lhs, rhs, Relation.GE, k=k, graph=graph, bound=bound)
        for lhs, rhs, k, bound in bounds
    ]
    return summarize("cubic-lower", RuleKind.BOUND, s, reports, graph=graph)


def check_cubic_perfect_matching(graph: MultiGraph, s: NuSpectrum) -> CheckReport:
    """
    2·ν_2 ≤ ν_1 + ν_3 for cubic graphs with a perfect matching.

    Raises
    ------
    NotCubicError
        `graph` is not 3-regular
    PreconditionError
        `graph` has no perfect matching
    """
    _require_cubic(graph, "cubic-pm")
    if 2 * s.at(1) != graph.n:
        message = messages.NO_PERFECT_MATCHING.format(rule="cubic-pm", nu1=s.at(1), half=graph.n / 2)
        raise PreconditionError(message)
    return compare("cubic-pm", RuleKind.BOUND, s, 2 * s.at(2), s.at(1) + s.at(3), Relation.LE, k=2, i=1, graph=graph)


def check_additivity(
    graph: MultiGraph, k: int, solver: Solver | None = None, s: NuSpectrum | None = None
) -> CheckReport:
    """
    ν_k(G) equals the sum of ν_k over the connected components of G.
    """
    solver = solver or exact_nu
    s = s or NuSpectrum.from_values([], fingerprint=graph.fingerprint)
    whole = solver(graph, k)
    parts = [solver(graph.induced(component), k) for component in graph.components()]
    return compare("additivity", RuleKind.THEOREM, s, whole, sum(parts), Relation.EQ, k=k, graph=graph, parts=parts)


def check_lemma5(graph: MultiGraph, result: SolveResult, s: NuSpectrum | None = None) -> CheckReport:
    """
    For a maximum subgraph H_k of a bipartite graph, every edge uv outside
    H_k has an endpoint of degree exactly k in H_k. Each such edge is
    compared as max(d_H(u), d_H(v)) ≥ k.
    """
    s = s or NuSpectrum.from_values([], fingerprint=graph.fingerprint)
    k, subgraph = result.k, result.subgraph
    informational = not is_bipartite(graph)
    reports = [
        compare(
            "lemma5",
            RuleKind.THEOREM,
            s,
            max(subgraph.degree(u), subgraph.degree(v)),
            k,
            Relation.GE,
            k=k,
            informational=informational,
            graph=graph,
            edge=edge_id,
        )
        for edge_id, u, v in graph.edges
        if edge_id not in subgraph
    ]
    return summarize("lemma5", RuleKind.THEOREM, s, reports, informational=informational, graph=graph)


def check_deletions(
    graph: MultiGraph, k: int, solver: Solver | None = None, s: NuSpectrum | None = None
) -> CheckReport:
    """
    Deletion bounds: ν_k(G) ≤ ν_k(G − v) + k for every vertex v, and
    ν_k(G − e) ≤ ν_k(G) ≤ ν_k(G − e) + 1 for every edge e.
    """
    solver = solver or exact_nu
    s = s or NuSpectrum.from_values([], fingerprint=graph.fingerprint)
    nu = solver(graph, k)
    reports = []
    for vertex in range(graph.n):
        without = solver(graph.delete_vertex(vertex).graph, k)
        reports.append(_deletion(s, nu, without + k, k, graph, vertex=vertex))
    for edge_id in range(graph.m):
        without = solver(graph.delete_edge(edge_id).graph, k)
        reports.append(_deletion(s, without, nu, k, graph, edge=edge_id))
        reports.append(_deletion(s, nu, without + 1, k, graph, edge=edge_id))
    return summarize("props34", RuleKind.THEOREM, s, reports, graph=graph)


def _deletion(s: NuSpectrum, lhs: int, rhs: int, k: int, graph: MultiGraph, **extra: Any) -> CheckReport:
    return compare("props34", RuleKind.THEOREM, s, lhs, rhs, Relation.LE, k=k, graph=graph, **extra)
