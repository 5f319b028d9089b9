"""
Counterexample search: evaluates rules over every small graph of a class
(exhaustively) or over seeded random samples.

Exhaustive enumeration runs over edge bitmasks and does not remove
isomorphic copies. Graph evaluations are independent; with several jobs
they run in a process pool whose results are consumed in enumeration
order, so the output never depends on the number of jobs.
"""
from __future__ import annotations

import logging
import multiprocessing
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from tqdm import tqdm

from kecs.exceptions import BudgetExhausted, CheckError, PreconditionError
from kecs.genio.generators import gen_nearly_bipartite, gen_random_bipartite, gen_random_multigraph
from kecs.graph import MultiGraph
from kecs.spectrum import messages
from kecs.spectrum.checks import CheckReport
from kecs.spectrum.rules import RuleContext, evaluate_rules, resolve_rules
from kecs.spectrum.spectrum import spectrum

log = logging.getLogger(__name__)

#: A graph record, its sample seed, rule names and the oracle budget.
Task = tuple[dict[str, Any], "int | None", tuple[str, ...], "int | None"]


class GraphClass(str, Enum):
    BIPARTITE = "bipartite"
    NEARLY_BIPARTITE = "nearly-bipartite"
    ALL = "all"

    @classmethod
    def parse(cls, name: str | GraphClass) -> GraphClass:
        try:
            return cls(name)
        except ValueError:
            message = messages.UNKNOWN_CLASS.format(name=name, valid=[c.value for c in cls])
            raise CheckError(message) from None


def _subsets(cells: list[tuple[int, int]]) -> Iterator[list[tuple[int, int]]]:
    """
    Yields every subset of `cells`, in the order of the bitmasks 0, 1, ...
    """
    width = len(cells)
    masks = np.arange(1 << width, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(width, dtype=np.int64)) & 1
    for row in bits:
        yield [cells[index] for index in np.flatnonzero(row)]


def bipartite_graphs(n: int) -> Iterator[MultiGraph]:
    """
    Every simple bipartite graph on `n` vertices: for each split
    a ≤ n − a, every biadjacency matrix between ``0..a-1`` and
    ``a..n-1``. Isomorphic copies are not removed.
    """
    for a in range(n // 2 + 1):
        cells = [(u, w) for u in range(a) for w in range(a, n)]
        for pairs in _subsets(cells):
            yield MultiGraph(n, pairs)


def nearly_bipartite_graphs(n: int) -> Iterator[MultiGraph]:
    """
    Every bipartite graph on n − 1 vertices together with an apex vertex
    ``n - 1`` over every subset of neighbors.
    """
    if n < 1:
        return
    apex = n - 1
    for base in bipartite_graphs(n - 1):
        for neighbors in _subsets([(v, apex) for v in range(apex)]):
            yield MultiGraph(n, [*base.edge_pairs(), *neighbors])


def all_graphs(n: int) -> Iterator[MultiGraph]:
    """
    Every simple graph on ``0..n-1`` (every adjacency bitmask).
    """
    rows, cols = np.triu_indices(n, k=1)
    cells = [(int(u), int(v)) for u, v in zip(rows, cols)]
    for pairs in _subsets(cells):
        yield MultiGraph(n, pairs)


ENUMERATORS = {
    GraphClass.BIPARTITE: bipartite_graphs,
    GraphClass.NEARLY_BIPARTITE: nearly_bipartite_graphs,
    GraphClass.ALL: all_graphs,
}


def sample_graph(
    graph_class: GraphClass,
    sample_seed: int,
    min_n: int,
    max_n: int,
    max_multiplicity: int = 1,
) -> MultiGraph:
    """
    Draws one random graph of `graph_class`; `sample_seed` alone
    determines the result.
    """
    rng = np.random.default_rng(sample_seed)
    n = int(rng.integers(max(min_n, 2), max(max_n, 2) + 1))
    p = float(rng.random())
    if graph_class is GraphClass.BIPARTITE:
        nu = int(rng.integers(1, n))
        return gen_random_bipartite(nu, n - nu, p, max_multiplicity, seed=rng)
    if graph_class is GraphClass.NEARLY_BIPARTITE:
        nu = int(rng.integers(0, n))
        apex_degree = int(rng.integers(0, n))
        return gen_nearly_bipartite(nu, n - 1 - nu, p, apex_degree, max_multiplicity, seed=rng)
    return gen_random_multigraph(n, p, max_multiplicity, seed=rng)


def evaluate_graph(task: Task) -> tuple[list[CheckReport], bool]:
    """
    Computes the spectrum of one graph and runs the rules on it.

    Returns
    -------
    tuple[list[CheckReport], bool]
        The reports and whether the graph could be evaluated within the
        oracle budget
    """
    record, seed, names, budget = task
    graph = MultiGraph.from_record(record)
    try:
        s = spectrum(graph, budget=budget)
        if not s.verified:
            return [], False
        reports = evaluate_rules(RuleContext(graph, s, budget), resolve_rules(names))
    except BudgetExhausted:
        return [], False
    for report in reports:
        report.seed = seed
    return reports, True


@dataclass
class SearchSummary:
    graph_class: str
    min_n: int
    max_n: int
    rules: list[str]
    seed: int | None = None
    samples: int | None = None
    graphs: int = 0
    checks: int = 0
    violations: Counter = field(default_factory=Counter)
    #: Violated conjectures.
    counterexamples: int = 0
    #: Violated theorems or bounds, i.e. bugs.
    failures: int = 0
    #: Violations of bipartite-only statements on non-bipartite graphs.
    informational: int = 0
    #: Graphs skipped because the oracle ran out of budget.
    exhausted: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def add(self, report: CheckReport):
        self.checks += 1
        if not report.violated:
            return
        self.violations[report.rule] += 1
        if report.informational:
            self.informational += 1
        elif report.counterexample:
            self.counterexamples += 1
        else:
            self.failures += 1

    def to_record(self) -> dict[str, Any]:
        return {
            "summary": True,
            "class": self.graph_class,
            "min_n": self.min_n,
            "max_n": self.max_n,
            "rules": self.rules,
            "seed": self.seed,
            "samples": self.samples,
            "graphs": self.graphs,
            "checks": self.checks,
            "violations": dict(sorted(self.violations.items())),
            "counterexamples": self.counterexamples,
            "failures": self.failures,
            "informational": self.informational,
            "exhausted": self.exhausted,
        }


class CounterexampleSearch:
    """
    Searches a graph class for rule violations.

    Exhaustive mode (the default) covers every simple graph of the class
    on `min_n` to `max_n` vertices. With `samples`, that many random
    multigraphs (multiplicity up to `max_multiplicity`) are drawn instead,
    each from its own seed spawned from `seed`.
    """

    #: Largest number of vertices for exhaustive enumeration.
    EXHAUSTIVE_LIMIT: int = 8

    #: Graphs handed to a worker at a time.
    CHUNKSIZE: int = 16

    def __init__(
        self,
        graph_class: str | GraphClass,
        max_n: int,
        rules: Iterable[str],
        *,
        min_n: int = 1,
        samples: int | None = None,
        seed: int | None = None,
        max_multiplicity: int = 1,
        jobs: int = 1,
        budget: int | None = None,
        progress: bool = False,
    ):
        self.graph_class = GraphClass.parse(graph_class)
        self.rule_names = tuple(rule.name for rule in resolve_rules(rules))
        if samples is None and max_n > self.EXHAUSTIVE_LIMIT:
            message = messages.EXHAUSTIVE_LIMIT.format(limit=self.EXHAUSTIVE_LIMIT, max_n=max_n)
            raise PreconditionError(message)
        if samples is not None and seed is None:
            seed = int(np.random.SeedSequence().entropy)
            log.info("Sampling with fresh entropy %d", seed)
        self.min_n = min_n
        self.max_n = max_n
        self.samples = samples
        self.seed = seed
        self.max_multiplicity = max_multiplicity
        self.jobs = jobs
        self.budget = budget
        self.progress = progress
        self.summary = SearchSummary(self.graph_class.value, min_n, max_n, list(self.rule_names), seed, samples)

    def graphs(self) -> Iterator[tuple[MultiGraph, int | None]]:
        """
        Yields the graphs to evaluate with their sample seeds (``None`` in
        exhaustive mode).
        """
        if self.samples is None:
            enumerate_class = ENUMERATORS[self.graph_class]
            for n in range(self.min_n, self.max_n + 1):
                for graph in enumerate_class(n):
                    yield graph, None
            return
        for child in np.random.SeedSequence(self.seed).spawn(self.samples):
            sample_seed = int(child.generate_state(1)[0])
            graph = sample_graph(self.graph_class, sample_seed, self.min_n, self.max_n, self.max_multiplicity)
            yield graph, sample_seed

    def tasks(self) -> Iterator[Task]:
        for graph, seed in self.graphs():
            yield graph.to_record(), seed, self.rule_names, self.budget

    def _collect(self, outcomes: Iterable[tuple[list[CheckReport], bool]]) -> Iterator[CheckReport]:
        for reports, evaluated in tqdm(outcomes, total=self.samples, disable=not self.progress, unit="graph"):
            self.summary.graphs += 1
            if not evaluated:
                self.summary.exhausted += 1
                continue
            for report in reports:
                self.summary.add(report)
                if report.violated:
                    yield report

    def run(self) -> Iterator[CheckReport]:
        """
        Evaluates every graph and yields the violated reports in
        enumeration order; :attr:`summary` is complete once the iterator
        is exhausted.
        """
        log.info(
            "Searching %s graphs (n=%d..%d) for violations of %s",
            self.graph_class.value,
            self.min_n,
            self.max_n,
            ", ".join(self.rule_names),
        )
        if self.jobs > 1:
            with multiprocessing.Pool(self.jobs) as pool:
                yield from self._collect(pool.imap(evaluate_graph, self.tasks(), chunksize=self.CHUNKSIZE))
        else:
            yield from self._collect(map(evaluate_graph, self.tasks()))
        log.info(
            "Checked %d graphs: %d failures, %d counterexamples, %d informational, %d over budget",
            self.summary.graphs,
            self.summary.failures,
            self.summary.counterexamples,
            self.summary.informational,
            self.summary.exhausted,
        )


def search_counterexamples(
    graph_class: str | GraphClass,
    max_n: int,
    rules: Iterable[str],
    **options: Any,
) -> tuple[list[CheckReport], SearchSummary]:
    """
    Runs a :class:`CounterexampleSearch` to completion.
    """
    search = CounterexampleSearch(graph_class, max_n, rules, **options)
    reports = list(search.run())
    return reports, search.summary
