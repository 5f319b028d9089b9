"""
Implementations of the ``kecs`` subcommands. Each takes the parsed
arguments and an :class:`~kecs.cli.output.Output` and returns an
:class:`~kecs.cli.output.ExitStatus`; errors propagate as
:class:`~kecs.exceptions.KecsError` and are mapped by :func:`kecs.cli.main.run`.
"""
from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any

import numpy as np

from kecs.__about__ import __version__
from kecs.cli import messages
from kecs.cli.output import (
    ExitStatus,
    Output,
    report_line,
    report_record,
    report_status,
    summary_text,
    verdict_status,
)
from kecs.exceptions import ConfigurationError
from kecs.genio import (
    Certificate,
    format_edge_list,
    gen_named,
    gen_nearly_bipartite,
    gen_random_bipartite,
    gen_random_multigraph,
    gen_regular_bipartite,
    read_graph,
    read_reports,
    verify_certificate,
    write_graph,
    write_reports,
)
from kecs.graph import MultiGraph
from kecs.solver import Method, SolveResult, cross_check, solve
from kecs.spectrum import (
    CounterexampleSearch,
    Rule,
    RuleContext,
    evaluate_rules,
    replay,
    resolve_rules,
    spectrum,
)

log = logging.getLogger(__name__)

#: Generator models accepted by ``kecs gen --model`` with their parameters.
MODELS: dict[str, tuple[str, ...]] = {
    "regular-bipartite": ("half_n", "k"),
    "random-bipartite": ("nu", "nw", "p"),
    "nearly-bipartite": ("nu", "nw", "p", "apex_degree"),
    "random-multigraph": ("n", "p"),
    "named": ("name",),
}


def split_names(text: str) -> list[str]:
    return [name.strip() for name in text.split(",") if name.strip()]


def load_graph(args: argparse.Namespace) -> MultiGraph:
    if getattr(args, "graph", None):
        return gen_named(args.graph)
    return read_graph(args.input)


def _result_record(result: SolveResult) -> dict[str, Any]:
    return {
        "command": "solve",
        "n": result.graph.n,
        "m": result.graph.m,
        "k": result.k,
        "nu": result.nu,
        "method": result.method.value,
        "verified": result.verified,
        "subgraph": result.subgraph.sorted(),
        "coloring": {str(edge_id): color for edge_id, color in sorted(result.coloring.items())},
        "stats": dict(sorted(result.stats.items())),
    }


def _result_text(result: SolveResult) -> str:
    graph = result.graph
    lines = [
        f"nu={result.nu}",
        f"k={result.k} method={result.method.value} n={graph.n} m={graph.m}",
    ]
    for color, edge_ids in sorted(result.coloring.classes.items()):
        pairs = " ".join(f"{u + 1}-{v + 1}" for u, v in (graph.pair(edge_id) for edge_id in sorted(edge_ids)))
        lines.append(f"color {color}: {pairs}")
    if not result.verified:
        lines.append("(lower bound only: oracle budget exhausted)")
    return "\n".join(lines)


def solve_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    graph = load_graph(args)
    method = Method.parse(args.method)
    if args.cross_check:
        results = cross_check(graph, args.k, args.budget)
        result = results.get(method, results[Method.ORACLE])
    else:
        result = solve(graph, args.k, method, args.budget)
    if args.output:
        Path(args.output).write_text(Certificate.from_result(result, args.seed).to_json(), encoding="utf-8")
        log.info("Certificate written to %s", args.output)
    out.emit(_result_record(result), _result_text(result))
    if not result.verified:
        log.warning(messages.BUDGET)
        return ExitStatus.BUDGET_EXHAUSTED
    return ExitStatus.OK


def spectrum_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    graph = load_graph(args)
    s = spectrum(graph, args.method, args.cap, args.budget)
    record = {
        "command": "spectrum",
        "n": graph.n,
        "m": graph.m,
        "max_degree": graph.max_degree,
        "bipartite": s.bipartite,
        "spectrum": list(s.values),
        "differences": list(s.differences),
        "methods": [method.value for method in s.methods],
        "verified": s.verified,
    }
    bipartite = "yes" if s.bipartite else "no"
    lines = [f"n={graph.n} m={graph.m} Δ={graph.max_degree} bipartite={bipartite}", "k  nu_k  diff"]
    for k, value in enumerate(s.values):
        difference = "" if k == 0 else str(value - s.values[k - 1])
        lines.append(f"{k:<2} {value:<5} {difference}")
    out.emit(record, "\n".join(lines))
    if not s.verified:
        log.warning(messages.BUDGET)
        return ExitStatus.BUDGET_EXHAUSTED
    return ExitStatus.OK


def _certificate_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    report = verify_certificate(Path(args.certificate).read_text(encoding="utf-8"))
    violations = [{"kind": kind.value, "detail": detail} for kind, detail in report.violations]
    record = {
        "command": "verify",
        "certificate": str(args.certificate),
        "valid": report.valid,
        "violations": violations,
    }
    if report.valid:
        certificate = report.certificate
        text = f"certificate valid: nu_{certificate.k}={certificate.nu} ({certificate.method})"
    else:
        text = "\n".join(["certificate INVALID", *(f"  {v['kind']}: {v['detail']}" for v in violations)])
    out.emit(record, text)
    return ExitStatus.OK if report.valid else ExitStatus.VIOLATION


def _replay_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    reports, records, mismatched = [], [], False
    for stored in read_reports(args.replay):
        if stored.get("summary"):
            continue
        report = replay(stored, args.budget)
        reports.append(report)
        record = report_record(report)
        record["stored_verdict"] = stored.get("verdict")
        records.append(record)
        text = report_line(report)
        if stored.get("verdict") not in (None, report.verdict.value):
            mismatched = True
            message = messages.REPLAY_MISMATCH.format(replayed=report.verdict.value, stored=stored.get("verdict"))
            log.error(message)
            text += f"\n    {message}"
        out.emit(record, text)
    if args.output:
        write_reports(args.output, records)
    if mismatched:
        return ExitStatus.VIOLATION
    return verdict_status(reports, args.strict)


def _precondition_record(rule: Rule) -> tuple[dict[str, Any], str]:
    message = messages.PRECONDITION.format(rule=rule.name, summary=rule.summary)
    log.warning(message)
    record = {
        "command": "verify",
        "rule": rule.name,
        "kind": rule.kind.value,
        "status": "precondition",
        "detail": message,
    }
    return record, f"{rule.name:<12} {rule.kind.value:<10} precondition not met ({rule.summary})"


def verify_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    if args.certificate:
        return _certificate_command(args, out)
    if args.replay:
        return _replay_command(args, out)
    graph = load_graph(args)
    s = spectrum(graph, args.method, budget=args.budget)
    if not s.verified:
        log.warning(messages.BUDGET)
        return ExitStatus.BUDGET_EXHAUSTED
    names = split_names(args.rules)
    skipped: list[Rule] = []
    reports = evaluate_rules(RuleContext(graph, s, args.budget), resolve_rules(names), skipped)
    # Rules reached only through "all" are skipped quietly.
    named = {rule.name for rule in resolve_rules(name for name in names if name != "all")}
    unmet = [rule for rule in skipped if rule.name in named]
    for rule in unmet:
        out.emit(*_precondition_record(rule))
    records = []
    for report in reports:
        record = report_record(report)
        records.append(record)
        if report.counterexample:
            log.warning("COUNTEREXAMPLE to %s: %s", report.rule, record["witness"])
        out.emit(record, report_line(report))
    if args.output:
        write_reports(args.output, records)
    if unmet and not reports:
        return ExitStatus.INPUT_ERROR
    return verdict_status(reports, args.strict)


def search_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    seed = args.seed
    if args.samples is not None and seed is None:
        seed = int(np.random.SeedSequence().entropy)
        log.info("No seed given; drawing samples from seed %d", seed)
    search = CounterexampleSearch(
        args.graph_class,
        args.max_n,
        split_names(args.rules),
        min_n=args.min_n,
        samples=args.samples,
        seed=seed,
        max_multiplicity=args.max_multiplicity,
        jobs=args.jobs,
        budget=args.budget,
        progress=args.progress,
    )
    records = []
    for report in search.run():
        record = report_record(report)
        records.append(record)
        if report_status(report) == "COUNTEREXAMPLE":
            log.warning("COUNTEREXAMPLE to %s on %r", report.rule, report.graph)
        out.emit(record, report_line(report))
    summary = search.summary
    records.append(summary.to_record())
    out.emit(summary.to_record(), summary_text(summary))
    if args.output:
        write_reports(args.output, records)
        log.info("Report written to %s", args.output)
    if summary.failures or (args.strict and summary.counterexamples):
        return ExitStatus.VIOLATION
    if summary.exhausted:
        log.warning(messages.BUDGET)
        return ExitStatus.BUDGET_EXHAUSTED
    return ExitStatus.OK


def _require(args: argparse.Namespace, model: str) -> dict[str, Any]:
    values = {}
    for name in MODELS[model]:
        value = getattr(args, name)
        if value is None:
            message = messages.MISSING_PARAMETER.format(model=model, name=name.replace("_", "-"))
            raise ConfigurationError(message)
        values[name] = value
    return values


def generate(args: argparse.Namespace) -> MultiGraph:
    """
    Builds the graph described by the ``gen`` arguments.
    """
    values = _require(args, args.model)
    if args.model == "named":
        return gen_named(values["name"])
    if args.model == "regular-bipartite":
        return gen_regular_bipartite(values["half_n"], values["k"], seed=args.seed)
    if args.model == "random-bipartite":
        return gen_random_bipartite(values["nu"], values["nw"], values["p"], args.max_multiplicity, seed=args.seed)
    if args.model == "nearly-bipartite":
        return gen_nearly_bipartite(
            values["nu"], values["nw"], values["p"], values["apex_degree"], args.max_multiplicity, seed=args.seed
        )
    return gen_random_multigraph(values["n"], values["p"], args.max_multiplicity, seed=args.seed)


def gen_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    graph = generate(args)
    parameters = " ".join(f"{name}={getattr(args, name)}" for name in MODELS[args.model])
    comments = (f"kecs {__version__} gen --model {args.model} {parameters}", f"seed {args.seed}")
    record = {"command": "gen", "model": args.model, "seed": args.seed, "graph": graph.to_record()}
    if args.output:
        write_graph(args.output, graph, comments)
        record["output"] = str(args.output)
        out.emit(record, f"wrote {args.output}: n={graph.n} m={graph.m}")
    else:
        out.emit(record, format_edge_list(graph, comments))
    return ExitStatus.OK
