"""
Exit statuses and stdout rendering shared by the subcommands.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from enum import IntEnum
from typing import IO, Any

from kecs.genio.reports import dump_record
from kecs.spectrum import CheckReport, RuleKind, SearchSummary


class ExitStatus(IntEnum):
    OK = 0
    #: A theorem or bound failed (a bug), or a counterexample under
    #: ``--strict``.
    VIOLATION = 1
    INPUT_ERROR = 2
    BUDGET_EXHAUSTED = 3


class Output:
    """
    Writes either one JSON object per line or human-readable text to
    `stream`.
    """

    def __init__(self, stream: IO[str], as_json: bool = False):
        self.stream = stream
        self.as_json = as_json

    def emit(self, record: Mapping[str, Any], text: str):
        if self.as_json:
            self.stream.write(dump_record(record) + "\n")
        elif text:
            self.stream.write(text.rstrip("\n") + "\n")


def report_status(report: CheckReport) -> str:
    if report.counterexample:
        return "COUNTEREXAMPLE"
    if report.failed:
        return "FAILURE"
    if report.violated:
        return "informational"
    return report.verdict.value


def report_record(report: CheckReport) -> dict[str, Any]:
    record = report.to_record()
    record["status"] = report_status(report)
    return record


def report_line(report: CheckReport) -> str:
    parameters = " ".join(f"{name}={value}" for name, value in (("k", report.k), ("i", report.i)) if value is not None)
    comparison = f"{report.lhs} {report.relation.value} {report.rhs}"
    line = f"{report.rule:<12} {report.kind.value:<10} {comparison:<14} {parameters:<9} {report_status(report)}"
    if report.detail:
        line += f" ({report.detail})"
    if report.violated and report.witness:
        line += f"\n    witness: {report.witness}"
    return line


def summary_text(summary: SearchSummary) -> str:
    violations = ", ".join(f"{rule}={count}" for rule, count in sorted(summary.violations.items())) or "none"
    lines = [
        f"graphs:          {summary.graphs}",
        f"checks:          {summary.checks}",
        f"violations:      {violations}",
        f"failures:        {summary.failures}",
        f"counterexamples: {summary.counterexamples}",
        f"informational:   {summary.informational}",
        f"over budget:     {summary.exhausted}",
    ]
    return "\n".join(lines)


def verdict_status(reports: Iterable[CheckReport], strict: bool = False) -> ExitStatus:
    """
    Failed theorems and bounds always exit with :attr:`ExitStatus.VIOLATION`;
    conjecture counterexamples only do so when `strict`.
    """
    reports = list(reports)
    if any(report.failed and report.kind is not RuleKind.CONJECTURE for report in reports):
        return ExitStatus.VIOLATION
    if strict and any(report.counterexample for report in reports):
        return ExitStatus.VIOLATION
    return ExitStatus.OK
