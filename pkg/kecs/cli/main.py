"""
Entry point of the ``kecs`` command.

Results go to stdout (or the ``-o`` file), logs to stderr. The exit
status is one of :class:`~kecs.cli.output.ExitStatus`.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from collections.abc import Sequence
from typing import IO

from kecs.__about__ import __version__
from kecs.cli import commands, messages
from kecs.cli.output import ExitStatus, Output
from kecs.cli.self_test import CLAIMS, SelfTestConfig, faulty_golden, run_claims, select_claims
from kecs.exceptions import BudgetExhausted, ConfigurationError, KecsError, MethodDisagreement, NotBipartiteError
from kecs.spectrum import ALIASES, RULES, GraphClass

log = logging.getLogger(__name__)

#: Environment variable holding the default seed.
SEED_VARIABLE = "KECS_SEED"

#: Rules checked by ``verify`` and ``search`` without ``--rules``.
DEFAULT_VERIFY_RULES = "all"
DEFAULT_SEARCH_RULES = "concavity,midpoint"

METHODS = ["augment", "augmenting", "flow", "oracle"]


def environment_seed() -> int | None:
    """
    Raises
    ------
    ConfigurationError
        The variable is set but not an integer
    """
    value = os.environ.get(SEED_VARIABLE)
    if value is None or not value.strip():
        return None
    try:
        return int(value)
    except ValueError:
        message = messages.BAD_SEED.format(value=value)
        raise ConfigurationError(message) from None


def _graph_source(parser: argparse.ArgumentParser, required: bool = True) -> argparse._MutuallyExclusiveGroup:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("-i", "--input", help="graph file (.el or .g6)")
    group.add_argument("-g", "--graph", help="named graph, e.g. petersen or cycle:5")
    return group


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object per line")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    common.add_argument("--budget", type=int, help="oracle node budget per solve")
    common.add_argument("--seed", type=int, help=f"random seed (default: ${SEED_VARIABLE})")

    parser = argparse.ArgumentParser(
        prog="kecs",
        description="Maximum k-edge-colorable subgraphs of multigraphs and the inequalities between them.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    solve = subparsers.add_parser("solve", parents=[common], help="compute ν_k with a certificate")
    _graph_source(solve)
    solve.add_argument("-k", type=int, required=True, help="number of colors")
    solve.add_argument("--method", choices=METHODS, default="augment")
    solve.add_argument("--cross-check", action="store_true", help="run every applicable method and compare")
    solve.add_argument("-o", "--output", help="write a certificate (.cert.json)")
    solve.set_defaults(handler=commands.solve_command)

    spectrum = subparsers.add_parser("spectrum", parents=[common], help="compute ν_0, ν_1, ... until ν_k = m")
    _graph_source(spectrum)
    spectrum.add_argument("--method", choices=["auto", *METHODS], default="auto")
    spectrum.add_argument("--cap", type=int, help="largest k to compute")
    spectrum.set_defaults(handler=commands.spectrum_command)

    rule_names = ", ".join([*RULES, *(alias for alias in ALIASES if alias not in RULES)])
    verify = subparsers.add_parser("verify", parents=[common], help="check rules, reports or certificates")
    source = _graph_source(verify)
    source.add_argument("--replay", help="re-derive every record of a .report.jsonl file")
    source.add_argument("--certificate", help="check a .cert.json certificate")
    verify.add_argument("--rules", default=DEFAULT_VERIFY_RULES, help=f"comma-separated, from: {rule_names}")
    verify.add_argument("--method", choices=["auto", *METHODS], default="auto", help="spectrum method")
    verify.add_argument("--strict", action="store_true", help="exit 1 on conjecture counterexamples too")
    verify.add_argument("-o", "--output", help="write the reports (.report.jsonl)")
    verify.set_defaults(handler=commands.verify_command)

    search = subparsers.add_parser("search", parents=[common], help="look for rule violations on small graphs")
    search.add_argument("--class", dest="graph_class", choices=[c.value for c in GraphClass], required=True)
    search.add_argument("--max-n", type=int, required=True)
    search.add_argument("--min-n", type=int, default=1)
    search.add_argument("--rules", default=DEFAULT_SEARCH_RULES, help=f"comma-separated, from: {rule_names}")
    search.add_argument("--samples", type=int, help="draw this many random graphs instead of enumerating")
    search.add_argument("--max-multiplicity", type=int, default=1, help="edge multiplicity of sampled graphs")
    search.add_argument("--jobs", type=int, default=1, help="worker processes")
    search.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
    search.add_argument("--strict", action="store_true", help="exit 1 on conjecture counterexamples too")
    search.add_argument("-o", "--output", help="write violations and summary (.report.jsonl)")
    search.set_defaults(handler=commands.search_command)

    gen = subparsers.add_parser("gen", parents=[common], help="generate a graph file")
    gen.add_argument("--model", choices=list(commands.MODELS), required=True)
    gen.add_argument("--half-n", type=int)
    gen.add_argument("-k", "--k", type=int, dest="k")
    gen.add_argument("--nu", type=int)
    gen.add_argument("--nw", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--apex-degree", type=int)
    gen.add_argument("--max-multiplicity", type=int, default=1)
    gen.add_argument("--name")
    gen.add_argument("-o", "--output", help="target file (.el or .g6); stdout if omitted")
    gen.set_defaults(handler=commands.gen_command)

    self_test = subparsers.add_parser("self-test", parents=[common], help="run the bundled claims suite")
    self_test.add_argument("--list", action="store_true", help="list the claims without running them")
    self_test.add_argument("--full", action="store_true", help="acceptance-scale populations")
    self_test.add_argument("--only", help="comma-separated claims to run")
    self_test.add_argument("--jobs", type=int, default=1)
    self_test.add_argument("--inject-fault", action="store_true", help="corrupt one pinned value")
    self_test.set_defaults(handler=self_test_command)
    return parser


def self_test_command(args: argparse.Namespace, out: Output) -> ExitStatus:
    if args.list:
        for claim in CLAIMS:
            out.emit({"claim": claim.name, "summary": claim.summary}, f"{claim.name:<20} {claim.summary}")
        return ExitStatus.OK
    config = SelfTestConfig(full=args.full, seed=args.seed or 0, jobs=args.jobs, budget=args.budget)
    if args.inject_fault:
        config.golden = faulty_golden()
    claims = select_claims(commands.split_names(args.only)) if args.only else None
    results = run_claims(config, claims)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        text = f"{result.claim.name:<20} {status}  {result.seconds:7.2f}s  {result.detail}"
        out.emit(result.to_record(), text)
    failed = sum(1 for result in results if not result.passed)
    out.emit(
        {"summary": True, "claims": len(results), "failed": failed},
        f"{len(results) - failed}/{len(results)} claims passed",
    )
    return ExitStatus.VIOLATION if failed else ExitStatus.OK


def configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv: Sequence[str] | None = None, stdout: IO[str] | None = None) -> ExitStatus:
    """
    Parses `argv` and runs one subcommand.

    Returns
    -------
    ExitStatus
        0 ok, 1 violation, 2 input error, 3 budget exhausted
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return ExitStatus.INPUT_ERROR if exit_.code else ExitStatus.OK
    configure_logging(args.verbose)
    out = Output(stdout or sys.stdout, args.json)
    try:
        if args.seed is None:
            args.seed = environment_seed()
        return args.handler(args, out)
    except NotBipartiteError as error:
        print(f"kecs: {error}\n{messages.NOT_BIPARTITE_HINT}", file=sys.stderr)
        return ExitStatus.INPUT_ERROR
    except MethodDisagreement as error:
        print("kecs: " + messages.INTERNAL_ERROR.format(error=error), file=sys.stderr)
        return ExitStatus.VIOLATION
    except BudgetExhausted as error:
        print(f"kecs: {error}", file=sys.stderr)
        return ExitStatus.BUDGET_EXHAUSTED
    except KecsError as error:
        print(f"kecs: {error}", file=sys.stderr)
        return ExitStatus.INPUT_ERROR
    except OSError as error:
        print(f"kecs: {error}", file=sys.stderr)
        return ExitStatus.INPUT_ERROR


def main():
    sys.exit(int(run()))


if __name__ == "__main__":
    main()
