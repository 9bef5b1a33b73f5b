"""Command line: ``matchgap <command> FILE``, JSON report on stdout."""

import argparse
import logging
import os
import sys
import time
from pathlib import Path
from typing import Any

from matchgap.api import MatchGap
from matchgap.constants import VERSION
from matchgap.edgelist import parse_edgelist, write_edgelist
from matchgap.enums import Command, ExitCode, GeneratorKind
from matchgap.exceptions import (
    GiveUpError,
    GraphInputError,
    InvariantViolationError,
    MatchGapError,
    NotApplicableError,
    SizeGuardError,
)
from matchgap.helpers import dump_json, get_oracle_settings, input_digest
from matchgap.models import Graph, OracleSettings, Report

logger = logging.getLogger(__name__)

Outcome = tuple[dict[str, Any], ExitCode]


def _verdict(holds: bool) -> ExitCode:
    return ExitCode.OK if holds else ExitCode.VERDICT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchgap",
        description="Matching-gap invariants L(G), l(G) and the L = 2l test.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: Command, summary: str, guarded: bool = False) -> argparse.ArgumentParser:
        sub = commands.add_parser(name.value, help=summary)
        if name is not Command.GEN:
            sub.add_argument("file", metavar="FILE", help="edge list, '-' for stdin")
        if guarded:
            sub.add_argument("--limit", type=int, help="vertex limit for enumeration")
            sub.add_argument("--force", action="store_true", help="ignore the limit")
        return sub

    command(Command.NU, "matching number")
    command(Command.GAP, "nu, L and l by enumeration", guarded=True)
    check = command(Command.CHECK_2L, "decide L = 2l in polynomial time", guarded=True)
    check.add_argument(
        "--cross-check", action="store_true", help="compare with the enumeration oracle"
    )
    command(Command.VERIFY, "run every oracle-backed check", guarded=True)
    inflate = command(Command.INFLATE, "replace every vertex of a cubic graph by a triangle")
    inflate.add_argument("-o", "--output", required=True, type=Path)
    command(Command.TWO_FACTORS, "2-factor census with odd-cycle counts", guarded=True)
    command(Command.COLOR3, "3-edge-colouring of a cubic graph")
    command(Command.REDUCE_CHECK, "3-edge-colourability against 2L = 3l", guarded=True)

    gen = command(Command.GEN, "write a seeded random graph")
    gen.add_argument("kind", choices=[kind.value for kind in GeneratorKind])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, default=0.5, help="edge probability for gnp")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("-o", "--output", required=True, type=Path)
    return parser


def _read(file: str) -> bytes:
    if file == "-":
        return sys.stdin.buffer.read()
    return Path(file).read_bytes()


def _settings(args: argparse.Namespace) -> OracleSettings:
    # --limit guards the 2-factor census on cubic commands, the matching oracle elsewhere
    limit = getattr(args, "limit", None)
    if args.command in (Command.TWO_FACTORS, Command.REDUCE_CHECK):
        return get_oracle_settings(os.environ, census_limit=limit)
    return get_oracle_settings(os.environ, oracle_limit=limit)


def _run(api: MatchGap, args: argparse.Namespace, graph: Graph | None) -> Outcome:
    match Command(args.command):
        case Command.NU:
            return {"nu": api.nu(graph)}, ExitCode.OK

        case Command.GAP:
            profile = api.gap_profile(graph)
            return profile.model_dump(mode="json"), ExitCode.OK

        case Command.CHECK_2L:
            certificate = api.check_L_eq_2l(graph)
            result = certificate.model_dump(mode="json")
            holds = certificate.verdict
            if args.cross_check:
                cross = api.cross_check(graph, certificate)
                result["cross_check"] = cross.model_dump(mode="json")
                if not cross.agrees:
                    logger.warning("characterization and oracle disagree")
                holds = holds and cross.agrees
            return result, _verdict(holds)

        case Command.VERIFY:
            report = api.verify(graph)
            result = report.model_dump(mode="json")
            result["all_hold"] = report.all_hold
            return result, _verdict(report.all_hold)

        case Command.INFLATE:
            inflation = api.inflate(graph)
            args.output.write_bytes(write_edgelist(inflation.inflated))
            result = {
                "n": inflation.inflated.n,
                "m": inflation.inflated.m,
                "output": str(args.output),
            }
            return result, ExitCode.OK

        case Command.TWO_FACTORS:
            stats = api.two_factor_stats(graph)
            return stats.model_dump(mode="json"), ExitCode.OK

        case Command.COLOR3:
            coloring = api.color3(graph)
            if coloring is None:
                return {"colorable": False, "coloring": "none"}, ExitCode.VERDICT_FALSE
            result = {"colorable": True, "coloring": coloring.model_dump(mode="json")["colors"]}
            return result, ExitCode.OK

        case Command.REDUCE_CHECK:
            report = api.reduction_check(graph)
            return report.model_dump(mode="json"), _verdict(report.consistent)

        case Command.GEN:
            if args.kind == GeneratorKind.GNP:
                generated = api.random_gnp(args.n, args.p, args.seed)
            else:
                generated = api.random_cubic_bridgeless(args.n, args.seed)
            args.output.write_bytes(write_edgelist(generated))
            result = {
                "kind": args.kind,
                "n": generated.n,
                "m": generated.m,
                "output": str(args.output),
            }
            return result, ExitCode.OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK if e.code in (0, None) else ExitCode.USAGE

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    started = time.perf_counter()
    try:
        settings = _settings(args)
        api = MatchGap(settings, force=getattr(args, "force", False))
        digest = graph = None
        if args.command != Command.GEN:
            data = _read(args.file)
            digest = input_digest(data)
            graph = parse_edgelist(data)
        result, code = _run(api, args, graph)
    except SizeGuardError as e:
        print(f"matchgap: {e}", file=sys.stderr)
        return ExitCode.SIZE_GUARD
    except (GraphInputError, NotApplicableError, GiveUpError, OSError) as e:
        print(f"matchgap: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except InvariantViolationError as e:
        print(f"matchgap: internal check failed: {e}", file=sys.stderr)
        return ExitCode.VERDICT_FALSE
    except MatchGapError as e:
        print(f"matchgap: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR

    report = Report(
        command=args.command,
        input_digest=digest,
        result=result,
        elapsed_ms=round((time.perf_counter() - started) * 1000),
        version=VERSION,
        seed=getattr(args, "seed", None),
    )
    print(dump_json(report))
    return code
