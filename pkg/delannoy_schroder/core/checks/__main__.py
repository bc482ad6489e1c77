#!/usr/bin/env python3
"""Command-line entry point for the check suites.

Usage:
    python -m delannoy_schroder.core.checks verify [OPTIONS]
    python -m delannoy_schroder.core.checks bigprime [--p P] [--y Y] [--config FILE]
    python -m delannoy_schroder.core.checks list

Exit codes: 0 ok, 1 a proved statement failed (or a conjecture, with
--strict-conjectures), 2 usage or validation error, 3 report I/O error,
4 internal consistency failure.
"""

import argparse
import asyncio
import logging
import sys

import pandas as pd
from pydantic import ValidationError

from delannoy_schroder.core.checks.config import (
    RunConfig,
    load_config_file,
    parse_grid_item,
)
from delannoy_schroder.core.checks.errors import (
    MissingParamError,
    PredicateViolatedError,
    ReportWriteError,
    UnknownIdError,
)
from delannoy_schroder.core.checks.models import OutputFormat, Suite
from delannoy_schroder.core.checks.registry import get_catalog
from delannoy_schroder.core.checks.report import emit_report
from delannoy_schroder.core.checks.runner import exit_code, run_suite
from delannoy_schroder.core.exact.errors import ConsistencyError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Verify Delannoy and Schroder identities, congruences and conjectures"
    )
    parser.add_argument(
        "-d", "--debug", action="store_true", help="Enable debug logging"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser(
        "verify",
        help="Run selected suites",
        argument_default=argparse.SUPPRESS,
    )
    verify.add_argument(
        "--suite",
        dest="suites",
        action="append",
        help=f"Suite to run, repeatable or comma separated: {[s.value for s in Suite]}",
    )
    verify.add_argument("--ids", help="Comma separated check ids")
    verify.add_argument("--n-max", type=int, help="Cap on the size parameters n, m, k, N")
    verify.add_argument("--primes", help="Prime range LO..HI replacing every default")
    verify.add_argument(
        "--grid",
        action="append",
        help="Parameter range key=lo..hi, repeatable",
    )
    verify.add_argument("--jobs", type=int, help="Worker processes")
    verify.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Report format",
    )
    verify.add_argument("--out", help="Report path (default: standard output)")
    verify.add_argument("--config", help="YAML or JSON file with run settings")
    verify.add_argument(
        "--timings", action="store_true", help="Record elapsed times in the report"
    )
    verify.add_argument(
        "--strict-conjectures",
        action="store_true",
        help="Exit 1 when a conjectural check fails",
    )
    verify.add_argument(
        "--extended",
        action="store_true",
        help="Scan the longer prime range for the entries that support it",
    )

    bigprime = commands.add_parser(
        "bigprime",
        help="Run the large-prime check",
        argument_default=argparse.SUPPRESS,
    )
    bigprime.add_argument("--p", type=int, help="Odd prime")
    bigprime.add_argument("--y", type=int, help="Point y = x(x+1)")
    bigprime.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Report format",
    )
    bigprime.add_argument("--out", help="Report path")
    bigprime.add_argument("--config", help="YAML or JSON file with run settings")
    bigprime.add_argument(
        "--timings", action="store_true", help="Record elapsed times in the report"
    )

    commands.add_parser("list", help="Print the check catalogs")
    return parser


def _command_values(args: argparse.Namespace, parser: argparse.ArgumentParser) -> dict:
    """Config-file values overridden by the flags given on the command line."""
    flags = vars(args)
    values = {}
    if "config" in flags:
        try:
            values.update(load_config_file(flags.pop("config")))
        except (OSError, ValueError) as e:
            parser.error(f"Cannot read config file: {e}")
    if "suites" in flags:
        flags["suites"] = ",".join(flags["suites"])
    if "grid" in flags:
        try:
            flags["grid"] = dict(parse_grid_item(g) for g in flags["grid"])
        except ValueError as e:
            parser.error(str(e))
    values.update(flags)
    return values


def parse_args(argv: list[str] | None = None) -> RunConfig:
    """Validated run configuration; usage errors exit with code 2."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        values = vars(args)
    else:
        values = _command_values(args, parser)
    if args.command == "bigprime":
        values["suites"] = [Suite.BIGPRIME]
    try:
        return RunConfig(**values)
    except ValidationError as e:
        parser.error(str(e))


def print_catalog():
    rows = [
        {
            "suite": e.suite.value,
            "id": e.id,
            "reference": e.reference,
            "parameters": ";".join(
                f"{k}={lo}..{hi}" for k, (lo, hi) in sorted(e.parameters.items())
            ),
            "conjectural": e.conjectural,
            "description": e.description,
        }
        for e in sorted(get_catalog().values(), key=lambda e: (e.suite.value, e.id))
    ]
    print(pd.DataFrame(rows).to_string(index=False, max_colwidth=80))


async def main(argv: list[str] | None = None) -> int:
    """Main entry point for the check suites."""
    cfg = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if cfg.debug else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    if cfg.command == "list":
        print_catalog()
        return 0
    try:
        report = await run_suite(cfg)
    except (UnknownIdError, MissingParamError, PredicateViolatedError) as e:
        logger.error("%s", e)
        return 2
    except ConsistencyError as e:
        logger.error("Internal consistency failure, no report written: %s", e)
        return 4
    try:
        emit_report(report, cfg.format, cfg.out)
    except ReportWriteError as e:
        logger.error("%s", e)
        return 3
    return exit_code(report, cfg.strict_conjectures)


def main_sync() -> None:
    sys.exit(asyncio.run(main()))


if __name__ == "__main__":
    main_sync()
