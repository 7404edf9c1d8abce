# SPDX-FileCopyrightText: 2026 The Echelon Authors
#
# SPDX-License-Identifier: MIT

"""
`echelon.cli._main`
================================================================================

Argument parsing, logging setup and exit codes of the ``echelon`` command.

Exit codes: 0 ok, 2 configuration, 3 input/output, 4 validation,
5 numerical failure.

"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from .._constants import SCALES
from .._errors import EchelonError, InputError
from ._commands import COMMANDS
from ._config import load_config

__version__ = "0.0.0+auto.0"

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

DESCRIPTIONS = {
    "synth": "generate a seeded synthetic world",
    "ingest": "parse transcripts into CEO documents",
    "labels": "aggregate crowd votes into MBTI labels",
    "iaa": "inter-annotator agreement of the votes",
    "split": "group split of the labelled documents",
    "train": "select and train the personality model",
    "eval": "test-part evaluation report",
    "predict": "score every ingested document",
    "risk": "volatility regression with and without MBTI",
    "explain": "n-gram contributions to one prediction",
}


def exit_code(error: BaseException) -> int:
    """Exit code of an error: its category, else by builtin type"""
    if isinstance(error, EchelonError):
        return error.exit_code
    if isinstance(error, OSError):
        return InputError.exit_code
    if isinstance(error, ValueError):
        return 4
    if isinstance(error, ArithmeticError):
        return 5
    return 1


def build_parser() -> argparse.ArgumentParser:
    """The ``echelon`` argument parser"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", help="YAML run configuration")
    common.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="SECTION.KEY=VALUE",
        help="override one setting (repeatable; value parsed as YAML)",
    )
    common.add_argument("--seed", type=int, help="global seed")
    common.add_argument("--run-dir", default=".", help="directory of all outputs (default: .)")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )

    parser = argparse.ArgumentParser(
        prog="echelon",
        description="CEO personality from earnings calls and its link to stock volatility",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    for name, description in DESCRIPTIONS.items():
        sub = commands.add_parser(name, parents=[common], help=description, description=description)
        if name == "explain":
            sub.add_argument("call_id", help="call to explain")
            sub.add_argument("scale", choices=[scale.value for scale in SCALES])
            sub.add_argument("--ceo", help="CEO name when a call has several")
            sub.add_argument("--top", type=int, help="number of contributions to list")
    return parser


def configure_logging(verbosity: int):
    """WARNING by default, INFO with ``-v``, DEBUG with ``-vv``; always stderr"""
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns the exit code"""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = load_config(args.config, args.overrides, seed=args.seed, run_dir=args.run_dir)
        try:
            os.makedirs(config.run_dir, exist_ok=True)
        except OSError as error:
            raise InputError(f"cannot create run directory {config.run_dir}: {error}") from error
        logger.info("config hash %s, seed %d", config.config_hash, config.seed)
        output = COMMANDS[args.command](config, args)
    except (EchelonError, OSError, ValueError, ArithmeticError) as error:
        print(f"echelon {args.command}: error: {error}", file=sys.stderr)
        return exit_code(error)
    sys.stdout.write(output)
    return 0
