"""Command line interface for catalanc package."""
import sys
from argparse import ArgumentParser, Namespace
from logging import getLogger
from typing import List

from pydantic import ValidationError

from ._commands import (
    add_count_parser,
    add_enumerate_parser,
    add_map_parser,
    add_shuffle_parser,
)
from .exceptions import CatalanError
from .logging import configure_logging
from .verify import add_verify_parser

PARSERS_TO_ADD = [
    add_count_parser,
    add_enumerate_parser,
    add_map_parser,
    add_shuffle_parser,
    add_verify_parser,
]

logger = getLogger("catalanc")


def _create_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="catalanc",
        description="Regions of the type C Catalan arrangement, sketches and forests.",
    )
    parser.add_argument("--verbose", help="log progress information", action="store_true")

    commands = parser.add_subparsers()

    for add_parser in PARSERS_TO_ADD:
        add_parser(commands)

    return parser


def _assign_leftover_object(parser: ArgumentParser, args: Namespace, unknown: List[str]) -> None:
    # argparse takes an object like -2(3),1 for an unknown option and leaves it over
    if not unknown:
        return
    if len(unknown) == 1 and getattr(args, "object", "") is None and unknown[0][:2] != "--":
        args.object = unknown[0]
    else:
        parser.error(f"unrecognized arguments: {' '.join(unknown)}")


def main(args=None) -> int:
    """Entry point of the CLI.

    :param args: list of arguments, sys.argv[1:] by default.
    :return: exit status. 0 on success, 1 on domain errors and failed verification, 2 on
     usage errors.
    """
    parser = _create_parser()
    try:
        args, unknown = parser.parse_known_args(args)  # noqa
        _assign_leftover_object(parser, args, unknown)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)

    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2

    try:
        return args.func(args)
    except (CatalanError, ValidationError) as e:
        logger.debug("Command failed", exc_info=True)
        print(f"catalanc: error: {e}", file=sys.stderr)
        return 1


run = main
