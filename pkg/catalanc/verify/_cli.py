"""Definition of command line parser and handler for catalanc verify command.

The handler is a thin wrapper around catalanc.verify.suites.run_verification.
"""
from argparse import FileType, Namespace

from yaml import safe_load

from .._commands import positive_int
from ._models import SUITE_NAMES, VerificationPlan
from .suites import run_verification


def _verify(args: Namespace) -> int:
    """Function executed when catalanc verify is invoked."""
    if args.plan is not None:
        plan = VerificationPlan.parse_obj(safe_load(args.plan))
    else:
        plan = VerificationPlan.from_suite(args.suite, args.n_max)

    report = run_verification(plan, show_progress=args.progress, force=args.force)
    for line in report.render():
        print(line)
    return 0 if report.passed else 1


def add_verify_parser(parent_parser) -> None:
    """Add verify parser to the parent parser.

    The command runs either a single suite (or all of them) given by --suite and --n-max,
    or all suites listed in a YAML plan given by --plan. It prints one PASS/FAIL line per
    named check and exits with status 1 if any check fails.

    :param parent_parser: a parser to which verify command should be added.
    """
    parser = parent_parser.add_parser(
        "verify",
        description=(
            "Certify the bijections and counting formulas by exhaustive checks against "
            "brute-force oracles."
        ),
    )

    parser.add_argument(
        "--suite",
        help="suite to run, 'all' runs every suite with the same bound (default: all)",
        choices=SUITE_NAMES + ("all",),
        default="all",
    )
    parser.add_argument(
        "--n-max",
        help="largest size examined by the suite (default: 2)",
        type=positive_int,
        default=2,
    )
    parser.add_argument(
        "--plan",
        help="path to a YAML file listing suites and their bounds. Overrides --suite/--n-max",
        type=FileType("r"),
    )
    parser.add_argument(
        "--progress", help="show progress bar over the suites", action="store_true"
    )
    parser.add_argument(
        "--force", help="allow bounds beyond the desk-scale limits", action="store_true"
    )

    parser.set_defaults(func=_verify)
