"""Functionality related to verification of the bijections and counting formulas.

Each suite runs a family of exhaustive checks up to a size bound and reports one line per
named check. Suites can be chosen on the command line or described in a YAML plan::

    suites:
      - name: counts
        n_max: 50
      - name: oracle
        n_max: 2
"""
from ._cli import add_verify_parser
from ._models import CheckResult, SuiteSpec, VerificationPlan, VerificationReport
from .suites import run_verification

__all__ = [
    "add_verify_parser",
    "run_verification",
    "CheckResult",
    "SuiteSpec",
    "VerificationPlan",
    "VerificationReport",
]
