from typing import List, Literal

from pydantic import validator

from ..common_models import BaseModel, StrictNonNegativeInt, StrictPositiveInt

SUITE_NAMES = ("counts", "bijection", "shuffles", "oracle")

SuiteName = Literal["counts", "bijection", "shuffles", "oracle"]


class SuiteSpec(BaseModel):
    name: SuiteName
    n_max: StrictPositiveInt


class VerificationPlan(BaseModel):
    suites: List[SuiteSpec]
    seed: StrictNonNegativeInt = 0

    @validator("suites")
    def check_if_suites_are_distinct(cls, suites):
        names = [suite.name for suite in suites]
        if len(set(names)) != len(names):
            raise ValueError("Every suite can be listed at most once.")
        if not suites:
            raise ValueError("Plan has to name at least one suite.")
        return suites

    @classmethod
    def from_suite(cls, suite: str, n_max: int) -> "VerificationPlan":
        names = SUITE_NAMES if suite == "all" else (suite,)
        return cls.parse_obj({"suites": [{"name": name, "n_max": n_max} for name in names]})


class CheckResult(BaseModel):
    suite: SuiteName
    name: str
    passed: bool
    cases: StrictNonNegativeInt
    detail: str = ""

    def render(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.suite}/{self.name} cases={self.cases}"
        return f"{line} {self.detail}" if self.detail else line


class VerificationReport(BaseModel):
    plan: VerificationPlan
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def render(self) -> List[str]:
        return [result.render() for result in self.results]
