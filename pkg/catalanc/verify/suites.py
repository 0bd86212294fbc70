"""Functions running verification suites and collecting their results."""
from fractions import Fraction
from itertools import product
from logging import getLogger
from typing import Callable, Dict, Iterable, List

import numpy as np
from scipy.special import factorial
from tqdm import tqdm

from ..bijections import minimum_gap, perturb, phi, psi, representative_point, sigma
from ..counting import (
    KNOWN_REGION_COUNTS,
    LatticePath,
    c_ns,
    catalan,
    check_recurrence,
    dominating_rotations,
    excess,
    paths_by_tail,
    region_count,
    region_count_via_sum,
    special_leaf_table,
)
from ..forests import (
    count_forests_by_special_leaves,
    decompose_symmetric_forest,
    enumerate_forests,
    forest_shuffles,
    special_leaves,
    symmetric_forest,
)
from ..limits import check_desk_scale
from ..testing import (
    forest_shuffles_by_definition,
    symmetric_forest_by_definition,
    symmetric_forests_by_definition,
    symmetric_sketches_by_permutation_filter,
)
from ..words import (
    decompose_symmetric,
    enumerate_annotated_sketches,
    enumerate_symmetric_sketches,
    rightmost_zero_position,
    sketch_shuffles,
    symmetric_word,
    validate_symmetric_sketch,
)
from ._models import CheckResult, SuiteSpec, VerificationPlan, VerificationReport

logger = getLogger("catalanc")

# Sizes beyond which individual checks stop growing, whatever n_max is.
MAX_CYCLE_LEMMA_LENGTH = 14
MAX_SPECIAL_LEAF_N = 8
MAX_SYMMETRIC_N = 3
MAX_PERMUTATION_FILTER_N = 2
PERTURBATIONS_PER_SKETCH = 20
PERTURBATION_N = 2


class _Check:
    """Accumulates cases of a single named check."""

    def __init__(self, suite: str, name: str):
        self.suite = suite
        self.name = name
        self.cases = 0
        self.failures: List[str] = []

    def record(self, passed: bool, case) -> None:
        self.cases += 1
        if not passed:
            if not self.failures:
                logger.warning("Check %s/%s failed for %s", self.suite, self.name, case)
            self.failures.append(str(case))

    def result(self, detail: str = "") -> CheckResult:
        if self.failures:
            detail = f"first failure: {self.failures[0]}"
        return CheckResult(
            suite=self.suite,
            name=self.name,
            passed=not self.failures,
            cases=self.cases,
            detail=detail,
        )


def _sizes(n_max: int, bound: int, start: int = 1) -> range:
    return range(start, min(n_max, bound) + 1)


def _counts_suite(n_max: int, _rng) -> List[CheckResult]:
    division = _Check("counts", "division-exactness")
    catalan_sum = _Check("counts", "catalan-sum")
    identity = _Check("counts", "formula-identity")
    recurrence = _Check("counts", "recurrence")
    for n in range(1, n_max + 1):
        for s in range(1, n + 1):
            try:
                c_ns(n, s)
                division.record(True, (n, s))
            except RuntimeError:
                division.record(False, (n, s))
        catalan_sum.record(sum(special_leaf_table(n).entries.values()) == catalan(n), n)
        identity.record(region_count(n) == region_count_via_sum(n), n)
        if n >= 2:
            recurrence.record(check_recurrence(n), n)

    known = _Check("counts", "known-region-counts")
    for n in _sizes(n_max, max(KNOWN_REGION_COUNTS)):
        known.record(region_count(n) == KNOWN_REGION_COUNTS[n], n)

    statistics = _Check("counts", "special-leaf-statistics")
    for n in _sizes(n_max, MAX_SPECIAL_LEAF_N):
        closed_form = special_leaf_table(n).entries
        statistics.record(
            count_forests_by_special_leaves(n).entries == closed_form == paths_by_tail(n), n
        )

    cycle_lemma = _Check("counts", "cycle-lemma")
    for length in range(1, min(2 * n_max, MAX_CYCLE_LEMMA_LENGTH) + 1):
        for steps in product("UD", repeat=length):
            path = LatticePath("".join(steps))
            if excess(path) > 0:
                try:
                    cycle_lemma.record(dominating_rotations(path) == excess(path), path)
                except RuntimeError:
                    cycle_lemma.record(False, path)

    return [
        division.result(),
        catalan_sum.result(),
        identity.result(),
        recurrence.result(),
        known.result(),
        statistics.result(),
        cycle_lemma.result(),
    ]


def _bijection_suite(n_max: int, rng) -> List[CheckResult]:
    psi_phi_symmetric = _Check("bijection", "psi-phi-symmetric")
    phi_psi_symmetric = _Check("bijection", "phi-psi-symmetric")
    geometry = _Check("bijection", "sigma-representative-point")
    for n in _sizes(n_max, MAX_SYMMETRIC_N):
        for word in enumerate_symmetric_sketches(n):
            psi_phi_symmetric.record(psi(phi(word), symmetric=True) == word, word)
            try:
                geometry.record(sigma(representative_point(word)) == word, word)
            except RuntimeError:
                geometry.record(False, word)
        for forest in symmetric_forests_by_definition(n):
            phi_psi_symmetric.record(phi(psi(forest, symmetric=True)) == forest, forest)

    psi_phi_annotated = _Check("bijection", "psi-phi-annotated")
    phi_psi_labeled = _Check("bijection", "phi-psi-labeled")
    restriction = _Check("bijection", "restriction-to-fixed-s")
    for n in range(1, n_max + 1):
        images: Dict[int, set] = {s: set() for s in range(n, 2 * n)}
        for word in enumerate_annotated_sketches(n):
            forest = phi(word, symmetric=False)
            psi_phi_annotated.record(psi(forest, symmetric=False) == word, word)
            s = rightmost_zero_position(word)
            restriction.record(len(special_leaves(forest)) == 2 * n - s, word)
            images[s].add(forest)
        for s, image in images.items():
            expected = 2**n * int(factorial(n, exact=True)) * c_ns(n, 2 * n - s)
            restriction.record(len(image) == expected, (n, s))
        for forest in enumerate_forests(n, labeled=True):
            word = psi(forest, symmetric=False)
            phi_psi_labeled.record(phi(word, symmetric=False) == forest, forest)

    perturbation = _Check("bijection", "sigma-local-constancy")
    if n_max >= PERTURBATION_N:
        for word in enumerate_symmetric_sketches(PERTURBATION_N):
            point = representative_point(word)
            half_gap = minimum_gap(point) / 2
            for _ in range(PERTURBATIONS_PER_SKETCH):
                numerators = rng.integers(-999, 1000, size=point.n)
                offsets = tuple(Fraction(int(k), 1000) * half_gap for k in numerators)
                perturbation.record(sigma(perturb(point, offsets)) == word, (word, offsets))

    return [
        psi_phi_symmetric.result(),
        phi_psi_symmetric.result(),
        psi_phi_annotated.result(),
        phi_psi_labeled.result(),
        restriction.result(),
        geometry.result(),
        perturbation.result(),
    ]


def _shuffles_suite(n_max: int, _rng) -> List[CheckResult]:
    cardinality = _Check("shuffles", "sketch-shuffle-cardinality")
    decomposition = _Check("shuffles", "sketch-decomposition")
    compatibility = _Check("shuffles", "phi-shuffle-compatibility")
    symmetric = _Check("shuffles", "phi-symmetric-compatibility")
    for n in range(1, n_max + 1):
        for word in enumerate_annotated_sketches(n):
            shuffles = sketch_shuffles(word)
            s = rightmost_zero_position(word)
            cardinality.record(
                len(set(shuffles)) == 2 ** (2 * n - s)
                and all(validate_symmetric_sketch(shuffle) for shuffle in shuffles),
                word,
            )
            for shuffle in shuffles:
                decomposition.record(
                    decompose_symmetric(shuffle) == (word, symmetric_word(word)), shuffle
                )
            if n <= MAX_SYMMETRIC_N:
                forest = phi(word, symmetric=False)
                compatibility.record(
                    {phi(shuffle, symmetric=True) for shuffle in shuffles}
                    == set(forest_shuffles_by_definition(forest)),
                    word,
                )
                symmetric.record(
                    phi(symmetric_word(word), symmetric=False)
                    == symmetric_forest_by_definition(forest),
                    word,
                )

    forest_definition = _Check("shuffles", "forest-shuffles-definition")
    forest_decomposition = _Check("shuffles", "forest-decomposition")
    involution = _Check("shuffles", "forest-symmetric-involution")
    for n in range(1, n_max + 1):
        for forest in enumerate_forests(n, labeled=True):
            shuffles = forest_shuffles(forest)
            by_definition = forest_shuffles_by_definition(forest)
            forest_definition.record(
                len(shuffles) == 2 ** len(special_leaves(forest))
                and set(shuffles) == set(by_definition),
                forest,
            )
            mirror = symmetric_forest(forest)
            involution.record(symmetric_forest(mirror) == forest, forest)
            for shuffle in shuffles:
                forest_decomposition.record(
                    decompose_symmetric_forest(shuffle) == (forest, mirror), shuffle
                )

    return [
        cardinality.result(),
        decomposition.result(),
        compatibility.result(),
        symmetric.result(),
        forest_definition.result(),
        forest_decomposition.result(),
        involution.result(),
    ]


def _oracle_suite(n_max: int, _rng) -> List[CheckResult]:
    permutation_filter = _Check("oracle", "permutation-filter")
    for n in _sizes(n_max, MAX_PERMUTATION_FILTER_N):
        enumerated = list(enumerate_symmetric_sketches(n))
        enumerated_set = set(enumerated)
        filtered = symmetric_sketches_by_permutation_filter(n)
        for word in filtered:
            permutation_filter.record(word in enumerated_set, word)
        permutation_filter.record(len(filtered) == len(enumerated) == len(enumerated_set), n)

    forest_filter = _Check("oracle", "forest-filter")
    enumeration = _Check("oracle", "enumeration-count")
    for n in _sizes(n_max, MAX_SYMMETRIC_N):
        words = list(enumerate_symmetric_sketches(n))
        enumeration.record(
            len(words) == region_count(n) and all(validate_symmetric_sketch(w) for w in words), n
        )
        images = {phi(word, symmetric=True) for word in words}
        filtered = symmetric_forests_by_definition(n)
        for forest in filtered:
            forest_filter.record(forest in images, forest)
        forest_filter.record(len(filtered) == len(images) == region_count(n), n)

    return [permutation_filter.result(), enumeration.result(), forest_filter.result()]


SUITES: Dict[str, Callable[[int, np.random.Generator], List[CheckResult]]] = {
    "counts": _counts_suite,
    "bijection": _bijection_suite,
    "shuffles": _shuffles_suite,
    "oracle": _oracle_suite,
}


def _log_plan(plan: VerificationPlan) -> None:
    logger.info("Running %d verification suites", len(plan.suites))
    for suite in plan.suites:
        logger.info("Suite %s up to n=%d", suite.name, suite.n_max)


def run_verification(
    plan: VerificationPlan, show_progress: bool = False, force: bool = False
) -> VerificationReport:
    """Run all suites of the plan and collect their results.

    :param plan: suites to run with their size bounds.
    :param show_progress: whether to show a tqdm progress bar over the suites.
    :param force: allow size bounds beyond the desk-scale limits.
    :return: report with one result per named check, in a fixed order.
    :raise DeskScaleError: if some n_max exceeds its limit and force is False.
    """
    for suite in plan.suites:
        check_desk_scale(f"verify-{suite.name}", suite.n_max, force)
    _log_plan(plan)

    rng = np.random.default_rng(plan.seed)
    results: List[CheckResult] = []
    suites: Iterable[SuiteSpec] = plan.suites
    if show_progress:
        suites = tqdm(plan.suites, desc="verify")
    for suite in suites:
        results.extend(SUITES[suite.name](suite.n_max, rng))
    return VerificationReport(plan=plan, results=results)
