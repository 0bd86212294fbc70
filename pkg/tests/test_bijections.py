import re
from fractions import Fraction

import numpy as np
import pytest

from catalanc.bijections import (
    forest_to_region,
    hyperplane_equation,
    minimum_gap,
    perturb,
    phi,
    psi,
    region_to_forest,
    representative_point,
    sigma,
)
from catalanc.common_models import RegionPoint
from catalanc.exceptions import (
    HyperplaneCollisionError,
    InvalidForestError,
    InvalidSketchError,
    MalformedForestError,
)
from catalanc.forests import bfs_order, enumerate_forests, parse_forest, special_leaves
from catalanc.testing import symmetric_forests_by_definition
from catalanc.words import (
    Letter,
    enumerate_annotated_sketches,
    enumerate_symmetric_sketches,
    parse_word,
    rightmost_zero_position,
    validate_symmetric_sketch,
)

OMEGA = "-2^0 1^0 -2^1 3^0 -3^0 1^1 -1^0 3^1 -3^1 2^0 -1^1 2^1"
FOREST_G = "-2(3,-3(2)),1(-1)"

REGIONS_OF_SIZE_ONE = [
    ("-1^0 1^0 -1^1 1^1", Fraction(1, 6)),
    ("1^0 1^1 -1^0 -1^1", Fraction(-2, 3)),
    ("-1^0 -1^1 1^0 1^1", Fraction(2, 3)),
    ("1^0 -1^0 1^1 -1^1", Fraction(-1, 6)),
]


class TestHyperplaneEquation:
    @pytest.mark.parametrize(
        "first, second, expected",
        [
            (Letter(1, 0), Letter(2, 0), "x1 - x2 = 0"),
            (Letter(1, 0), Letter(-2, 1), "x1 + x2 = 1"),
            (Letter(-1, 0), Letter(1, 0), "2x1 = 0"),
            (Letter(-1, 1), Letter(1, 0), "2x1 = 1"),
            (Letter(2, 1), Letter(1, 0), "x1 - x2 = 1"),
        ],
    )
    def test_equation_has_positive_leading_coefficient(self, first, second, expected):
        assert hyperplane_equation(first, second) == expected


class TestSigma:
    @pytest.mark.parametrize("word, x", REGIONS_OF_SIZE_ONE)
    def test_points_of_the_four_regions_in_dimension_one(self, word, x):
        assert str(sigma(RegionPoint(coords=[x]))) == word

    def test_point_of_region_of_omega(self):
        point = RegionPoint.parse("-3/5, 7/5, -1/5")

        assert str(sigma(point)) == OMEGA

    @pytest.mark.parametrize(
        "coords, equation",
        [
            ("0", "2x1 = 0"),
            ("1/2", "2x1 = 1"),
            ("3/2,1/2", "x1 - x2 = 1"),
            ("1/3,-1/3", "x1 + x2 = 0"),
        ],
    )
    def test_points_on_hyperplanes_are_rejected(self, coords, equation):
        with pytest.raises(HyperplaneCollisionError, match=re.escape(equation)) as error:
            sigma(RegionPoint.parse(coords))

        assert error.value.equation == equation

    def test_sigma_of_point_is_symmetric_sketch(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            numerators = rng.integers(-1000, 1000, size=3)
            point = RegionPoint(coords=[Fraction(int(k), 997) for k in numerators])
            try:
                word = sigma(point)
            except HyperplaneCollisionError:
                continue
            assert validate_symmetric_sketch(word), str(word)


class TestRepresentativePoint:
    @pytest.mark.parametrize("word, x", REGIONS_OF_SIZE_ONE)
    def test_points_of_regions_in_dimension_one(self, word, x):
        assert representative_point(parse_word(word)).coords == (x,)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_point_lies_in_its_region(self, n):
        for word in enumerate_symmetric_sketches(n):
            point = representative_point(word)
            assert sigma(point) == word
            assert all((2 * (2 * n + 1)) % coord.denominator == 0 for coord in point.coords)

    def test_invalid_sketch_is_rejected(self):
        with pytest.raises(InvalidSketchError, match="violation iii"):
            representative_point(parse_word("-1^0 1^0 1^1 -1^1"))

    def test_small_perturbations_stay_in_region(self):
        rng = np.random.default_rng(0)
        for word in enumerate_symmetric_sketches(2):
            point = representative_point(word)
            half_gap = minimum_gap(point) / 2
            for _ in range(5):
                numerators = rng.integers(-999, 1000, size=2)
                offsets = tuple(Fraction(int(k), 1000) * half_gap for k in numerators)
                assert sigma(perturb(point, offsets)) == word

    def test_minimum_gap_of_point(self):
        assert minimum_gap(RegionPoint.parse("1/6")) == Fraction(1, 3)


class TestPhi:
    def test_phi_of_omega_is_forest_g(self):
        assert str(phi(parse_word(OMEGA))) == FOREST_G

    @pytest.mark.parametrize(
        "word, forest",
        [
            ("-2^0 1^0 -2^1 3^0 1^1 3^1", "-2(3),1"),
            ("1^0 1^1 2^0 3^0 2^1 3^1 4^0 4^1", "1(2,3(4))"),
            ("1^0 2^0 1^1 2^1", "1,2"),
        ],
    )
    def test_phi_of_annotated_sketches(self, word, forest):
        assert str(phi(parse_word(word), symmetric=False)) == forest

    def test_kind_of_sketch_is_inferred_from_its_length(self):
        assert str(phi(parse_word("1^0 1^1 -1^0 -1^1"))) == "1(-1)"
        assert str(phi(parse_word("1^0 1^1"))) == "1"

    def test_invalid_sketch_is_rejected(self):
        with pytest.raises(InvalidSketchError):
            phi(parse_word("-1^0 1^0 1^1 -1^1"))

    def test_forest_has_one_node_per_level_zero_letter_in_bfs_order(self):
        for word in enumerate_symmetric_sketches(2):
            zeros = [letter.index for letter in word.letters if letter.level == 0]
            assert bfs_order(phi(word)) == zeros


class TestPsi:
    def test_psi_of_forest_g_is_omega(self):
        assert str(psi(parse_forest(FOREST_G))) == OMEGA

    @pytest.mark.parametrize(
        "forest, word",
        [
            ("1(2,3(4))", "1^0 1^1 2^0 3^0 2^1 3^1 4^0 4^1"),
            ("1(2),-2(-1)", "1^0 -2^0 1^1 2^0 -2^1 -1^0 2^1 -1^1"),
            ("-1,1", "-1^0 1^0 -1^1 1^1"),
        ],
    )
    def test_psi_reads_forest_in_bfs_order(self, forest, word):
        assert str(psi(parse_forest(forest))) == word

    def test_invalid_symmetric_forest_is_rejected(self):
        with pytest.raises(InvalidForestError):
            psi(parse_forest("1,2,-2(-1)"))

    def test_labeled_forest_with_wrong_labels_is_rejected(self):
        with pytest.raises(MalformedForestError):
            psi(parse_forest("1(3)"), symmetric=False)


class TestRoundTrips:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_psi_inverts_phi_on_symmetric_sketches(self, n):
        for word in enumerate_symmetric_sketches(n):
            assert psi(phi(word, symmetric=True), symmetric=True) == word

    @pytest.mark.parametrize("n", [1, 2])
    def test_phi_inverts_psi_on_symmetric_forests(self, n):
        for forest in symmetric_forests_by_definition(n):
            assert phi(psi(forest, symmetric=True)) == forest

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_psi_inverts_phi_on_annotated_sketches(self, n):
        for word in enumerate_annotated_sketches(n):
            assert psi(phi(word, symmetric=False), symmetric=False) == word

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_phi_inverts_psi_on_labeled_forests(self, n):
        for forest in enumerate_forests(n, labeled=True):
            assert phi(psi(forest, symmetric=False), symmetric=False) == forest

    def test_special_leaves_count_trailing_level_one_letters(self):
        for word in enumerate_annotated_sketches(3):
            forest = phi(word, symmetric=False)
            assert len(special_leaves(forest)) == 6 - rightmost_zero_position(word)

    def test_region_and_forest_maps_compose(self):
        point = RegionPoint.parse("1/6")

        assert str(region_to_forest(point)) == "-1,1"
        assert forest_to_region(parse_forest("-1,1")) == point

    @pytest.mark.skipif("not config.getoption('slow')")
    def test_all_regions_in_dimension_four_are_reached(self):
        words = set(enumerate_symmetric_sketches(4))
        forests = {phi(word, symmetric=True) for word in words}

        assert len(words) == len(forests) == 26880
        for word in list(words)[:200]:
            assert sigma(representative_point(word)) == word
