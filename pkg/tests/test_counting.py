import numpy as np
import pytest

from catalanc.counting import (
    KNOWN_REGION_COUNTS,
    LatticePath,
    c_ns,
    catalan,
    check_recurrence,
    count_paths_with_tail,
    d_ns,
    dominating_rotations,
    dyck_paths,
    excess,
    paths_by_tail,
    region_count,
    region_count_via_sum,
    shuffle_identity,
    special_leaf_table,
)
from catalanc.exceptions import CatalanError, InvalidSizeError, MalformedPathError


class TestClosedForms:
    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (10, 16796)])
    def test_catalan_numbers(self, n, expected):
        assert catalan(n) == expected

    @pytest.mark.parametrize(
        "n, expected",
        [(1, {1: 1}), (2, {1: 1, 2: 1}), (3, {1: 2, 2: 2, 3: 1}), (4, {1: 5, 2: 5, 3: 3, 4: 1})],
    )
    def test_forest_counts_by_special_leaves(self, n, expected):
        assert special_leaf_table(n).entries == expected

    @pytest.mark.parametrize("n, s", [(3, 0), (3, 4), (1, 2)])
    def test_s_outside_of_range_is_rejected(self, n, s):
        with pytest.raises(InvalidSizeError):
            c_ns(n, s)

    def test_shuffle_set_sizes_are_powers_of_two(self):
        assert [d_ns(s) for s in range(5)] == [1, 2, 4, 8, 16]

    @pytest.mark.parametrize("n", range(1, 201))
    def test_division_is_exact_and_sums_to_catalan(self, n):
        table = special_leaf_table(n)

        assert table.total() == catalan(n)
        assert all(isinstance(count, int) for count in table.entries.values())

    @pytest.mark.parametrize("n, expected", sorted(KNOWN_REGION_COUNTS.items()))
    def test_known_region_counts(self, n, expected):
        assert region_count(n) == region_count_via_sum(n) == expected

    @pytest.mark.parametrize("n", range(1, 201))
    def test_both_formulas_agree(self, n):
        assert region_count(n) == region_count_via_sum(n)
        assert shuffle_identity(n)

    def test_large_counts_are_exact_integers(self):
        count = region_count(30)

        assert isinstance(count, int)
        assert count.bit_length() > 64

    @pytest.mark.parametrize("n", [0, -1])
    def test_region_count_needs_positive_n(self, n):
        with pytest.raises(InvalidSizeError):
            region_count(n)

    @pytest.mark.parametrize(
        "count, args",
        [(catalan, (-1,)), (c_ns, (2, 3)), (d_ns, (-1,)), (region_count_via_sum, (0,))],
    )
    def test_invalid_sizes_are_domain_errors(self, count, args):
        with pytest.raises(CatalanError, match="got"):
            count(*args)


class TestRecurrence:
    @pytest.mark.parametrize("n", range(2, 201))
    def test_recurrence_holds(self, n):
        assert check_recurrence(n)

    def test_recurrence_needs_two_nodes(self):
        with pytest.raises(InvalidSizeError):
            check_recurrence(1)


class TestLatticePaths:
    def test_path_is_parsed_case_insensitively(self):
        assert LatticePath.parse(" uudd ") == LatticePath("UUDD")

    def test_path_with_other_steps_is_rejected(self):
        with pytest.raises(MalformedPathError):
            LatticePath.parse("UXD")

    def test_heights_are_cumulative_sums(self):
        np.testing.assert_array_equal(LatticePath("UUDUDD").heights(), [1, 2, 1, 2, 1, 0])

    @pytest.mark.parametrize(
        "steps, expected", [("UD", True), ("UUDD", True), ("DU", False), ("UUD", False), ("", True)]
    )
    def test_dyck_paths_never_go_below_zero(self, steps, expected):
        assert LatticePath(steps).is_dyck() is expected

    def test_dyck_paths_of_semilength_three(self):
        assert [str(path) for path in dyck_paths(3)] == [
            "UDUDUD",
            "UDUUDD",
            "UUDDUD",
            "UUDUDD",
            "UUUDDD",
        ]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_number_of_dyck_paths_is_catalan(self, n):
        paths = list(dyck_paths(n))

        assert len(set(paths)) == catalan(n)
        assert all(path.is_dyck() for path in paths)

    def test_paths_tallied_by_final_descent(self):
        assert paths_by_tail(3) == {1: 2, 2: 2, 3: 1}
        assert count_paths_with_tail(4, 2) == 5

    @pytest.mark.parametrize("n", range(1, 9))
    def test_tally_agrees_with_forest_counts(self, n):
        assert paths_by_tail(n) == special_leaf_table(n).entries


class TestCycleLemma:
    @pytest.mark.parametrize("steps, expected", [("U", 1), ("UUD", 1), ("UUUDU", 3), ("DUU", 1)])
    def test_number_of_dominating_rotations_is_the_excess(self, steps, expected):
        path = LatticePath(steps)

        assert excess(path) == expected
        assert dominating_rotations(path) == expected

    @pytest.mark.parametrize("steps", ["UD", "DDU", ""])
    def test_paths_without_positive_excess_are_rejected(self, steps):
        with pytest.raises(InvalidSizeError):
            dominating_rotations(LatticePath(steps))

    def test_cycle_lemma_for_all_short_paths(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            length = int(rng.integers(1, 16))
            steps = "".join(rng.choice(["U", "D"], size=length))
            path = LatticePath(steps)
            if excess(path) > 0:
                assert dominating_rotations(path) == excess(path)
