import io

import pytest
from yaml import safe_dump

from catalanc.cli import main

OMEGA = "-2^0 1^0 -2^1 3^0 -3^0 1^1 -1^0 3^1 -3^1 2^0 -1^1 2^1"
FOREST_G = "-2(3,-3(2)),1(-1)"


def _run(capsys, *args):
    status = main(list(args))
    captured = capsys.readouterr()
    return status, captured.out.splitlines(), captured.err


@pytest.fixture
def stdin(monkeypatch):
    def _feed(text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))

    return _feed


@pytest.fixture
def create_plan_file(tmp_path):
    plan = {"suites": [{"name": "counts", "n_max": 4}, {"name": "oracle", "n_max": 1}], "seed": 3}

    with open(tmp_path / "plan.yml", "wt") as stream:
        safe_dump(plan, stream)


class TestCount:
    def test_number_of_regions(self, capsys):
        assert _run(capsys, "count", "--n", "3") == (0, ["960"], "")

    def test_number_of_regions_via_sum(self, capsys):
        assert _run(capsys, "count", "--n", "4", "--via-sum")[:2] == (0, ["26880"])

    def test_forests_by_special_leaves(self, capsys):
        status, lines, _ = _run(capsys, "count", "--n", "3", "--by-special")

        assert status == 0
        assert lines == ["s=1 count=2", "s=2 count=2", "s=3 count=1"]

    def test_table_of_counts_and_shuffle_sizes(self, capsys):
        status, lines, _ = _run(capsys, "count", "--n", "2", "--table")

        assert status == 0
        assert lines == ["s=1 C=1 D=2 product=2", "s=2 C=1 D=4 product=4"]

    def test_options_are_mutually_exclusive(self, capsys):
        assert _run(capsys, "count", "--n", "2", "--table", "--via-sum")[0] == 2


class TestEnumerate:
    def test_annotated_sketches(self, capsys):
        assert _run(capsys, "enumerate", "sketches", "--n", "1")[:2] == (
            0,
            ["-1^0 -1^1", "1^0 1^1"],
        )

    def test_symmetric_sketches_follow_shuffles_of_annotated_ones(self, capsys):
        assert _run(capsys, "enumerate", "sketches", "--n", "1", "--symmetric")[:2] == (
            0,
            [
                "-1^0 1^0 -1^1 1^1",
                "-1^0 -1^1 1^0 1^1",
                "1^0 -1^0 1^1 -1^1",
                "1^0 1^1 -1^0 -1^1",
            ],
        )

    def test_forest_shapes(self, capsys):
        assert _run(capsys, "enumerate", "forests", "--n", "2")[:2] == (0, ["•(•)", "•,•"])

    def test_labeled_forests(self, capsys):
        assert _run(capsys, "enumerate", "forests", "--n", "1", "--labeled")[:2] == (
            0,
            ["-1", "1"],
        )

    def test_symmetric_forests(self, capsys):
        assert _run(capsys, "enumerate", "forests", "--n", "1", "--symmetric")[:2] == (
            0,
            ["-1,1", "-1(1)", "1,-1", "1(-1)"],
        )

    def test_number_of_symmetric_sketches(self, capsys):
        status, lines, _ = _run(capsys, "enumerate", "sketches", "--n", "2", "--symmetric")

        assert status == 0
        assert len(set(lines)) == len(lines) == 48

    def test_sizes_beyond_desk_scale_are_refused(self, capsys):
        status, lines, err = _run(capsys, "enumerate", "sketches", "--n", "5", "--symmetric")

        assert status == 1
        assert lines == []
        assert "use --force" in err

    def test_output_is_deterministic(self, capsys):
        first = _run(capsys, "enumerate", "forests", "--n", "3", "--labeled")
        second = _run(capsys, "enumerate", "forests", "--n", "3", "--labeled")

        assert first == second


class TestMap:
    def test_sketch_to_forest(self, capsys):
        assert _run(capsys, "map", "sketch-to-forest", OMEGA) == (0, [FOREST_G], "")

    def test_forest_starting_with_negative_label_is_taken_as_object(self, capsys):
        assert _run(capsys, "map", "forest-to-sketch", FOREST_G) == (0, [OMEGA], "")

    def test_point_with_negative_first_coordinate_is_taken_as_object(self, capsys):
        assert _run(capsys, "map", "point-to-sketch", "-3/5,7/5,-1/5")[:2] == (0, [OMEGA])

    def test_only_one_object_is_accepted(self, capsys):
        assert _run(capsys, "map", "forest-to-sketch", "1(-1)", "-1(1)")[0] == 2

    def test_forest_to_sketch_reads_standard_input(self, capsys, stdin):
        stdin(FOREST_G + "\n")

        assert _run(capsys, "map", "forest-to-sketch")[:2] == (0, [OMEGA])

    def test_point_to_sketch(self, capsys):
        assert _run(capsys, "map", "point-to-sketch", "--coords=-3/5,7/5,-1/5")[:2] == (
            0,
            [OMEGA],
        )

    def test_point_to_sketch_reads_standard_input(self, capsys, stdin):
        stdin("1/6")

        assert _run(capsys, "map", "point-to-sketch", "--n", "1")[:2] == (
            0,
            ["-1^0 1^0 -1^1 1^1"],
        )

    def test_sketch_to_point(self, capsys):
        assert _run(capsys, "map", "sketch-to-point", "-1^0 1^0 -1^1 1^1")[:2] == (0, ["1/6"])

    def test_point_on_hyperplane_is_refused(self, capsys):
        status, lines, err = _run(capsys, "map", "point-to-sketch", "--n", "1", "--coords", "1/2")

        assert status == 1
        assert lines == []
        assert "2x1 = 1" in err

    @pytest.mark.parametrize(
        "args",
        [
            ["--n", "2", "--coords", "1/6"],
            ["--coords", "0.25.1"],
            ["--coords", "x"],
        ],
    )
    def test_malformed_points_are_refused(self, capsys, args):
        status, _, err = _run(capsys, "map", "point-to-sketch", *args)

        assert status == 1
        assert err.startswith("catalanc: error:")

    def test_invalid_sketch_names_violated_condition(self, capsys):
        status, _, err = _run(capsys, "map", "sketch-to-forest", "-1^0 1^0 1^1 -1^1")

        assert status == 1
        assert "violation iii witness=-1^0,1^0" in err

    def test_invalid_forest_names_violated_condition(self, capsys, stdin):
        stdin("1,2,-2(-1)")

        status, _, err = _run(capsys, "map", "forest-to-sketch")

        assert status == 1
        assert "violation iii witness=2,1" in err

    def test_malformed_word_is_refused(self, capsys):
        assert _run(capsys, "map", "sketch-to-forest", "1^0 1^2")[0] == 1


class TestShuffle:
    def test_shuffles_of_sketch(self, capsys):
        assert _run(capsys, "shuffle", "sketch", "1^0 1^1")[:2] == (
            0,
            ["1^0 -1^0 1^1 -1^1", "1^0 1^1 -1^0 -1^1"],
        )

    def test_shuffles_of_forest(self, capsys, stdin):
        stdin("-2(3),1")

        status, lines, _ = _run(capsys, "shuffle", "forest")

        assert status == 0
        assert sorted(lines) == sorted(
            [
                "-2(3,-3(2),-1),1",
                "-2(3,-3(2)),1(-1)",
                "-2(3(-1)),1(-3(2))",
                "-2(3(-3(2),-1)),1",
            ]
        )

    def test_forest_starting_with_negative_label_is_taken_as_object(self, capsys):
        status, lines, _ = _run(capsys, "shuffle", "forest", "-2(3),1")

        assert status == 0
        assert len(lines) == 4
        assert FOREST_G in lines

    def test_annotated_sketch_is_required(self, capsys):
        assert _run(capsys, "shuffle", "sketch", "1^1 1^0")[0] == 1


class TestVerify:
    def test_single_suite(self, capsys):
        status, lines, _ = _run(capsys, "verify", "--suite", "counts", "--n-max", "5")

        assert status == 0
        assert len(lines) == 7
        assert all(line.startswith("PASS counts/") for line in lines)

    @pytest.mark.usefixtures("create_plan_file")
    def test_plan_read_from_yaml_file(self, capsys, tmp_path):
        status, lines, _ = _run(capsys, "verify", "--plan", str(tmp_path / "plan.yml"))

        assert status == 0
        assert len(lines) == 10
        assert lines[-1].startswith("PASS oracle/forest-filter cases=")

    def test_failed_check_gives_exit_status_one(self, capsys, mocker):
        mocker.patch("catalanc.verify.suites.catalan", return_value=0)

        status, lines, _ = _run(capsys, "verify", "--suite", "counts", "--n-max", "2")

        assert status == 1
        assert "FAIL counts/catalan-sum cases=2 first failure: 1" in lines

    def test_bounds_beyond_desk_scale_are_refused(self, capsys):
        status, lines, err = _run(capsys, "verify", "--suite", "oracle", "--n-max", "10")

        assert status == 1
        assert "use --force" in err


class TestUsage:
    @pytest.mark.parametrize(
        "args",
        [
            [],
            ["count"],
            ["regions"],
            ["enumerate", "trees", "--n", "2"],
            ["verify", "--suite", "geometry"],
            ["count", "--n", "0"],
            ["count", "--n", "-2", "--table"],
            ["count", "--n", "two"],
            ["enumerate", "sketches", "--n", "0"],
            ["enumerate", "sketches", "--n", "2", "--labeled"],
            ["enumerate", "forests", "--n", "2", "--symmetric", "--labeled"],
            ["map", "sketch-to-point", "--n", "-1", "1^0 1^1"],
            ["verify", "--suite", "counts", "--n-max", "0"],
            ["shuffle", "forest", "1", "--labeled"],
        ],
    )
    def test_usage_errors_give_exit_status_two(self, capsys, args):
        assert _run(capsys, *args)[0] == 2

    def test_help_exits_cleanly(self, capsys):
        status, lines, _ = _run(capsys, "--help")

        assert status == 0
        assert any("catalanc" in line for line in lines)

    def test_non_positive_size_is_reported_without_output(self, capsys):
        status, lines, err = _run(capsys, "enumerate", "sketches", "--n", "0")

        assert status == 2
        assert lines == []
        assert "has to be positive" in err

    def test_verbose_logs_enumeration_progress(self, capsys, caplog):
        status, lines, _ = _run(capsys, "--verbose", "enumerate", "forests", "--n", "2")

        assert status == 0
        assert lines == ["•(•)", "•,•"]
        assert "Enumerating unlabeled forests with 2 nodes" in caplog.text
