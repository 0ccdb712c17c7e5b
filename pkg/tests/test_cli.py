"""End-to-end tests of the command-line interface."""

import csv
import io
import json

import pytest

from compcount import cli, compositions, graphcomp


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# --- plain output -------------------------------------------------------------

def test_count_distinct_total():
    code, out, _ = run_cli(["count", "distinct", "--n", "6"])
    assert code == 0
    assert out == "11\n"


def test_graph_family_ladder():
    code, out, _ = run_cli(["graph", "family", "--name", "ladder", "--n", "2"])
    assert code == 0
    assert out == "12\n"


def test_triangle_single_row_plain():
    code, out, _ = run_cli(["triangle", "--kind", "pi", "--rows", "1", "--format", "plain"])
    assert code == 0
    assert out == "1\n"


def test_triangle_rows_plain():
    code, out, _ = run_cli(["triangle", "--kind", "cdistinct", "--rows", "4"])
    assert code == 0
    assert out == "1\n0 1\n0 1 0\n0 1 2 0\n"


def test_count_restricted_with_bounds():
    code, out, _ = run_cli(
        ["count", "restricted", "--n", "9", "--k", "3", "--min", "1", "--max", "4"]
    )
    assert code == 0
    expected = compositions.count_restricted(9, 3, compositions.PartBounds(1, 4))
    assert out == f"{expected}\n"


def test_count_leading_modes():
    code, out, _ = run_cli(["count", "leading", "--mode", "strict", "--n", "5", "--k", "3"])
    assert (code, out) == (0, "2\n")
    code, out, _ = run_cli(["count", "leading", "--mode", "weak", "--n", "3"])
    assert (code, out) == (0, "3\n")


def test_count_avoid_and_contain():
    code, out, _ = run_cli(["count", "avoid", "--k", "2", "--n", "4"])
    assert (code, out) == (0, "4\n")
    code, out, _ = run_cli(["count", "contain", "--k", "2", "--n", "3"])
    assert (code, out) == (0, "2\n")


# --- machine formats ------------------------------------------------------------

def test_json_round_trip():
    code, out, _ = run_cli(["count", "restricted", "--n", "8", "--k", "6", "--format", "json"])
    assert code == 0
    record = json.loads(out)
    assert record["command"] == "count restricted"
    assert record["parameters"]["n"] == 8
    assert record["values"] == [["0", "1287"]]
    assert int(record["values"][0][1]) == compositions.count_restricted(8, 6)


def test_json_series_round_trip():
    code, out, _ = run_cli(["series", "--family", "fweak", "--k", "2", "--order", "12", "--format", "json"])
    assert code == 0
    record = json.loads(out)
    for index, value in record["values"]:
        assert int(value) == compositions.count_leading_weak(int(index), 2)


def test_csv_round_trip():
    code, out, _ = run_cli(["series", "--family", "avoid", "--k", "3", "--order", "10", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "value"]
    for index, value in rows[1:]:
        assert int(value) == compositions.count_avoiding(int(index), 3)


def test_csv_triangle_round_trip():
    code, out, _ = run_cli(["triangle", "--kind", "pi", "--rows", "8", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["index", "value"]
    for index, value in rows[1:]:
        n, k = map(int, index.split(":"))
        assert int(value) == compositions.count_partitions_distinct(n, k)


def test_big_counts_survive_json():
    code, out, _ = run_cli(["graph", "family", "--name", "path", "--n", "400", "--format", "json"])
    assert code == 0
    record = json.loads(out)
    assert int(record["values"][0][1]) == 1 << 399


def test_output_is_deterministic():
    argv = ["verify", "--suite", "graphs", "--max-n", "5", "--seed", "17"]
    first = run_cli(argv)
    second = run_cli(argv)
    assert first == second


# --- graph files ------------------------------------------------------------------

def test_graph_count_from_file(tmp_path):
    target = tmp_path / "ladder3.txt"
    target.write_text(graphcomp.format_edge_list(graphcomp.build_family("ladder", 3)))
    code, out, _ = run_cli(["graph", "count", "--file", str(target)])
    assert (code, out) == (0, "74\n")


def test_graph_count_missing_file():
    code, _, err = run_cli(["graph", "count", "--file", "/nonexistent/graph.txt"])
    assert code == 1
    assert err


def test_graph_count_parse_error(tmp_path):
    target = tmp_path / "bad.txt"
    target.write_text("2\n0 0\n")
    code, _, err = run_cli(["graph", "count", "--file", str(target)])
    assert code == 1
    assert "line 2" in err


def test_emit_graph_round_trips(tmp_path):
    code, out, _ = run_cli(["graph", "family", "--name", "cycle", "--n", "5", "--emit-graph"])
    assert code == 0
    assert graphcomp.parse_edge_list(out) == graphcomp.build_family("cycle", 5)
    target = tmp_path / "cycle5.txt"
    target.write_text(out)
    code, out, _ = run_cli(["graph", "count", "--file", str(target)])
    assert (code, out) == (0, "27\n")


def test_emit_graph_requires_plain():
    code, _, err = run_cli(
        ["graph", "family", "--name", "cycle", "--n", "5", "--emit-graph", "--format", "json"]
    )
    assert code == 2
    assert "plain" in err


# --- exit codes ---------------------------------------------------------------------

def test_domain_error_exit_code():
    code, _, err = run_cli(["graph", "family", "--name", "cycle", "--n", "2"])
    assert code == 1
    assert "cycle" in err


def test_usage_error_exit_code():
    code, _, _ = run_cli(["count", "restricted", "--n", "3", "--badflag"])
    assert code == 2
    code, _, _ = run_cli(["series", "--family", "fstrict", "--order", "5"])
    assert code == 2
    code, _, _ = run_cli(["series", "--family", "distinct-total", "--k", "2", "--order", "5"])
    assert code == 2


def test_resource_error_exit_code(tmp_path):
    big = graphcomp.build_family("complete", 26)
    target = tmp_path / "k26.txt"
    target.write_text(graphcomp.format_edge_list(big))
    code, _, err = run_cli(["graph", "count", "--file", str(target)])
    assert code == 3
    assert "cap" in err


def test_cap_flag_lowers_the_guard(tmp_path):
    target = tmp_path / "k10.txt"
    target.write_text(graphcomp.format_edge_list(graphcomp.build_family("complete", 10)))
    code, out, _ = run_cli(["graph", "count", "--file", str(target)])
    assert (code, out) == (0, "115975\n")
    code, _, _ = run_cli(["graph", "count", "--file", str(target), "--cap", "8"])
    assert code == 3


def test_help_exits_zero():
    code, _, _ = run_cli(["--help"])
    assert code == 0


# --- verification -------------------------------------------------------------------

def test_verify_passes_on_correct_build():
    code, out, _ = run_cli(["verify", "--suite", "all", "--max-n", "10", "--seed", "1"])
    assert code == 0
    assert "FAIL" not in out
    assert out.startswith("# verify suite=all max-n=10 seed=1\n")


def test_verify_json_reports_checks():
    code, out, _ = run_cli(["verify", "--suite", "series", "--max-n", "4", "--format", "json"])
    assert code == 0
    record = json.loads(out)
    assert record["failed"] == 0
    assert record["passed"] == len(record["checks"])


def test_verify_detects_injected_off_by_one(monkeypatch):
    true_count = compositions.count_partitions_distinct
    monkeypatch.setattr(
        compositions, "count_partitions_distinct", lambda n, k: true_count(n, k) + 1
    )
    code, out, _ = run_cli(["verify", "--suite", "compositions", "--max-n", "6"])
    assert code == 1
    assert "FAIL" in out


def test_verify_detects_injected_graph_error(monkeypatch):
    true_count = graphcomp.family_count

    def skewed(family, n):
        value = true_count(family, n)
        return value + 1 if family == "cycle" else value

    monkeypatch.setattr(graphcomp, "family_count", skewed)
    code, out, _ = run_cli(["verify", "--suite", "graphs", "--max-n", "6"])
    assert code == 1
    assert "FAIL" in out
