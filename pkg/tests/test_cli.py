import json

import pytest

from algraphs.cli import run
from algraphs.core.builders import parse_algebra


def run_json(capsys, *argv: str):
    code = run(list(argv))
    return code, json.loads(capsys.readouterr().out)


# ==============================================================================
# Graphs
# ==============================================================================

def test_build_dot(capsys):
    assert run(["build", "--algebra", "cyclic:3", "--graph", "power"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph power {\n")
    assert '  "0" -- "1";' in out


def test_build_digraph_dot(capsys):
    assert run(["build", "--algebra", "cyclic:3", "--graph", "power", "--digraph"]) == 0
    assert capsys.readouterr().out.startswith("digraph power_digraph {\n")


def test_build_json_edge_list(capsys):
    code, document = run_json(capsys, "build", "--algebra", "elementary:2:2", "--graph", "generating", "--format", "json")
    assert code == 0
    assert document["edges"] == [[1, 2], [1, 3], [2, 3]]
    assert len(document["vertices"]) == 4


def test_build_to_file(tmp_path, capsys):
    out = tmp_path / "c6.dot"
    assert run(["build", "--algebra", "cyclic:6", "--graph", "enhanced", "--variant", "strict", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().startswith("graph enhanced {")


def test_classify(capsys):
    code, records = run_json(capsys, "classify", "--algebra", "cyclic:6", "--graph", "difference", "--classes", "chordal,cograph")
    assert code == 0
    assert [(r["graph_class"], r["verdict"]) for r in records] == [("chordal", True), ("cograph", True)]


def test_classify_unknown_class():
    assert run(["classify", "--algebra", "cyclic:6", "--graph", "power", "--classes", "planar"]) == 2


def test_invariant(capsys):
    code, record = run_json(capsys, "invariant", "--algebra", "cyclic:6", "--graph", "power", "--which", "clique")
    assert code == 0
    assert record == {"algebra": "C6", "graph": "power", "name": "clique", "value": 5, "bound": "exact"}


def test_infinite_diameter(capsys):
    code, record = run_json(capsys, "invariant", "--algebra", "cyclic:6", "--graph", "rank", "--which", "diameter")
    assert code == 0
    assert record["value"] is None
    assert record["bound"] == "infinite"


# ==============================================================================
# Complexes and Algebras
# ==============================================================================

def test_complex(capsys):
    code, document = run_json(capsys, "complex", "--algebra", "cyclic:6")
    assert code == 0
    assert document["facets"] == [[0], [1, 2], [2, 3], [4]]


def test_strong_complex_to_file(tmp_path):
    out = tmp_path / "strong.json"
    assert run(["complex", "--algebra", "cyclic:6", "--kind", "strong", "--out", str(out)]) == 0
    assert all(len(facet) == 1 for facet in json.loads(out.read_text())["facets"])


def test_describe(capsys):
    assert run(["describe", "--algebra", "cyclic:6"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:5] == [
        "algebra: C6 (6 elements)",
        "operations: mul/2, inv/1, one/0",
        "E(A): {0}",
        "rank: 1",
        "subalgebras:",
    ]
    assert "  MO: no" in lines
    assert "  group: yes" in lines
    assert lines[-1] == "endomorphisms: 6"


def test_describe_semigroup_skips_eppo(capsys):
    assert run(["describe", "--algebra", "volkov"]) == 0
    out = capsys.readouterr().out
    assert "  EPPO: n/a" in out
    assert "endomorphisms: 4" in out


def test_export_algebra_round_trips(tmp_path):
    out = tmp_path / "s3.json"
    assert run(["export-algebra", "--algebra", "symmetric:3", "--out", str(out)]) == 0
    rebuilt = parse_algebra(f"file:{out}")
    assert rebuilt.size == 6
    assert rebuilt.name == "S3"


# ==============================================================================
# Verification and Tables
# ==============================================================================

def test_verify_writes_the_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, report = run_json(capsys, "verify", "--suite", "spanning", "--max-order", "4", "--out", str(out))
    assert code == 0
    assert report["suite"] == "spanning"
    assert report["summary"]["failed"] == 0
    assert json.loads(out.read_text()) == report


def test_f_ratio(capsys):
    assert run(["f-ratio", "--max-n", "3"]) == 0
    captured = capsys.readouterr()
    assert captured.out.splitlines()[-1] == "3,2,3,3/2"
    assert captured.err == "max ratio 2 at n=2\n"


def test_f_ratio_to_file_reports_the_maximum(tmp_path, capsys):
    out = tmp_path / "ratios.csv"
    assert run(["f-ratio", "--max-n", "12", "--out", str(out)]) == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "max ratio 5/2 at n=6" in captured.err
    lines = out.read_text().splitlines()
    assert lines[0] == "n,phi,f,ratio"
    assert lines[-1] == "12,4,9,9/4"


# ==============================================================================
# Exit Codes
# ==============================================================================

def test_help_and_usage_errors():
    assert run(["--help"]) == 0
    assert run([]) == 2
    assert run(["build", "--algebra", "cyclic:6"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["describe", "--algebra", "cyclic:x"],
        ["build", "--algebra", "file:/nonexistent/algebra.json", "--graph", "power"],
        ["build", "--algebra", "cyclic:6", "--graph", "enhanced", "--variant", "strict", "--digraph"],
        ["describe", "--algebra", "cyclic:6", "--max-simplex-size", "0"],
    ],
)
def test_input_errors_exit_with_two(argv):
    assert run(argv) == 2


def test_catalog_cap_exits_with_three():
    assert run(["verify", "--suite", "spanning", "--max-order", "65"]) == 3
