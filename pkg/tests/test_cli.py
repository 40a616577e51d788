import json
import subprocess
import sys
from pathlib import Path

import pytest

from equising.cli import main
from equising.invariants import DualTree

CATALOG = str(Path(__file__).resolve().parents[1] / "germs" / "catalog.germ")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce_json(capsys):
    code, out, _ = run(capsys, "reduce", CATALOG, "cusp", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["schema"] == 1
    assert rep["blowups"] == 3
    assert [c["self_int"] for c in rep["components"]] == [-3, -2, -1]
    assert [s["kind"] for s in rep["singularities"]] == ["nondegenerate"] * 3


def test_reduce_curve(capsys):
    code, out, _ = run(capsys, "reduce", CATALOG, "node", "--json")
    assert code == 0 and json.loads(out)["blowups"] == 1


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", CATALOG, "tangent_saddle_node", "--json")
    rep = json.loads(out)
    assert code == 0
    assert (rep["nu0"], rep["nu0_hat"], rep["tau0"]) == (2, 2, 1)
    assert rep["second_type"] is False and rep["identity_holds"] is True


def test_tree_round_trips_through_json(capsys):
    code, out, _ = run(capsys, "tree", CATALOG, "cusp")
    T = DualTree.from_dict(json.loads(out)["tree"])
    assert code == 0 and T.weights() == [(-3, 0), (-2, 0), (-1, 1)]


def test_tree_dot_and_s_tree(capsys):
    _, dot, _ = run(capsys, "tree", CATALOG, "cusp", "--dot")
    assert dot.startswith("digraph cusp {") and "E3 -> E2;" in dot
    _, out, _ = run(capsys, "tree", CATALOG, "cusp", "--s-tree")
    assert DualTree.from_dict(json.loads(out)["tree"]).weights() == [(-3, 0), (-2, 0), (-1, 1)]


@pytest.mark.parametrize(
    "a, b, mode, code",
    [
        ("cusp_curve", "cusp_perturbed", [], 0),
        ("cusp_curve", "a4_curve", [], 1),
        ("node", "node_rotated", ["--curves"], 0),
        ("cusp", "cusp_transformed", [], 0),
        ("cusp", "radial", ["--foliations"], 1),
    ],
)
def test_compare_exit_codes(capsys, a, b, mode, code):
    got, out, _ = run(capsys, "compare", CATALOG, a, CATALOG, b, "--json", *mode)
    assert got == code and json.loads(out)["equisingular"] is (code == 0)


def test_compare_curves_requires_curves(capsys):
    code, _, err = run(capsys, "compare", CATALOG, "cusp", CATALOG, "node", "--curves")
    assert code == 2 and "not a curve" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["reduce", CATALOG, "missing"], 2),
        (["reduce", "/nonexistent.germ", "cusp"], 2),
        (["invariants", CATALOG, "node"], 2),
        (["reduce", CATALOG, "a4", "--max-depth", "2"], 3),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code and err.startswith("error:")


def test_parse_error_reports_position(tmp_path, capsys):
    bad = tmp_path / "bad.germ"
    bad.write_text("[g]\nP = x +\nQ = y\n")
    code, _, err = run(capsys, "reduce", str(bad), "g")
    assert code == 2 and "line 2, column 8" in err


def test_field_policy_exit_code(tmp_path, capsys):
    # tangent cone x^3 - 2 x y^2 + y^3 has the irrational factor t^2 - t - 1
    f = tmp_path / "irr.germ"
    f.write_text("[g]\nP = x^2 - 2*y^2\nQ = y^2\n")
    code, _, err = run(capsys, "reduce", str(f), "g")
    assert code == 4 and "datum" in err


def test_corpus_command(capsys):
    code, out, _ = run(capsys, "corpus", "--seed", "3", "--count", "5", "--order", "12", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["checked"] == 5 and rep["failed"] == 0


def test_output_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "equising", "reduce", CATALOG, "tangent_saddle_node", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["schema"] == 1
