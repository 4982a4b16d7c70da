import json
import subprocess
import sys

import pytest

from galrange.cli import run
from galrange.fields import parse_field_spec
from galrange.serialize import matrix_from_json, matrix_to_json

JORDAN = {"n": 2, "entries": [[["0", "0"], ["1", "0"]], [["0", "0"], ["0", "0"]]]}


@pytest.fixture
def jordan_file(tmp_path):
    p = tmp_path / "jordan.json"
    p.write_text(json.dumps(JORDAN))
    return str(p)


def _ok(argv):
    code, out = run(argv)
    assert code == 0, out
    return out


def test_delta_obstruction():
    out = json.loads(_ok(["delta", "--field", "Q[sqrt=-1]", "--k", "7"]))
    assert out["answer"] == "No" and out["obstruction"] == "p=7"


def test_delta_witness_round_trip():
    L = parse_field_spec("Q[sqrt=5]")
    out = json.loads(_ok(["delta", "--field", "Q[sqrt=5]", "--k", "-1"]))
    assert L.parse(out["witness"]).norm() == -1


def test_delta_sum_of_norms():
    out = json.loads(_ok(["delta", "--field", "Q[sqrt=-1]", "--k", "7", "--n", "2"]))
    L = parse_field_spec("Q[sqrt=-1]")
    assert out["answer"] == "Yes"
    assert sum(L.parse(w).norm() for w in out["witness"]) == 7


def test_numrange_jordan_f9(jordan_file):
    out = json.loads(_ok(["numrange", "--field", "F[3][sqrt=2]", "--matrix", jordan_file, "--mode", "exhaustive"]))
    assert out["variant"] == "FiniteSet"
    assert out["points"] == [["0", "0"], ["0", "1"], ["0", "2"], ["1", "0"], ["2", "0"]]


def test_numrange_classify(jordan_file):
    out = json.loads(_ok(["numrange", "--field", "F[3][sqrt=2]", "--matrix", jordan_file, "--mode", "classify"]))
    assert out["variant"] == "CenterCircleFamily"
    assert len(out["points"]) == 5


def test_numrange_csv_and_approx(jordan_file):
    out = _ok(["numrange", "--field", "Q[sqrt=-1]", "--matrix", jordan_file, "--mode", "sample", "--count", "5", "--csv", "--approx"])
    lines = out.splitlines()
    assert lines[0] == "coeff0,coeff1,approx0,approx1"
    assert len(lines) == 6


def test_circle_csv():
    out = _ok(["circle", "--field", "Q[sqrt=-1]", "--center", "0", "--c", "1", "--witness", "1", "--points", "4", "--csv"])
    assert out.splitlines() == ["coeff0,coeff1", "1,0", "-1,0", "0,-1", "0,1"]


def test_circle_finite_full_set():
    out = json.loads(_ok(["circle", "--field", "F[3][sqrt=2]", "--center", "0", "--c", "1"]))
    assert sorted(map(tuple, out["points"])) == [("0", "1"), ("0", "2"), ("1", "0"), ("2", "0")]


def test_knumrange_modes(tmp_path):
    p = tmp_path / "k.json"
    p.write_text(json.dumps({"n": 2, "entries": [["0", "1"], ["0", "0"]]}))
    out = json.loads(_ok(["knumrange", "--field", "F[3]", "--matrix", str(p)]))
    assert out["points"] == ["0"]
    out = json.loads(_ok(["knumrange", "--field", "F[3]", "--matrix", str(p), "--mode", "structural"]))
    assert out["singleton"] is None
    out = json.loads(_ok(["knumrange", "--field", "F[2]", "--matrix", str(p), "--mode", "char2"]))
    assert out["degree"] == 2
    out = json.loads(_ok(["knumrange", "--field", "Q", "--matrix", str(p), "--mode", "sample", "--count", "6"]))
    assert "12/25" in out["points"]


@pytest.mark.parametrize(
    "argv",
    [
        ["delta", "--field", "Q[sqrt=", "--k", "1"],
        ["delta", "--field", "Q[sqrt=-1]", "--k", "x"],
        ["delta", "--field", "Q[sqrt=-1]", "--k", "1", "--bound", "0"],
        ["numrange", "--field", "F[3][sqrt=2]", "--matrix", "/nonexistent.json"],
        ["frobnicate"],
    ],
)
def test_parse_errors_exit_2(argv):
    assert run(argv)[0] == 2


def test_unsupported_cases_exit_3(tmp_path, jordan_file):
    p = tmp_path / "m.json"
    p.write_text(json.dumps({"n": 2, "entries": [[["0", "0"], ["1", "0"]], [["-2", "0"], ["0", "0"]]]}))
    code, out = run(["numrange", "--field", "Q[sqrt=-1]", "--matrix", str(p), "--mode", "classify"])
    assert code == 3 and "NotInL" in out
    code, out = run(["numrange", "--field", "F[3][sqrt=2]", "--matrix", jordan_file, "--budget", "10"])
    assert code == 3 and "BudgetExceeded" in out


def test_verify_field_all_pass():
    code, out = run(["verify", "--field", "F[5][sqrt=2]"])
    assert code == 0
    assert "FAIL" not in out


def test_determinism(jordan_file):
    argv = ["numrange", "--field", "Q[sqrt=2]", "--matrix", jordan_file, "--mode", "sample", "--count", "30", "--seed", "4"]
    assert run(argv) == run(argv)


def test_matrix_round_trip():
    L = parse_field_spec("Q[sqrt=-3]")
    M = matrix_from_json(L, {"entries": [[["1/2", "-3"], ["0", "7"]], [["2", "0"], ["5/9", "1"]]]})
    assert matrix_from_json(L, json.loads(json.dumps(matrix_to_json(M)))) == M


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "galrange", "delta", "--field", "Q[sqrt=-1]", "--k", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["witness"] == ["1", "1"]
