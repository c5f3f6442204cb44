import csv
import io
import json

import pytest

from lcslab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "lcs", "table", "--n", "2", "--kmax", "4", "--degmax", "6", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "deg_x", "deg_y", "dim"]
    assert ["2", "1", "1", "1"] in rows[1:]


def test_table_is_deterministic(capsys):
    args = ("lcs", "table", "--n", "2", "--kmax", "3", "--degmax", "5")
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_dims(capsys):
    code, out, _ = run(capsys, "lcs", "dims", "--n", "2", "--k", "3", "--deg", "5,2")
    assert code == 0
    assert json.loads(out)["dim_B"] == 2


def test_nilpotent_dims(capsys):
    _, out, _ = run(capsys, "lcs", "dims", "--n", "2", "--k", "2", "--deg", "2,1", "--nilpotent", "2,2")
    assert json.loads(out)["dim_B"] == 0


def test_b2_basis(capsys):
    _, out, _ = run(capsys, "lcs", "b2-basis", "--n", "4", "--deg", "1,1,1,1")
    data = json.loads(out)
    assert len(data["basis"]) == 4 and data["rank_mod_L3"] == 4


def test_forms(capsys):
    _, out, _ = run(capsys, "forms", "closed-dim", "--n", "4", "--p", "2", "--deg", "1,1,1,1")
    assert json.loads(out)["closed_dim"] == 3
    _, out, _ = run(capsys, "forms", "epsilon", "--n", "3")
    assert json.loads(out)["matrix"] == [[1, 1], [1, -1]]


def test_forms_ra_sphere(capsys):
    code, out, _ = run(capsys, "forms", "rA", "--relations", "x1^2+x2^2+x3^2-1", "--cutoff", "6")
    assert code == 0
    rows = json.loads(out)["rows"]
    h2 = [r["cohomology"] for r in rows if r["p"] == 2]
    assert h2 == [0, 0, 0, 1, 1, 1]


def test_fs_phi(capsys):
    poly = json.dumps([{"word": [1, 1, 2], "coeff": "1"}])
    _, out, _ = run(capsys, "fs", "phi", "--n", "2", "--poly", poly)
    assert json.loads(out)["pretty"] == "x1^2*x2 + 2*x1*dx1*dx2"


def test_fs_b2_flags_upper_bound(capsys):
    _, out, _ = run(capsys, "fs", "b2", "--relations", "x*y*x-1", "--cutoff", "6")
    last = json.loads(out)["rows"][-1]
    assert last["upper_bound"] is True and last["b2"] == 1


def test_fs_check(capsys):
    code, out, _ = run(capsys, "fs", "check", "tripcom", "--n", "2", "--degmax", "4")
    assert code == 0 and json.loads(out)["all_ok"]


def test_char(capsys):
    _, out, _ = run(capsys, "char", "decompose", "--k", "4", "--trunc", "10")
    data = json.loads(out)
    assert data["remainder_zero"]
    assert data["rows"] == [{"diagram": [3, 1], "mult": 1}, {"diagram": [3, 2], "mult": 1}]
    _, out, _ = run(capsys, "char", "F", "--p", "3", "--k", "2", "--trunc", "6")
    assert {"a": 2, "b": 3, "dim": 1} in json.loads(out)["rows"]


def test_lie(capsys):
    _, out, _ = run(capsys, "lie", "b2-invariant", "--type", "A3")
    assert json.loads(out) == {"type": "A3", "nu": 152, "weyl": 24, "dim_b2_invariant": 32}
    _, out, _ = run(capsys, "lie", "b2-invariant", "--type", "A4")
    data = json.loads(out)
    assert data["weyl"] == 120 and "extrapolation" in data["note"]
    _, out, _ = run(capsys, "lie", "superelliptic", "--m", "3", "--p", "2,2,3")
    assert json.loads(out)["b2"] == 7
    _, out, _ = run(capsys, "lie", "chi", "--d", "3", "--n", "4")
    assert json.loads(out)["chi"] == -15


def test_computation_error_exits_one(capsys):
    code, _, err = run(capsys, "lcs", "dims", "--n", "2", "--k", "2", "--deg", "30,1")
    assert code == 1 and "ceiling" in err


def test_ceiling_env(capsys, monkeypatch):
    monkeypatch.setenv("LCSLAB_DEGREE_CEILING", "4")
    code, _, _ = run(capsys, "lcs", "dims", "--n", "2", "--k", "2", "--deg", "3,2")
    assert code == 1


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lcs", "dims", "--n", "2"])
    assert exc.value.code == 2


def test_verify_subset(capsys):
    code, out, err = run(capsys, "verify", "--suite", "paper", "--degmax", "5")
    assert code == 0
    assert json.loads(out)["all_passed"]
    assert "[PASS]" in err
