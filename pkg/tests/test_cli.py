import json
import subprocess
import sys
from pathlib import Path

import pytest

from quasidim import QuasiPolynomial
from quasidim.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dimset_text(capsys):
    code, out, _ = run(capsys, "dimset", "--weights", "2,1", "--points", "2,1;0,3")
    assert code == 0
    assert out.splitlines()[0] == "(1/2) t + [5, 9/2]_t (valid for t >= 7)"
    assert "antichain: (0, 3); (2, 1)" in out


def test_ehrhart_simplex(capsys):
    code, out, _ = run(capsys, "ehrhart-simplex", "--weights", "1")
    assert (code, out) == (0, "t + 1\n")


def test_ehrhart_polytope(capsys):
    code, out, _ = run(capsys, "ehrhart-polytope", "--file", DATA / "trapezoid.json")
    assert code == 0
    assert "L(P, t) = (35/8) t^2 + [17/4, 4]_t t + [1, 5/8]_t" in out
    assert "D(P) = 2" in out
    assert "(5/2, 1/2)" in out
    assert "volume = 35/8" in out


@pytest.mark.parametrize("name", ["example4.json", "example4_leaders.json"])
def test_system(capsys, name):
    code, out, _ = run(capsys, "system", "--file", DATA / name)
    assert code == 0
    assert "Phi: (1/2) t + [5, 9/2]_t (valid for t >= 7)" in out
    assert "sigma-trdeg: 0" in out


def test_system_with_tails(capsys):
    code, out, _ = run(capsys, "system", "--file", DATA / "tails.json", "--json")
    data = json.loads(out)
    assert code == 0
    assert sorted(data["leaders"][0]["points"]) == [[0, 3], [2, 0]]
    assert data["phi"]["coefficients"] == [["6"]]


def test_system_free(capsys):
    code, out, _ = run(capsys, "system", "--file", DATA / "free2.json")
    assert code == 0 and "sigma-trdeg: 2" in out


@pytest.mark.parametrize(
    "argv, key",
    [
        (["dimset", "--weights", "2,1", "--points", "2,1;0,3"], "chi"),
        (["ehrhart-simplex", "--weights", "2,1"], None),
        (["ehrhart-polytope", "--file", str(DATA / "trapezoid.json")], "ehrhart"),
        (["system", "--file", str(DATA / "example4.json")], "phi"),
    ],
)
def test_json_and_text_agree(capsys, argv, key):
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, *argv, "--json")
    data = json.loads(js)
    assert data["pretty"] == text.rstrip("\n")
    qp = QuasiPolynomial.from_json(data[key] if key else data)
    assert qp.format() in text


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "simplex", "--weights", "2,1", "--r", "2"], "4"),
        (["count", "polytope", "--file", str(DATA / "trapezoid.json"), "--r", "4"], "88"),
        (["count", "va", "--weights", "2,1", "--points", "2,1;0,3", "--r", "7"], "8"),
        (["count", "va", "--weights", "2,1", "--points", "2,1;0,3", "--r", "7", "--method", "recursive"], "8"),
        (["count", "va", "--weights", "2,1", "--points", "2,1;0,3", "--r", "2", "--method", "formula"], "4"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out.strip()) == (0, expected)


@pytest.mark.parametrize(
    "argv, code",
    [
        (["dimset", "--weights", "2,x"], 1),
        (["dimset", "--weights", "2,0"], 1),
        (["dimset", "--weights", "2,1", "--points", "1,2,3"], 1),
        (["ehrhart-polytope", "--file", str(DATA / "unbounded.json")], 1),
        (["ehrhart-polytope", "--file", str(DATA / "broken.json")], 1),
        (["ehrhart-polytope", "--file", str(DATA / "missing.json")], 1),
        (["bogus"], 1),
        (["dimset"], 1),
        (["dimset", "--weights", "1", "--cap", "0"], 1),
        (["count", "simplex", "--weights", "1,1", "--r", "100000", "--cap", "1000"], 2),
        (["count", "polytope", "--file", str(DATA / "trapezoid.json"), "--r", "1000", "--cap", "50"], 2),
        (["dimset", "--weights", "1,1", "--points", ";".join(f"{i},{30 - i}" for i in range(21))], 2),
        (["ehrhart-polytope", "--file", str(DATA / "trapezoid.json"), "--cap", "5"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code
    assert capsys.readouterr().err


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "quasidim.cli", "dimset", "--weights", "2,1", "--points", "2,1;0,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("(1/2) t + [5, 9/2]_t")
