import json
import subprocess
import sys

import pytest

from coxeterpoly import cli
from coxeterpoly.coxeter import canonical_coxeter
from coxeterpoly.sweep import sweep
from coxeterpoly.verify import run_suite


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_examples(capsys):
    assert run(["poly", "desymmetrize", "[1,0,-2,0,1]"], capsys)[1] == "[-4,0,1]\n"
    assert run(["poly", "cyclo", "4"], capsys)[1] == "[1,0,1]\n"
    assert run(["poly", "symmetrize", "[0,1]"], capsys)[1] == "[1,0,1]\n"
    assert run(["poly", "chebyshev", "3"], capsys)[1] == "[0,-2,0,1]\n"
    code, out, _ = run(["poly", "classify", "[1,1,1,1]"], capsys)
    assert code == 0 and json.loads(out)["rho_is_one"] is True


def test_poly_from_file(tmp_path, capsys):
    f = tmp_path / "p.json"
    f.write_text("[1,0,0,0,1]")
    assert run(["poly", "desymmetrize", "--file", str(f)], capsys)[1] == "[-2,0,1]\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "symmetrize", "[1,x]"],
        ["poly", "symmetrize", "[1.5]"],
        ["poly", "symmetrize", "{}"],
        ["poly", "desymmetrize", "[1,2]"],
        ["poly", "cyclo", "0"],
        ["poly", "cyclo", "four"],
        ["poly", "classify", "[1,2]"],
        ["poly", "symmetrize"],
        ["coxeter", "star", "0", "2"],
        ["coxeter", "q", "3"],
        ["coxeter", "q", "a,b"],
        ["graph", "charpoly", "foo"],
        ["graph", "radius", "dynkin", "E", "9"],
    ],
)
def test_malformed_input(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_bad_tolerance():
    with pytest.raises(SystemExit) as exc:
        cli.main(["coxeter", "star", "2", "3", "--tol", "-1"])
    assert exc.value.code == 2


def test_coxeter_examples(capsys):
    out = json.loads(run(["coxeter", "q", "1", "1", "1"], capsys)[1])
    assert out["poly"] == [0, -5, 0, 1]
    out = json.loads(run(["coxeter", "extended", "3", "3", "3", "3"], capsys)[1])
    assert out["report"]["rho_is_one"] is True
    a = json.loads(run(["coxeter", "extended", "2,3,6"], capsys)[1])
    b = json.loads(run(["coxeter", "canonical", "7", "3", "2"], capsys)[1])
    assert a["poly"] == b["poly"] == list(canonical_coxeter((2, 3, 7)).coeffs)
    assert b["weights"] == [2, 3, 7]


def test_graph_commands(capsys, tmp_path):
    out = json.loads(run(["graph", "charpoly", "kronecker", "2"], capsys)[1])
    assert out["charpoly"] == [-4, 0, 1]
    out = json.loads(run(["graph", "radius", "star", "2", "3", "7"], capsys)[1])
    lo = out["radius_bracket"][0] / out["radius_bracket"][1]
    hi = out["radius_bracket"][2] / out["radius_bracket"][3]
    assert 2 < lo <= hi < 2.1
    f = tmp_path / "g.json"
    f.write_text('{"n": 3, "edges": [[0, 1, 1], [1, 2, 1]]}')
    assert json.loads(run(["graph", "charpoly", "--file", str(f)], capsys)[1])["charpoly"] == [0, -2, 0, 1]


def test_verify_matches_library(capsys):
    code, out, _ = run(["verify", "acampo", "--max-vertices", "7"], capsys)
    assert code == 0
    assert json.loads(out) == run_suite("acampo", max_vertices=7).to_dict()
    code, out, err = run(["verify", "recursion", "--max-sum", "8", "--form", "three-term"], capsys)
    assert code == 1 and "counterexample" in err
    assert json.loads(out) == run_suite("recursion", max_sum=8, max_t=6, max_weight=8, form="three-term").to_dict()


def test_sweep_output(capsys, tmp_path):
    code, out, _ = run(["sweep", "--max-sum", "8"], capsys)
    assert code == 0
    assert out.strip() == sweep(8).to_json()
    assert run(["sweep", "--max-sum", "8"], capsys)[1] == out
    target = tmp_path / "s.csv"
    run(["sweep", "--max-sum", "8", "--format", "csv", "--out", str(target)], capsys)
    assert target.read_text() == sweep(8).to_csv()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coxeterpoly", "poly", "cyclo", "6"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "[1,-1,1]\n"
