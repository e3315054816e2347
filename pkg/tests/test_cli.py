import json
import subprocess
import sys

import pytest

from multihopf import words
from multihopf.cli import main
from multihopf.poly import TruncPoly
from multihopf.series import BasisElement


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_expand_g21(capsys):
    data = run_json(capsys, "expand", "--basis", "s", "--of", "g", "--label", "[2,1]")
    assert data == {"basis": "s", "cap": None, "coeffs": {"[2]": 1, "[2,1]": 1}}
    assert BasisElement.from_json(data).coeffs == {(2,): 1, (2, 1): 1}


def test_expand_monomial_basis(capsys):
    data = run_json(capsys, "expand", "--basis", "m", "--of", "g", "--label", "[2,1]")
    assert data["coeffs"] == {"[1,1]": 1, "[2]": 1, "[1,1,1]": 2, "[2,1]": 1}


def test_expand_capped_family_reports_cap(capsys):
    data = run_json(capsys, "expand", "--of", "G", "--label", "[1]", "--cap", "3")
    assert data["cap"] == 3
    assert data["coeffs"] == {"[1]": 1, "[1,1]": -1, "[1,1,1]": 1}


def test_expand_ltilde(capsys):
    data = run_json(capsys, "expand", "--basis", "L", "--of", "L̃", "--label", "(2,1)", "--cap", "5")
    assert data["coeffs"]["[2,1,1,1]"] == 3 and data["cap"] == 5


def test_expand_rtilde(capsys):
    data = run_json(capsys, "expand", "--basis", "MMR", "--of", "Rt", "--label", "(3,1)")
    assert set(data["terms"]) == {"[(1,4),2,3]", "[1,(2,4),3]", "[1,2,4,3]", "[1,4,2,3]", "[4,1,2,3]"}
    data = run_json(capsys, "expand", "--basis", "F", "--of", "Rt", "--label", "(1,1)")
    assert data["coeffs"] == {"F1": -1, "F1*F1": 1, "F2": -1}


def test_mjh(capsys):
    assert run_json(capsys, "mjh", "--shape", "[3,1]", "--length", "4") == ["2134", "2314", "2341"]


def test_products(capsys):
    data = run_json(capsys, "product", "--basis", "shuffle", "--left", "ab", "--right", "a", "--cap", "4")
    assert data == {"cap": 4, "terms": {"aab": 2, "aba": 1, "aaab": 2, "aaba": 2, "abab": 1}}
    data = run_json(capsys, "product", "--basis", "MMR", "--left", "[1]", "--right", "[1]")
    assert set(data["terms"]) == {"[1]", "[1,2]", "[2,1]"}
    data = run_json(capsys, "product", "--basis", "mMR", "--left", "1", "--right", "1", "--cap", "3")
    assert words.element_from_json(data) == words.mmr_product((1,), (1,), 3)
    data = run_json(capsys, "product", "--basis", "Rt", "--left", "(3,2,5,1)", "--right", "(4,2)")
    assert set(data["coeffs"]) == {"[3,2,5,5,2]", "[3,2,5,1,4,2]", "[3,2,5,4,2]"}
    data = run_json(capsys, "product", "--basis", "g", "--left", "[2]", "--right", "[2]")
    assert data["coeffs"] == {"[3]": -1, "[4]": 1, "[3,2]/[1]": 1}


def test_coproducts(capsys):
    data = run_json(capsys, "coproduct", "--basis", "cuut", "--label", "cut")
    assert len(data["terms"]) == 7
    data = run_json(capsys, "coproduct", "--basis", "MMR", "--label", "[(1,3),2]")
    assert words.element_from_json(data, "big") == words.mmr_big_coproduct(words.parse_big("[(1,3),2]"))
    data = run_json(capsys, "coproduct", "--basis", "Lt", "--label", "(1)")
    assert data["coeffs"] == {"[]|[1]": 1, "[1]|[]": 1, "[1]|[1]": 1}


def test_pair(capsys):
    data = run_json(capsys, "pair", "--left-of", "g", "--left", "[2,1]", "--right-of", "G",
                    "--right", "[2,1]", "--cap", "6")
    assert data == {"pairing": 1, "cap": 6}
    data = run_json(capsys, "pair", "--left-of", "g", "--left", "[2,1]", "--right-of", "G",
                    "--right", "[2]", "--cap", "6")
    assert data["pairing"] == 0


def test_enumerate(capsys):
    data = run_json(capsys, "enumerate", "--kind", "svt", "--shape", "[1]", "--max-letters", "2",
                    "--max-entry", "3")
    assert [c["cells"][0]["v"] for c in data] == [[1], [1, 2], [1, 3], [2], [2, 3], [3]]
    data = run_json(capsys, "enumerate", "--kind", "rpp", "--shape", "[2,2]", "--max-entry", "3",
                    "--limit", "4")
    assert len(data) == 4


def test_oracle(capsys):
    data = run_json(capsys, "oracle", "--series", "g", "--shape", "[2,1]", "--degree", "3", "--compare")
    assert data["matches_tableaux"] is True
    poly = TruncPoly.from_json(data["poly"])
    assert poly.coefficient((1, 1, 1)) == 2


def test_antipode_factor_order(capsys):
    assert run_json(capsys, "antipode", "--label", "[1]") == {"cap": None, "terms": {"[1]": -1}}
    assert run_json(capsys, "factor", "--basis", "mMR", "--label", "121343") == ["121", "121"]
    assert run_json(capsys, "factor", "--basis", "MMR", "--label", "[1,2]") == ["[1]", "[1]"]
    assert run_json(capsys, "order", "--left", "[1,2]", "--right", "[2,1]")["leq"] is True


def test_order_undecided_is_domain_error(capsys):
    code, out, err = run(capsys, "order", "--left", "[2,1]", "--right", "[1,2]", "--bound", "3")
    assert code == 1
    assert json.loads(out)["leq"] is None


def test_pump(capsys):
    data = run_json(capsys, "pump", "--basis", "L", "--label", "(2,1)", "--times", "2")
    assert data["coeffs"] == {"[1,1,2,1]": 1, "[1,2,1,1]": 2, "[2,1,1,1]": 3}


def test_verify_small(capsys):
    data = run_json(capsys, "verify", "--suite", "hopf", "--size", "small")
    assert data["passed"] is True
    assert {c["module"] for c in data["checks"]} == {"hopf"}
    assert all(c["passed"] for c in data["checks"])


def test_usage_errors(capsys):
    code, _, err = run(capsys, "expand", "--of", "g")
    assert code == 2 and "--label" in err
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, err = run(capsys, "pump", "--basis", "s", "--label", "(1)", "--times", "1")
    assert code == 2


def test_domain_errors(capsys):
    code, _, err = run(capsys, "expand", "--of", "g", "--label", "[1,2]")
    assert code == 1 and err.startswith("error:")
    code, _, _ = run(capsys, "pump", "--basis", "L", "--label", "(1,1)", "--times", "-1")
    assert code == 1


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert main(["mjh", "--shape", "[3,1]", "--length", "4", "--output", str(target)]) == 0
    assert json.loads(target.read_text()) == ["2134", "2314", "2341"]


def test_deterministic_output(capsys):
    first = run(capsys, "product", "--basis", "Lt", "--left", "(2,1)", "--right", "(1)", "--cap", "5")
    second = run(capsys, "product", "--basis", "Lt", "--left", "(2,1)", "--right", "(1)", "--cap", "5")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "multihopf", "mjh", "--shape", "[3,1]", "--length", "5"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout) == ["21314", "21341", "23134", "23141", "23414"]
