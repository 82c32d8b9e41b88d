import json

import pytest

from fubini import essential, linalg, serialize
from fubini.cli import main
from fubini.patterns import pattern_matrix
from fubini.words import parse_word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", "3", "2")
    assert code == 0 and out == "1 + 3q + 2q^2\n"


def test_compare_medium(capsys):
    code, out, _ = run(capsys, "compare", "31422", "31424", "--order", "medium")
    assert code == 0 and out == "31422 < 31424\n"
    code, out, _ = run(capsys, "compare", "31424", "31422", "--order", "medium")
    assert out == "31424 > 31422\n"
    code, out, _ = run(capsys, "compare", "1323", "1123", "--order", "medium")
    assert out == "1323 and 1123 are incomparable\n"
    code, out, _ = run(capsys, "compare", "1323", "1323", "--order", "medium")
    assert out == "1323 = 1323\n"


def test_compare_touch(capsys):
    code, out, _ = run(capsys, "compare", "1323", "1123", "--order", "touch")
    assert code == 0 and out == "1323 ⇀ 1123: true\n"
    code, out, _ = run(capsys, "compare", "1123", "1323", "--order", "touch")
    assert out == "1123 ⇀ 1323: false\n"


def test_compare_espresso_decaf(capsys):
    code, out, _ = run(capsys, "compare", "12", "21", "--order", "espresso")
    assert code == 0 and out == "12 < 21\n"
    code, out, _ = run(capsys, "compare", "1233", "3213", "--order", "decaf")
    assert code == 0 and out == "1233 < 3213\n"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "3", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines == ["112", "121", "122", "211", "212", "221", "# 6 words"]


def test_info(capsys):
    code, out, _ = run(capsys, "info", "31422")
    assert code == 0
    assert "n=5, k=4" in out
    assert "dim         6" in out
    assert "codim 3" in out


def test_minors(capsys):
    code, out, _ = run(capsys, "minors", "21231231", "--class", "T")
    assert code == 0
    assert "T  {2,6,8}" in out
    code, out, _ = run(capsys, "minors", "1323", "--json")
    obj = json.loads(out)
    assert obj["word"] == "1323"
    assert {"J": [1], "class": "U"} in obj["minors"]
    assert {"J": [1, 2], "class": "T"} in obj["minors"]


def test_poset_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "poset", "3", "2", "--order", "decaf", "--out", "dot")
    assert code == 0 and out.startswith("digraph decaf_3_2 {")
    code, out, _ = run(capsys, "poset", "2", "2", "--order", "medium",
                       "--out", "json")
    obj = json.loads(out)
    assert obj["elements"] == ["12", "21"]
    assert obj["relations"] == [[0, 1]]
    code, out, _ = run(capsys, "poset", "2", "2", "--order", "medium",
                       "--out", "json", "--hasse-only")
    assert "relations" not in json.loads(out)
    fig = tmp_path / "hasse.png"
    code, out, _ = run(capsys, "poset", "3", "2", "--order", "medium",
                       "--out", "dot", "--figure", str(fig))
    assert code == 0 and fig.exists()


def test_essential_command(capsys):
    code, out, _ = run(capsys, "essential", "31424")
    assert code == 0
    assert "rank(rows 1..2, cols {1}) <= 0" in out
    code, out, _ = run(capsys, "essential", "1233")
    assert "no rank conditions" in out


def test_decompose_and_member(capsys, tmp_path):
    w = parse_word("31424")
    S = linalg.sample_from_pattern(pattern_matrix(w), "rational-small", seed=5)
    U = linalg.random_unitriangular(4, seed=9)
    t = linalg.random_diagonal(5, seed=11)
    A = essential.recompose(U, S, t)
    path = tmp_path / "A.json"
    serialize.dump_matrix(A, path)

    code, out, _ = run(capsys, "decompose", "--matrix", str(path))
    assert code == 0
    obj = json.loads(out)
    assert obj["word"] == "31424"
    Ap = serialize.matrix_from_json(obj["A_prime"])
    U2 = serialize.matrix_from_json(obj["U"])
    t2 = [serialize.text_to_fraction(x) for x in obj["t"]]
    assert essential.recompose(U2, Ap, t2) == A

    code, out, _ = run(capsys, "member", "31424", "--matrix", str(path))
    assert code == 0 and out == "in closure of C_31424: true\n"
    code, out, _ = run(capsys, "member", "31422", "--matrix", str(path))
    assert out == "in closure of C_31422: true\n"
    code, out, _ = run(capsys, "member", "11234", "--matrix", str(path))
    assert out == "in closure of C_11234: false\n"


def test_verify_command(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "3", "2", "--suites", "words,orders")
    assert code == 0
    assert "words" in out and "orders" in out and "exit 0" in out
    rep = tmp_path / "rep"
    code, out, _ = run(capsys, "verify", "3", "2", "--suites", "essential_guard",
                       "--report", str(rep))
    assert code == 0
    assert (rep / "verify_3_2.csv").exists()
    assert (rep / "verify_3_2.png").exists()


def test_error_paths(capsys):
    code, _, err = run(capsys, "info", "xyz")
    assert code == 1 and "error:" in err
    code, _, err = run(capsys, "compare", "12", "112", "--order", "medium")
    assert code == 1
    code, _, err = run(capsys, "enumerate", "9", "4", "--budget", "100")
    assert code == 1 and "budget" in err
    code, _, err = run(capsys, "verify", "3", "2", "--suites", "nonsense")
    assert code == 1
    code, _, err = run(capsys, "member", "1223", "--matrix", "/no/such/file")
    assert code == 1


def test_determinism(capsys):
    a = run(capsys, "minors", "31422")
    b = run(capsys, "minors", "31422")
    assert a == b
