import json
from fractions import Fraction

import pytest

from fubini.linalg import RationalMatrix
from fubini.orders import build_poset
from fubini.serialize import (FormatError, dump_matrix, fraction_to_text,
                              load_matrix, matrix_from_json, matrix_to_json,
                              poset_from_json, poset_json_text, poset_to_dot,
                              poset_to_json, text_to_fraction)


def test_fraction_text():
    assert fraction_to_text(Fraction(3)) == 3
    assert fraction_to_text(Fraction(-1, 2)) == "-1/2"
    assert text_to_fraction("2/4") == Fraction(1, 2)
    assert text_to_fraction(-7) == Fraction(-7)
    with pytest.raises(FormatError):
        text_to_fraction("1/0")
    with pytest.raises(FormatError):
        text_to_fraction(True)
    with pytest.raises(FormatError):
        text_to_fraction(1.5)


def test_matrix_roundtrip(tmp_path):
    M = RationalMatrix([[Fraction(1, 2), 3], [0, Fraction(-2, 7)]])
    assert matrix_from_json(matrix_to_json(M)) == M
    path = tmp_path / "m.json"
    dump_matrix(M, path)
    assert load_matrix(path) == M
    # canonicalization: any representation of the same fraction is accepted
    obj = json.loads(path.read_text())
    obj["entries"][0][0] = "2/4"
    assert matrix_from_json(obj) == M


def test_matrix_format_errors(tmp_path):
    with pytest.raises(FormatError):
        matrix_from_json({"rows": 2, "cols": 2, "entries": [[1, 2]]})
    with pytest.raises(FormatError):
        matrix_from_json([1, 2])
    with pytest.raises(FormatError):
        matrix_from_json({"rows": 1, "cols": 2, "entries": [[1, "x"]]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FormatError):
        load_matrix(bad)


def test_poset_roundtrip():
    for kind in ("medium", "decaf"):
        P = build_poset(4, 3, kind)
        assert poset_from_json(poset_to_json(P)) == P
        assert poset_from_json(json.loads(poset_json_text(P))) == P


def test_poset_json_deterministic():
    a = poset_json_text(build_poset(4, 2, "medium"))
    b = poset_json_text(build_poset(4, 2, "medium"))
    assert a == b


def test_poset_dot():
    P = build_poset(3, 2, "decaf")
    dot = poset_to_dot(P)
    assert dot.splitlines()[0] == "digraph decaf_3_2 {"
    assert dot.count("[label=") == 6          # |W_{3,2}| nodes
    assert dot.count("->") == len(P.hasse_edges())
    assert poset_to_dot(P) == dot
