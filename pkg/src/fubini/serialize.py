"""JSON and DOT serialization: matrices, posets, classifications.

All output is deterministic: fixed key order, sorted edge lists, and
reduced fractions with positive denominators.
"""

import json
from fractions import Fraction

from .linalg import LinalgError, RationalMatrix
from .orders import Poset
from .words import parse_word


class FormatError(ValueError):
    pass


def fraction_to_text(x):
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return "%d/%d" % (x.numerator, x.denominator)


def text_to_fraction(v):
    if isinstance(v, bool):
        raise FormatError("boolean is not a matrix entry")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise FormatError("bad entry %r" % v)
    raise FormatError("bad entry %r" % (v,))


def matrix_to_json(M):
    return {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[fraction_to_text(e) for e in row] for row in M.entries],
    }


def matrix_from_json(obj):
    try:
        rows = obj["rows"]
        cols = obj["cols"]
        entries = obj["entries"]
    except (KeyError, TypeError):
        raise FormatError("matrix object needs rows, cols, entries")
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise FormatError("entries are not %dx%d" % (rows, cols))
    try:
        return RationalMatrix([[text_to_fraction(e) for e in row] for row in entries])
    except LinalgError as exc:
        raise FormatError(str(exc))


def load_matrix(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError("invalid JSON in %s: %s" % (path, exc))
    return matrix_from_json(obj)


def dump_matrix(M, path):
    with open(path, "w") as fh:
        json.dump(matrix_to_json(M), fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# posets

def poset_to_json(P):
    return {
        "n": P.n,
        "k": P.k,
        "kind": P.kind,
        "elements": [str(w) for w in P.elements],
        "relations": P.relation_pairs(),
        "hasse": P.hasse_edges(),
        "codim": list(P.codim),
    }


def poset_from_json(obj):
    try:
        n, k, kind = obj["n"], obj["k"], obj["kind"]
        elements = [parse_word(s, k) for s in obj["elements"]]
        relations = obj["relations"]
        hasse = obj["hasse"]
        codim = list(obj["codim"])
    except (KeyError, TypeError):
        raise FormatError("malformed poset object")
    V = len(elements)
    up = [0] * V
    hs = [0] * V
    for i, j in relations:
        up[i] |= 1 << j
    for i, j in hasse:
        hs[i] |= 1 << j
    return Poset(n, k, kind, elements, up, hs, codim)


def poset_json_text(P):
    return json.dumps(poset_to_json(P), indent=1, sort_keys=False) + "\n"


def poset_to_dot(P):
    "Deterministic DOT digraph of the Hasse edges (lower -> upper)."
    lines = ["digraph %s_%d_%d {" % (P.kind, P.n, P.k),
             '  rankdir="BT";']
    for i, w in enumerate(P.elements):
        lines.append('  n%d [label="%s"];' % (i, w))
    for (i, j) in P.hasse_edges():
        lines.append("  n%d -> n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"
