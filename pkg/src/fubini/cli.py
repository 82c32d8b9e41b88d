"""Command-line interface.

Exit codes: 0 success, 1 domain/usage error, 2 when `verify` detects a
property violation in a non-finding suite.
"""

import argparse
import csv
import json
import os
import sys

from . import essential, flags, orders, patterns, serialize, verify, words
from .words import WordError

DEFAULT_BUDGET = orders.DEFAULT_BUDGET


class CliError(Exception):
    pass


def _parse_word(text):
    try:
        return words.parse_word(text)
    except WordError as exc:
        raise CliError(str(exc))


def _check_budget(n, k, budget):
    count = words.count_words(n, k)
    if count > budget:
        raise CliError("|W_{%d,%d}| = %d exceeds the budget %d (raise with --budget)"
                       % (n, k, count, budget))


def _shape(args):
    if args.k < 1 or args.k > args.n:
        raise CliError("need 1 <= k <= n, got n=%d k=%d" % (args.n, args.k))
    return args.n, args.k


# ---------------------------------------------------------------------------

def cmd_enumerate(args, out):
    n, k = _shape(args)
    _check_budget(n, k, args.budget)
    count = 0
    for w in words.enumerate_words(n, k):
        print(w, file=out)
        count += 1
    print("# %d words" % count, file=out)
    return 0


def cmd_info(args, out):
    w = _parse_word(args.word)
    alpha = words.alpha_vector(w)
    print("word        %s   (n=%d, k=%d)" % (w, w.n, w.k), file=out)
    print("alpha       %s" % (tuple(alpha),), file=out)
    print("pi          %s" % (words.initial_permutation(w),), file=out)
    print("convex      %s -> %s" % (words.is_convex(w), words.convexify(w)), file=out)
    print("standardize %s" % (words.standardize(w),), file=out)
    print("beta chain  %s" % " | ".join(str(tuple(b)) for b in words.beta_chain(w)), file=out)
    print("dim         %d   cell dim %d   codim %d"
          % (patterns.dimension(w), patterns.cell_dimension(w), patterns.codimension(w)),
          file=out)
    print("pattern", file=out)
    print(patterns.pattern_matrix(w).render(), file=out)
    return 0


def cmd_minors(args, out):
    w = _parse_word(args.word)
    cls = flags.classify_all(w, check=True)
    idx = flags.column_set_index(w.n, w.k)
    rows = [(J, cls.class_of(J)) for J in idx.subsets]
    if args.klass:
        rows = [(J, c) for (J, c) in rows if c == args.klass]
    if args.json:
        obj = {"word": str(w),
               "minors": [{"J": list(J), "class": c} for (J, c) in rows]}
        print(json.dumps(obj, indent=1), file=out)
    else:
        for J, c in rows:
            print("%s  {%s}" % (c, ",".join(map(str, J))), file=out)
    return 0


def cmd_compare(args, out):
    v = _parse_word(args.v)
    w = _parse_word(args.w)
    if (v.n, v.k) != (w.n, w.k):
        raise CliError("words have different shapes")
    if args.order == "touch":
        print("%s ⇀ %s: %s" % (v, w, str(flags.touches(v, w)).lower()), file=out)
        return 0
    if args.order == "medium":
        lo = flags.medium_leq(v, w)
        hi = flags.medium_leq(w, v)
    else:
        _check_budget(v.n, v.k, args.budget)
        P = orders.build_poset(v.n, v.k, args.order, args.budget)
        lo = P.leq(v, w)
        hi = P.leq(w, v)
    if v == w:
        print("%s = %s" % (v, w), file=out)
    elif lo:
        print("%s < %s" % (v, w), file=out)
    elif hi:
        print("%s > %s" % (v, w), file=out)
    else:
        print("%s and %s are incomparable" % (v, w), file=out)
    return 0


def cmd_poset(args, out):
    n, k = _shape(args)
    _check_budget(n, k, args.budget)
    try:
        P = orders.build_poset(n, k, args.order, args.budget)
    except orders.OrderError as exc:
        raise CliError(str(exc))
    if args.out == "dot":
        out.write(serialize.poset_to_dot(P))
    else:
        obj = serialize.poset_to_json(P)
        if args.hasse_only:
            del obj["relations"]
        print(json.dumps(obj, indent=1), file=out)
    if args.figure:
        from . import figures
        figures.save_hasse_figure(P, args.figure)
    return 0


def cmd_poincare(args, out):
    n, k = _shape(args)
    poly = patterns.poincare_polynomial(n, k)
    print(poly, file=out)
    if args.figure:
        from . import figures
        figures.save_poincare_figure(poly, n, k, args.figure)
    return 0


def cmd_essential(args, out):
    w = _parse_word(args.word)
    try:
        triples = essential.ranked_essential_set(w)
    except essential.EssentialError as exc:
        raise CliError(str(exc))
    if not triples:
        print("no rank conditions (closure is the full space)", file=out)
    for t in triples:
        print("rank(rows 1..%d, cols {%s}) <= %d"
              % (t.h, ",".join(map(str, t.beta)), t.r), file=out)
    return 0


def cmd_decompose(args, out):
    A = _load_matrix(args.matrix)
    try:
        w, Aprime, U, t = essential.decompose(A)
    except (essential.MatrixDomainError, essential.DecompositionError) as exc:
        raise CliError(str(exc))
    obj = {"word": str(w),
           "A_prime": serialize.matrix_to_json(Aprime),
           "U": serialize.matrix_to_json(U),
           "t": [serialize.fraction_to_text(x) for x in t]}
    print(json.dumps(obj, indent=1), file=out)
    return 0


def cmd_member(args, out):
    w = _parse_word(args.word)
    A = _load_matrix(args.matrix)
    try:
        m = essential.member_closure_flags(A, w)
        m2 = essential.member_closure_ess(A, w)
    except essential.MatrixDomainError as exc:
        raise CliError(str(exc))
    if m != m2:
        print("WARNING: flag and essential-set membership tests disagree", file=sys.stderr)
    print("in closure of C_%s: %s" % (w, str(m).lower()), file=out)
    return 0


def _load_matrix(path):
    try:
        return serialize.load_matrix(path)
    except (OSError, serialize.FormatError) as exc:
        raise CliError(str(exc))


def cmd_verify(args, out):
    n, k = _shape(args)
    _check_budget(n, k, args.budget)
    suites = args.suites.split(",") if args.suites else None
    try:
        results = verify.run_suites(n, k, suites, seed=args.seed, trials=args.trials)
    except ValueError as exc:
        raise CliError(str(exc))
    for r in results:
        print(r.line(), file=out)
    code = verify.exit_code(results)
    print("# verify (%d,%d): %d suites, %d findings, %d failures -> exit %d"
          % (n, k, len(results),
             sum(r.status == "finding" for r in results),
             sum(r.status == "fail" for r in results), code), file=out)
    if args.report:
        _write_report(results, n, k, args.report)
    return code


def _write_report(results, n, k, outdir):
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, "verify_%d_%d.csv" % (n, k))
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "status", "details", "data"])
        for r in results:
            writer.writerow([r.name, r.status, "; ".join(r.details),
                             json.dumps(r.data, sort_keys=True)])
    from . import figures
    figures.save_verify_figure(results, os.path.join(outdir, "verify_%d_%d.png" % (n, k)))


# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="fubini",
        description="Fubini word combinatorics: pattern matrices, flag-minor "
                    "classification, Fubini-Bruhat orders, essential sets, and "
                    "matrix decomposition.")
    sub = ap.add_subparsers(dest="command", required=True)

    def shaped(p):
        p.add_argument("n", type=int)
        p.add_argument("k", type=int)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="largest |W_{n,k}| accepted (default %d)" % DEFAULT_BUDGET)

    p = sub.add_parser("enumerate", help="list all words of W_{n,k}")
    shaped(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("info", help="statistics and pattern matrix of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("minors", help="classify every flag minor of a word")
    p.add_argument("word")
    p.add_argument("--class", dest="klass", choices=["S", "T", "U"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("compare", help="compare two words in a chosen order")
    p.add_argument("v")
    p.add_argument("w")
    p.add_argument("--order", required=True,
                   choices=["medium", "espresso", "decaf", "touch"])
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("poset", help="export a Fubini-Bruhat poset")
    shaped(p)
    p.add_argument("--order", required=True, choices=["medium", "espresso", "decaf"])
    p.add_argument("--out", required=True, choices=["dot", "json"])
    p.add_argument("--hasse-only", action="store_true",
                   help="omit the full relation list from JSON output")
    p.add_argument("--figure", metavar="PATH",
                   help="also render the Hasse diagram to an image file")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("poincare", help="codimension generating function")
    shaped(p)
    p.add_argument("--figure", metavar="PATH",
                   help="also render the coefficients as a bar chart")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("essential", help="ranked essential set of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_essential)

    p = sub.add_parser("decompose", help="factor a matrix as U * A' * T")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("member", help="test closure membership of a matrix")
    p.add_argument("word")
    p.add_argument("--matrix", required=True, metavar="FILE")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("verify", help="run the cross-oracle property suites")
    shaped(p)
    p.add_argument("--suites", help="comma-separated suite names (default: all)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--report", metavar="DIR",
                   help="write a CSV report and status figure to this directory")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
