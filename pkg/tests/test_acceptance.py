"""Acceptance gate: one criterion per test, one printed PASS/FAIL line each.

The report lines are written to the real stdout so they stay visible
under pytest's capture.
"""

import sys
import time

from conftest import ACCEPTANCE_LINES

from fubini import essential, flags, linalg, orders, patterns, verify, words
from fubini.patterns import pattern_matrix
from fubini.qpoly import q_factorial
from fubini.words import enumerate_words, parse_word


def report(num, desc, ok, extra=""):
    line = "criterion %2d: %s — %s%s" % (num, "PASS" if ok else "FAIL", desc,
                                         " [%s]" % extra if extra else "")
    ACCEPTANCE_LINES.append(line)
    print(line, file=sys.__stdout__, flush=True)
    assert ok, line


def all_shapes(max_n):
    return [(n, k) for n in range(1, max_n + 1) for k in range(1, n + 1)]


def test_criterion_01_oracle_triangle():
    t0 = time.time()
    ok = True
    for n, k in all_shapes(6):
        for w in enumerate_words(n, k):
            cls = flags.classify_all(w, check=True)     # alpha vs matching
            rnd = flags.classify_all_randomized(w, trials=20, seed=0)
            if (cls.S, cls.T, cls.U) != (rnd.S, rnd.T, rnd.U):
                ok = False
    elapsed = time.time() - t0
    report(1, "alpha/matching/randomized triangle, all w and J, n <= 6",
           ok and elapsed < 300, "%.1fs" % elapsed)


def test_criterion_02_poincare_identity():
    ok = True
    for n, k in all_shapes(8):
        if patterns.poincare_polynomial(n, k) != q_factorial(k) * patterns.rev_q_stirling(n, k):
            ok = False
    ok = ok and str(patterns.dim_polynomial(3, 2)) == "2 + 3q + q^2"
    report(2, "codimension generating function = [k]!_q * reversed Stir_q(n,k), n <= 8", ok)


def test_criterion_03_worked_examples():
    ok = patterns.dimension(parse_word("31422")) == 6
    ok = ok and patterns.dimension(parse_word("31424")) == 5
    P = pattern_matrix(parse_word("31422"))
    ok = ok and P.entries == ((0, 1, 2, 2, 2), (0, 0, 0, 1, 1),
                              (1, 0, 2, 0, 2), (0, 0, 1, 0, 2))
    Q = pattern_matrix(parse_word("31424"))
    ok = ok and Q.entries == ((0, 1, 2, 2, 2), (0, 0, 0, 1, 0),
                              (1, 0, 2, 0, 2), (0, 0, 1, 0, 1))
    w = parse_word("21231231")
    ok = ok and words.alpha_vector(w) == (2, 1, 4)
    ok = ok and flags.classify_flag_alpha(w, (2, 6, 8)) == flags.TRULY
    big = parse_word("4,4,2,5,3,1,3,6,5,4,1", k=6)
    ok = ok and words.convexify(big) == parse_word("4,4,4,2,5,5,3,3,1,1,6", k=6)
    ok = ok and words.standardize(words.convexify(big)) == (4, 7, 8, 2, 5, 9, 3, 10, 1, 11, 6)
    ok = ok and words.beta_chain(parse_word("12123123")) == (
        (1, 3, 6), (1, 2, 3, 4, 6, 7), (1, 2, 3, 4, 5, 6, 7, 8))
    ok = ok and flags.general_minor_vanishes(parse_word("31123"), (2,), (1,),
                                             trials=20, seed=0)
    report(3, "published worked examples reproduced exactly", ok)


def test_criterion_04_k_equals_n_is_bruhat():
    ok = True
    for n in range(1, 6):
        pm = orders.build_poset(n, n, "medium")
        pe = orders.build_poset(n, n, "espresso")
        pd = orders.build_poset(n, n, "decaf")
        if not (pm.up == pe.up == pd.up):
            ok = False
        for v in pm.elements:
            for w in pm.elements:
                if pm.leq(v, w) != words.bruhat_leq(v.letters, w.letters):
                    ok = False
    report(4, "k = n: all three orders coincide with the Bruhat order, n <= 5", ok)


def test_criterion_05_order_inclusions():
    ok = True
    for n, k in all_shapes(6):
        try:
            pe = orders.build_poset(n, k, "espresso")   # raises on a cycle
        except orders.CycleError:
            ok = False
            continue
        pm = orders.build_poset(n, k, "medium")
        pd = orders.build_poset(n, k, "decaf")
        if not (orders.relation_inclusion(pd, pm) and orders.relation_inclusion(pm, pe)):
            ok = False
    report(5, "decaf ⊆ medium ⊆ espresso and espresso acyclic, n <= 6", ok)


def test_criterion_06_rankedness():
    ok = True
    for n, k in all_shapes(7):
        pd = orders.build_poset(n, k, "decaf")
        ranked, _ = orders.is_ranked(pd)
        if not ranked:
            ok = False
        elif orders.rank_generating_function(pd) != patterns.poincare_polynomial(n, k):
            ok = False
    pm = orders.build_poset(5, 4, "medium")
    ranked, cert = orders.is_ranked(pm)
    v, w = parse_word("41321"), parse_word("44312")
    gap_edge = bool(pm.hasse_up[pm.index[v]] >> pm.index[w] & 1)
    ok = (ok and not ranked and gap_edge
          and pm.codim[pm.index[w]] - pm.codim[pm.index[v]] == 2
          and patterns.dimension(v) == 3 and patterns.dimension(w) == 1)
    report(6, "decaf ranked with Poincare rank function (n <= 7); "
              "medium (5,4) gap-2 cover 41321 < 44312", ok)


def test_criterion_07_touching_example():
    v, w = parse_word("1323"), parse_word("1123")
    ok = (flags.touches(v, w)
          and not flags.medium_leq(v, w)
          and not flags.medium_leq(w, v)
          and patterns.codimension(v) == patterns.codimension(w))
    report(7, "1323 ⇀ 1123 with both order directions false and equal codim", ok)


def test_criterion_08_membership_equivalence():
    ok = True
    for n, k in all_shapes(5):
        ws = list(enumerate_words(n, k))
        for u in ws:
            mats = [(_one_matrix(u), False)]
            for s in range(3):
                S = linalg.sample_from_pattern(pattern_matrix(u), "rational-small",
                                               seed=100 * s + 1)
                U = linalg.random_unitriangular(k, seed=100 * s + 2)
                t = linalg.random_diagonal(n, seed=100 * s + 3)
                mats.append((essential.recompose(U, S, t), True))
            for A, generic in mats:
                zb = essential.zero_flag_minor_bits(A, (n, k))
                for w in ws:
                    f = essential.member_closure_flags_bitset(zb, w)
                    if f != essential.member_closure_ess(A, w, validate=False):
                        ok = False
                    if generic and f != flags.medium_leq(w, u):
                        ok = False
    report(8, "flag-minor and essential-set membership agree on all M_u and "
              "3 samples per cell (n <= 5); generic membership = order", ok)


def _one_matrix(w):
    grid = [[0] * w.n for _ in range(w.k)]
    for j in range(1, w.n + 1):
        grid[w[j] - 1][j - 1] = 1
    return linalg.RationalMatrix(grid)


def test_criterion_09_decompose_roundtrip():
    ok = True
    for n, k in all_shapes(5):
        for w in enumerate_words(n, k):
            for seed in (0, 1, 2):
                S = linalg.sample_from_pattern(pattern_matrix(w), "rational-small",
                                               seed=7 * seed + 1)
                U = linalg.random_unitriangular(k, seed=7 * seed + 2)
                t = linalg.random_diagonal(n, seed=7 * seed + 3)
                A = essential.recompose(U, S, t)
                w2, Ap, U2, t2 = essential.decompose(A)
                if w2 != w or essential.recompose(U2, Ap, t2) != A:
                    ok = False
    report(9, "decompose round-trips U0 * sample(P_w) * T0 exactly, all w, n <= 5, 3 seeds", ok)


def test_criterion_10_order_test_triangle():
    ok = True
    for n, k in all_shapes(5):
        ws = list(enumerate_words(n, k))
        for v in ws:
            for w in ws:
                m = flags.medium_leq(v, w)
                if m != flags.medium_leq_alpha(v, w):
                    ok = False
                if m != essential.medium_leq_ess(v, w):
                    ok = False
                if m and not flags.ehresmann_necessary(v, w):
                    ok = False
    report(10, "medium_leq = alpha test = essential-set test on all pairs, n <= 5; "
               "Gale necessary condition on related pairs", ok)


def test_criterion_11_findings_recorded():
    ok = True
    findings = []
    for n, k in all_shapes(5):
        results = verify.run_suites(n, k, ["lifting", "superpushback", "essential_guard"],
                                    seed=0, trials=20)
        by_name = {r.name: r for r in results}
        if by_name["lifting"].status != "pass":
            ok = False
        for name in ("superpushback", "essential_guard"):
            r = by_name[name]
            if r.status != "finding":
                ok = False
            findings.append("(%d,%d) %s: %s" % (n, k, name, "; ".join(r.details)))
        if verify.exit_code(results) != 0:
            ok = False
    ACCEPTANCE_LINES.extend("  finding: " + line for line in findings)
    report(11, "superpushback and essential-guard sweeps emit findings (exit 0); "
               "lifting passes, n <= 5", ok)
