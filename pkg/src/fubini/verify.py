"""Batch verification harness: runs every cross-oracle property suite
for a given (n, k) and reports machine-readable pass/fail/finding
results with counterexample payloads.

"finding" suites probe claims with acknowledged ambiguity (superpushback
cover status, the essential-set beta guard, rank-condition minimality);
they report what they observe and never fail the run.
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import essential, flags, linalg, orders, patterns, words
from .patterns import pattern_matrix
from .qpoly import q_factorial, q_stirling
from .words import enumerate_words

PAIR_CAP = 120000
SAMPLED_WORD_CAP = 200


@dataclass
class SuiteResult:
    name: str
    status: str                  # pass | fail | finding
    details: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def line(self):
        head = "%-16s %s" % (self.name, self.status.upper())
        return head if not self.details else head + "  (" + "; ".join(self.details[:3]) + ")"


def _fail(res, msg):
    res.status = "fail"
    res.details.append(msg)


def _words(n, k):
    return list(enumerate_words(n, k))


def _pairs(ws, rng, cap=PAIR_CAP):
    "All ordered pairs if affordable, else a deterministic sample."
    total = len(ws) * len(ws)
    if total <= cap:
        yield from itertools.product(ws, ws)
        return
    for _ in range(cap):
        yield rng.choice(ws), rng.choice(ws)


# ---------------------------------------------------------------------------

def suite_words(n, k, seed, trials):
    res = SuiteResult("words", "pass")
    ws = _words(n, k)
    if len(ws) != words.count_words(n, k):
        _fail(res, "enumeration count %d != k!S(n,k) = %d"
              % (len(ws), words.count_words(n, k)))
    seen = set()
    for w in ws:
        if w in seen:
            _fail(res, "duplicate word %s" % w)
        seen.add(w)
        alpha = words.alpha_vector(w)
        if sorted(alpha) != sorted(set(alpha)):
            _fail(res, "alpha entries not distinct for %s" % w)
        if any(w[alpha[i - 1]] != i for i in range(1, k + 1)):
            _fail(res, "alpha inconsistent for %s" % w)
        c = words.convexify(w)
        if words.convexify(c) != c:
            _fail(res, "convexify not idempotent at %s" % w)
        if (words.initial_permutation(c) != words.initial_permutation(w)
                or sorted(c.letters) != sorted(w.letters)):
            _fail(res, "convexify changed pi or content at %s" % w)
        std = words.standardize(w)
        if not words.is_permutation(std):
            _fail(res, "standardize(%s) is not a permutation" % w)
        init = sorted(words.alpha_vector(w))
        if tuple(std[j - 1] for j in init) != words.initial_permutation(w):
            _fail(res, "standardize of %s does not restrict to pi" % w)
    # conv(v) = conv(w) iff same pi and same content
    by_conv = {}
    for w in ws:
        by_conv.setdefault(words.convexify(w), []).append(w)
    for c, group in by_conv.items():
        keys = {(words.initial_permutation(w), tuple(sorted(w.letters))) for w in group}
        if len(keys) != 1:
            _fail(res, "conv classes mix pi/content at %s" % c)

    # fixed-size checks: Gale order axioms; Bruhat vs transposition closure
    multisets = [tuple(sorted(m)) for m in itertools.product(range(1, 6), repeat=3)]
    multisets = sorted(set(multisets))
    for a in multisets:
        if not words.gale_leq(a, a):
            _fail(res, "gale not reflexive at %r" % (a,))
    rng = random.Random(seed)
    for _ in range(2000):
        a, b, c = rng.choice(multisets), rng.choice(multisets), rng.choice(multisets)
        if words.gale_leq(a, b) and words.gale_leq(b, a) and a != b:
            _fail(res, "gale not antisymmetric at %r %r" % (a, b))
        if words.gale_leq(a, b) and words.gale_leq(b, c) and not words.gale_leq(a, c):
            _fail(res, "gale not transitive at %r %r %r" % (a, b, c))
    if not _bruhat_matches_transposition_closure(4):
        _fail(res, "Ehresmann test disagrees with transposition closure on S_4")
    return res


def _bruhat_matches_transposition_closure(m):
    perms = [tuple(p) for p in itertools.permutations(range(1, m + 1))]
    idx = {p: i for i, p in enumerate(perms)}
    up = [0] * len(perms)
    for p in perms:
        for i in range(1, m + 1):
            for j in range(i + 1, m + 1):
                pos_i = p.index(i)
                pos_j = p.index(j)
                if pos_i < pos_j:
                    q = list(p)
                    q[pos_i], q[pos_j] = j, i
                    up[idx[p]] |= 1 << idx[tuple(q)]
    orders._warshall_closure(up)
    for a in perms:
        for b in perms:
            closed = a == b or bool(up[idx[a]] >> idx[b] & 1)
            if closed != words.bruhat_leq(a, b):
                return False
    return True


def suite_linalg(n, k, seed, trials):
    res = SuiteResult("linalg", "pass")
    rng = random.Random(seed)
    for _ in range(300):
        m = rng.randint(1, 4)
        data = [[rng.randint(-2, 2) for _ in range(m)] for _ in range(m)]
        M = linalg.RationalMatrix(data)
        if linalg.det(M) != _cofactor_det(data):
            _fail(res, "Bareiss det disagrees with cofactor at %r" % data)
        wide = [[rng.randint(-2, 2) for _ in range(m + 1)] for _ in range(m)]
        W = linalg.RationalMatrix(wide)
        if linalg.rank(W) != _brute_rank(wide):
            _fail(res, "rank disagrees with minor enumeration at %r" % wide)
    for _ in range(50):
        r = rng.randint(1, 4)
        c = rng.randint(1, 5)
        data = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        rho = linalg.prefix_rank_profile(linalg.RationalMatrix(data))
        for i in range(1, r + 1):
            for j in range(1, c + 1):
                if rho[i][j] - rho[i][j - 1] not in (0, 1) or rho[i][j] - rho[i - 1][j] not in (0, 1):
                    _fail(res, "rank profile step > 1 at %r" % data)
        mod_rank = linalg.rank_mod(data)
        if mod_rank != rho[r][c]:
            mod2 = linalg.rank_mod(data, linalg.SECOND_PRIME)
            if mod2 != rho[r][c]:
                _fail(res, "prime-field rank disagrees at both primes for %r" % data)
    return res


def _cofactor_det(a):
    m = len(a)
    if m == 1:
        return Fraction(a[0][0])
    out = Fraction(0)
    for j in range(m):
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        out += (-1) ** j * a[0][j] * _cofactor_det(minor)
    return out


def _brute_rank(a):
    rows = range(len(a))
    cols = range(len(a[0]))
    best = 0
    for r in range(1, min(len(a), len(a[0])) + 1):
        for I in itertools.combinations(rows, r):
            for J in itertools.combinations(cols, r):
                sub = [[a[i][j] for j in J] for i in I]
                if _cofactor_det(sub) != 0:
                    best = max(best, r)
                    break
            if best == r:
                break
    return best


def suite_patterns(n, k, seed, trials):
    res = SuiteResult("patterns", "pass")
    ws = _words(n, k)
    rng = random.Random(seed)
    minimum = words.word([*range(1, k + 1)] + [k] * (n - k), k)
    for w in ws:
        P = pattern_matrix(w)
        alpha = words.alpha_vector(w)
        for j in range(1, n + 1):
            ones = [r for r in range(1, k + 1) if P.entry(r, j) == patterns.ONE]
            if ones != [w[j]]:
                _fail(res, "column %d of P_%s has wrong 1s" % (j, w))
        for r in range(1, k + 1):
            if patterns.ONE not in [P.entry(r, j) for j in range(1, n + 1)]:
                _fail(res, "row %d of P_%s has no 1" % (r, w))
        for (r, j) in P.star_cells():
            if not alpha[r - 1] < alpha[w[j] - 1]:
                _fail(res, "star (%d,%d) of P_%s breaks the alpha rule" % (r, j, w))
        c = patterns.codimension(w)
        if c < 0 or (c == 0) != (w == minimum):
            _fail(res, "codimension anomaly at %s (codim %d)" % (w, c))
    if patterns.dim_polynomial(n, k) != q_factorial(k) * q_stirling(n, k):
        _fail(res, "dimension generating function identity fails at (%d,%d)" % (n, k))
    # generic rank: monotone, and matches prime-field rank of samples
    for _ in range(min(len(ws), 60)):
        w = rng.choice(ws)
        P = pattern_matrix(w)
        h = rng.randint(1, k)
        J = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        r1 = patterns.generic_rank(P, range(1, h + 1), J)
        if h < k and patterns.generic_rank(P, range(1, h + 2), J) < r1:
            _fail(res, "generic rank not monotone in rows at %s" % w)
        Jbig = sorted(set(J) | {rng.randint(1, n)})
        if patterns.generic_rank(P, range(1, h + 1), Jbig) < r1:
            _fail(res, "generic rank not monotone in columns at %s" % w)
        best = 0
        for s in range(5):
            M = linalg.sample_from_pattern(P, "prime-field", seed=rng.randint(0, 10 ** 9))
            sub = [[M.entries[r][j - 1] for j in J] for r in range(h)]
            best = max(best, linalg.rank_mod(sub, M.p))
        if best != r1:
            _fail(res, "sampled rank %d != matching rank %d at %s rows[%d] J=%r"
                  % (best, r1, w, h, J))
    return res


def suite_flags(n, k, seed, trials):
    res = SuiteResult("flags", "pass")
    ws = _words(n, k)
    rng = random.Random(seed)
    idx = flags.column_set_index(n, k)
    full = (1 << len(idx)) - 1
    # deterministic triangle + partition for every word
    for w in ws:
        try:
            cls = flags.classify_all(w, check=True)
        except flags.OracleDisagreement as exc:
            _fail(res, "alpha/matching disagreement: %s" % exc)
            continue
        if cls.S | cls.T | cls.U != full or cls.S & cls.T or cls.S & cls.U or cls.T & cls.U:
            _fail(res, "S/T/U do not partition for %s" % w)
    # randomized leg on a deterministic sample of words
    sample = ws if len(ws) <= SAMPLED_WORD_CAP else rng.sample(ws, SAMPLED_WORD_CAP)
    for w in sample:
        cls = flags.classification(w)
        rnd = flags.classify_all_randomized(w, trials=trials, seed=seed)
        if (cls.S, cls.T, cls.U) != (rnd.S, rnd.T, rnd.U):
            _fail(res, "randomized oracle disagrees at %s" % w)
    # order tests on pairs
    related = 0
    for v, w in _pairs(ws, rng):
        m = flags.medium_leq(v, w)
        if m != flags.medium_leq_alpha(v, w):
            _fail(res, "medium_leq vs alpha test disagree at (%s,%s)" % (v, w))
        t = flags.touches(v, w)
        if m and not t:
            _fail(res, "medium relation without touching at (%s,%s)" % (v, w))
        if (m or t) and not flags.ehresmann_necessary(v, w):
            _fail(res, "Ehresmann necessary condition fails at (%s,%s)" % (v, w))
        if m:
            related += 1
        if k == n:
            if m != words.bruhat_leq(tuple(v.letters), tuple(w.letters)):
                _fail(res, "medium != Bruhat at (%s,%s)" % (v, w))
    res.data["related_pairs"] = related
    # touching is not transitive: search a witness triple
    if n >= 4:
        triple = _non_transitive_touch(ws, rng)
        if triple:
            res.data["non_transitive_touch"] = [str(x) for x in triple]
            res.details.append("touch non-transitive at %s -> %s -> %s" %
                               tuple(str(x) for x in triple))
    if n <= 5:
        _rank_superset_check(res, ws, idx)
    if n <= 4:
        _minor_dichotomy_check(res, ws, seed, trials)
        _vanishing_forces_truly_check(res, ws, seed, trials)
    return res


def _non_transitive_touch(ws, rng):
    sample = ws if len(ws) <= 80 else rng.sample(ws, 80)
    for a in sample:
        for b in sample:
            if a != b and flags.touches(a, b):
                for c in sample:
                    if c != b and c != a and flags.touches(b, c) and not flags.touches(a, c):
                        return (a, b, c)
    return None


def _rank_superset_check(res, ws, idx):
    "rank < |J| iff every h-superset of J is truly vanishing."
    n, k = idx.n, idx.k
    for w in ws:
        cls = flags.classification(w)
        P = pattern_matrix(w)
        for h in range(1, k + 1):
            for size in range(1, h + 1):
                for J in itertools.combinations(range(1, n + 1), size):
                    deficient = patterns.generic_rank(P, range(1, h + 1), J) < len(J)
                    all_truly = all(
                        cls.T >> idx.of(K) & 1
                        for K in itertools.combinations(range(1, n + 1), h)
                        if set(J) <= set(K))
                    if deficient != all_truly:
                        _fail(res, "rank/superset equivalence fails at %s h=%d J=%r"
                              % (w, h, J))
                        return


def _minor_dichotomy_check(res, ws, seed, trials):
    "A vanishing (I,J) minor forces vanishing submirrors or truly supersets."
    n, k = ws[0].n, ws[0].k
    for w in ws:
        cls = flags.classification(w)
        idx = flags.column_set_index(n, k)
        for size in range(1, k + 1):
            for I in itertools.combinations(range(1, k + 1), size):
                h = max(I)
                for J in itertools.combinations(range(1, n + 1), size):
                    if not flags.general_minor_vanishes(w, I, J, trials=trials, seed=seed):
                        continue
                    part1 = all(
                        size == 1 or flags.general_minor_vanishes(
                            w, tuple(x for x in I if x != h),
                            tuple(y for y in J if y != j), trials=trials, seed=seed)
                        for j in J)
                    part2 = all(
                        cls.T >> idx.of(K) & 1
                        for K in itertools.combinations(range(1, n + 1), h)
                        if set(J) <= set(K))
                    if not (part1 or part2):
                        _fail(res, "big-minor dichotomy fails at %s I=%r J=%r" % (w, I, J))
                        return


def _vanishing_forces_truly_check(res, ws, seed, trials):
    "A vanishing (I,J) minor with |J| <= k puts J in T_w."
    k = ws[0].k
    n = ws[0].n
    for w in ws:
        cls = flags.classification(w)
        idx = flags.column_set_index(n, k)
        for size in range(1, k + 1):
            for I in itertools.combinations(range(1, k + 1), size):
                for J in itertools.combinations(range(1, n + 1), size):
                    if flags.general_minor_vanishes(w, I, J, trials=trials, seed=seed):
                        if not cls.T >> idx.of(J) & 1:
                            _fail(res, "vanishing (I,J) minor with J not truly at %s I=%r J=%r"
                                  % (w, I, J))
                            return


def suite_orders(n, k, seed, trials, budget=orders.DEFAULT_BUDGET):
    res = SuiteResult("orders", "pass")
    try:
        pm = orders.build_poset(n, k, "medium", budget)
        pe = orders.build_poset(n, k, "espresso", budget)
        pd = orders.build_poset(n, k, "decaf", budget)
    except orders.CycleError as exc:
        _fail(res, "espresso cycle: %s" % exc)
        return res
    if not orders.relation_inclusion(pd, pm):
        _fail(res, "decaf not contained in medium")
    if not orders.relation_inclusion(pm, pe):
        _fail(res, "medium not contained in espresso")
    ok, cert = orders.is_ranked(pd)
    if not ok:
        _fail(res, "decaf unranked: %r" % (cert,))
    elif orders.rank_generating_function(pd) != patterns.poincare_polynomial(n, k):
        _fail(res, "decaf rank generating function != Poincare polynomial")
    ok_m, cert_m = orders.is_ranked(pm)
    if not ok_m:
        res.data["medium_gap_certificate"] = [str(cert_m[0]), str(cert_m[1]),
                                              cert_m[2], cert_m[3]]
        res.details.append("medium unranked: %s < %s codims %d,%d" %
                           (cert_m[0], cert_m[1], cert_m[2], cert_m[3]))
    for i, j in pm.hasse_edges():
        if not pm.codim[i] < pm.codim[j]:
            _fail(res, "medium cover without codim increase: %s < %s"
                  % (pm.elements[i], pm.elements[j]))
    minimum = words.word([*range(1, k + 1)] + [k] * (n - k), k)
    for P in (pm, pe, pd):
        if P.minimum() != minimum:
            _fail(res, "%s minimum is not %s" % (P.kind, minimum))
    # generated covers appear as medium-roast Hasse edges
    hasse = {(i, j) for i, j in pm.hasse_edges()}
    for w in pm.elements:
        for move in orders.pushback_moves(w):
            e = (pm.index[move.lower], pm.index[move.upper])
            if e not in hasse:
                _fail(res, "pushback %s < %s is not a medium cover"
                      % (move.lower, move.upper))
        for i in range(1, k):
            for j in range(i + 1, k + 1):
                move = orders.transposition_relation(w, i, j)
                if move is None:
                    continue
                if not pm.leq(move.lower, move.upper):
                    _fail(res, "transposition %s < %s not a medium relation"
                          % (move.lower, move.upper))
                if move.is_cover and (pm.index[move.lower], pm.index[move.upper]) not in hasse:
                    _fail(res, "transposition cover %s < %s not a medium cover"
                          % (move.lower, move.upper))
    return res


def suite_lifting(n, k, seed, trials):
    res = SuiteResult("lifting", "pass")
    ws = _words(n, k)
    rng = random.Random(seed)
    checked = 0
    for v, w in _pairs(ws, rng):
        for i in range(1, k):
            av = words.alpha_vector(v)
            aw = words.alpha_vector(w)
            if not (av[i] < av[i - 1] and aw[i] < aw[i - 1]):
                continue
            if flags.medium_leq(v, w):
                checked += 1
                if not orders.lifting_check(v, w, i, "medium"):
                    _fail(res, "lifting fails (medium) at (%s,%s,i=%d)" % (v, w, i))
            if flags.touches(v, w):
                if not orders.lifting_check(v, w, i, "touch"):
                    _fail(res, "lifting fails (touch) at (%s,%s,i=%d)" % (v, w, i))
    res.data["qualifying_pairs"] = checked
    return res


def suite_superpushback(n, k, seed, trials):
    """Finding suite: verify the superpushback claims empirically and
    report every deviation instead of failing."""
    res = SuiteResult("superpushback", "finding")
    ws = _words(n, k)
    pm = pe = None
    if len(ws) <= 2000:
        pm = orders.build_poset(n, k, "medium")
        pe = orders.build_poset(n, k, "espresso")
    touch_failures = []
    cover_failures = []
    skipped = 0
    total = 0
    for w in ws:
        for p in range(1, k):
            for move in orders.superpushback_moves(w, p):
                if not move.redundancy_preserved:
                    skipped += 1
                    continue
                total += 1
                if not flags.touches(move.lower, move.upper):
                    touch_failures.append((str(move.lower), str(move.upper), p))
                if pm is not None and p >= 2:
                    i, j = pm.index[move.lower], pm.index[move.upper]
                    med_cover = bool(pm.hasse_up[i] >> j & 1)
                    esp_cover = bool(pe.hasse_up[i] >> j & 1)
                    if not (med_cover and esp_cover):
                        cover_failures.append(
                            (str(move.lower), str(move.upper), p, med_cover, esp_cover))
    res.data.update(moves=total, redundancy_violations=skipped,
                    touch_failures=touch_failures[:20],
                    cover_failures=cover_failures[:20],
                    n_touch_failures=len(touch_failures),
                    n_cover_failures=len(cover_failures))
    res.details.append("%d moves checked; %d touch failures; %d cover-claim failures; "
                       "%d skipped for redundancy loss"
                       % (total, len(touch_failures), len(cover_failures), skipped))
    return res


def suite_essential(n, k, seed, trials):
    res = SuiteResult("essential", "pass")
    ws = _words(n, k)
    rng = random.Random(seed)
    # order-test triangle
    for v, w in _pairs(ws, rng, cap=60000):
        m = flags.medium_leq(v, w)
        if m != essential.medium_leq_ess(v, w):
            _fail(res, "essential order test disagrees at (%s,%s)" % (v, w))
    # membership equivalence and generic membership = order
    sample_ws = ws if len(ws) <= 260 else rng.sample(ws, 260)
    for u in sample_ws:
        mats = [(_one_matrix(u), False)]
        for s in range(3):
            S = linalg.sample_from_pattern(pattern_matrix(u), "rational-small",
                                           seed=seed + 17 * s + 1)
            U0 = linalg.random_unitriangular(k, "rational-small", seed=seed + 31 * s + 2)
            mats.append((U0 @ S, True))
        for A, generic in mats:
            zb = essential.zero_flag_minor_bits(A, (n, k))
            for w in ws:
                f = essential.member_closure_flags_bitset(zb, w)
                if f != essential.member_closure_ess(A, w, validate=False):
                    _fail(res, "flag/ess membership disagree: A from %s, w=%s" % (u, w))
                if generic and f != flags.medium_leq(w, u):
                    _fail(res, "generic membership != order at (w=%s,u=%s)" % (w, u))
    # decompose round trip
    for w in sample_ws:
        for s in range(3):
            S = linalg.sample_from_pattern(pattern_matrix(w), "rational-small", seed=seed + s)
            U0 = linalg.random_unitriangular(k, "rational-small", seed=seed + s + 7)
            t0 = linalg.random_diagonal(n, "rational-small", seed=seed + s + 13)
            A = essential.recompose(U0, S, t0)
            w2, Ap, U, t = essential.decompose(A)
            if w2 != w or essential.recompose(U, Ap, t) != A:
                _fail(res, "decompose round trip fails at %s seed %d" % (w, s))
    return res


def _one_matrix(w):
    grid = [[0] * w.n for _ in range(w.k)]
    for j in range(1, w.n + 1):
        grid[w[j] - 1][j - 1] = 1
    return linalg.RationalMatrix(grid)


def suite_essential_guard(n, k, seed, trials):
    """Finding suite: report any essential cell whose column count matches
    no beta size (the definition presumes none exist)."""
    res = SuiteResult("essential_guard", "finding")
    bad = []
    for w in _words(n, k):
        _, unmatched = essential.ranked_essential_set(w, strict=False)
        if unmatched:
            bad.append((str(w), unmatched))
    res.data["unmatched"] = bad[:50]
    res.data["n_words_with_unmatched_cells"] = len(bad)
    res.details.append("%d words with unmatched essential cells" % len(bad))
    return res


def suite_minimality(n, k, seed, trials):
    """Finding suite: for each dropped essential triple, search for a
    witness word whose generic ranks satisfy the remaining conditions
    while breaking the order relation (best-effort, small n only)."""
    res = SuiteResult("minimality", "finding")
    if n > 4:
        res.details.append("skipped for n > 4")
        return res
    ws = _words(n, k)
    witnessed = 0
    unwitnessed = []
    total = 0
    for w in ws:
        triples = essential._ess_triples(w)
        if len(triples) < 1:
            continue
        for drop in range(len(triples)):
            total += 1
            kept = [t for i, t in enumerate(triples) if i != drop]
            found = False
            for u in ws:
                P = pattern_matrix(u)
                if all(patterns.generic_rank(P, range(1, t.h + 1), t.beta) <= t.r
                       for t in kept) and not flags.medium_leq(w, u):
                    found = True
                    break
            if found:
                witnessed += 1
            else:
                unwitnessed.append((str(w), drop))
    res.data.update(dropped_conditions=total, witnessed=witnessed,
                    unwitnessed=unwitnessed[:20])
    res.details.append("%d/%d dropped conditions have a necessity witness"
                       % (witnessed, total))
    return res


SUITES = {
    "words": suite_words,
    "linalg": suite_linalg,
    "patterns": suite_patterns,
    "flags": suite_flags,
    "orders": suite_orders,
    "lifting": suite_lifting,
    "superpushback": suite_superpushback,
    "essential": suite_essential,
    "essential_guard": suite_essential_guard,
    "minimality": suite_minimality,
}

FINDING_SUITES = {"superpushback", "essential_guard", "minimality"}


def run_suites(n, k, suites=None, seed=0, trials=20):
    names = list(SUITES) if suites is None else list(suites)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError("unknown suite %r (known: %s)" % (name, ", ".join(SUITES)))
        results.append(SUITES[name](n, k, seed, trials))
    return results


def exit_code(results):
    "2 iff at least one non-finding suite failed."
    return 2 if any(r.status == "fail" for r in results) else 0
