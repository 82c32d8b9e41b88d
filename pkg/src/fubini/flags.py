"""Classification of flag minors into sometimes / truly / unvanishing,
the touching relation, and the alpha-based order tests.

Three independent routes compute the same partition: the Gale-order
alpha test, a matching oracle on the pattern matrix, and randomized
prime-field evaluation.  Disagreement between the two deterministic
routes is a fatal diagnostic.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .linalg import PRIME, det_mod
from .patterns import STAR, ZERO as P_ZERO, generic_rank, max_bipartite_matching, pattern_matrix
from .words import FubiniWord, WordError, alpha_vector, gale_leq

SOMETIMES = "S"
TRULY = "T"
UNVANISHING = "U"


class FlagError(ValueError):
    pass


class OracleDisagreement(AssertionError):
    """Deterministic classification routes disagree: implementation bug."""


@lru_cache(maxsize=None)
def column_set_index(n, k):
    return ColumnSetIndex(n, k)


class ColumnSetIndex:
    """Fixed enumeration of all column sets J in C([n],h), h = 1..k,
    ordered by (size, colex)."""

    def __init__(self, n, k):
        self.n = n
        self.k = k
        subsets = []
        for h in range(1, k + 1):
            combos = sorted(combinations(range(1, n + 1), h),
                            key=lambda c: tuple(reversed(c)))
            subsets.extend(combos)
        self.subsets = tuple(subsets)
        self.index = {s: i for i, s in enumerate(subsets)}
        # column bitmasks (bit j-1 for position j) in index order
        self.masks = tuple(sum(1 << (j - 1) for j in s) for s in subsets)
        self._expansion = None

    def __len__(self):
        return len(self.subsets)

    def of(self, J):
        J = tuple(sorted(J))
        if J not in self.index:
            raise FlagError("column set %r is not indexed for (n,k)=(%d,%d)" % (J, self.n, self.k))
        return self.index[J]

    def expansion(self):
        """Per-subset last-row Laplace expansion data: for the subset of
        size r, a list of (0-based column, submask, sign) triples."""
        if self._expansion is None:
            exp = []
            for s, mask in zip(self.subsets, self.masks):
                r = len(s)
                items = []
                for t, j in enumerate(s):
                    sign = 1 if (r - 1 + t) % 2 == 0 else -1
                    items.append((j - 1, mask & ~(1 << (j - 1)), sign))
                exp.append(tuple(items))
            self._expansion = tuple(exp)
        return self._expansion


@dataclass(frozen=True)
class FlagClassification:
    """Partition of all indexed column sets into S/T/U bitsets."""

    word: FubiniWord
    S: int
    T: int
    U: int

    def class_of(self, J):
        idx = column_set_index(self.word.n, self.word.k)
        bit = 1 << idx.of(J)
        if self.S & bit:
            return SOMETIMES
        if self.T & bit:
            return TRULY
        return UNVANISHING

    def members(self, which):
        idx = column_set_index(self.word.n, self.word.k)
        bits = {SOMETIMES: self.S, TRULY: self.T, UNVANISHING: self.U}[which]
        return [idx.subsets[i] for i in _iter_bits(bits)]


def _iter_bits(x):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


# ---------------------------------------------------------------------------
# route 1: the alpha test

def classify_flag_alpha(w, J):
    J = tuple(sorted(J))
    h = len(J)
    if h > w.k or h == 0:
        raise FlagError("|J| must be in [k], got %d" % h)
    alpha = alpha_vector(w)
    ref = sorted(alpha[:h])
    aj = sorted(alpha[w[j] - 1] for j in J)
    if ref == aj:
        return UNVANISHING
    if all(a <= b for a, b in zip(ref, aj)):
        return SOMETIMES
    return TRULY


# ---------------------------------------------------------------------------
# route 2: the matching oracle

def classify_flag_matching(w, J):
    J = tuple(sorted(J))
    h = len(J)
    if h > w.k or h == 0:
        raise FlagError("|J| must be in [k], got %d" % h)
    letters = [w[j] for j in J]
    if sorted(letters) == list(range(1, h + 1)):
        # the 1s alone form a permutation submatrix
        return UNVANISHING
    P = pattern_matrix(w)
    adj = [[ci for ci, j in enumerate(J) if P.entry(r, j) != P_ZERO]
           for r in range(1, h + 1)]
    if max_bipartite_matching(adj, h) < h:
        return TRULY
    return SOMETIMES


def classify_all(w, check=True):
    """Classify every indexed column set; the alpha and matching routes
    must agree entrywise (OracleDisagreement otherwise)."""
    idx = column_set_index(w.n, w.k)
    S = T = U = 0
    for i, J in enumerate(idx.subsets):
        c = classify_flag_alpha(w, J)
        if check:
            m = classify_flag_matching(w, J)
            if m != c:
                raise OracleDisagreement(
                    "w=%s J=%r alpha=%s matching=%s" % (w, J, c, m))
        bit = 1 << i
        if c == SOMETIMES:
            S |= bit
        elif c == TRULY:
            T |= bit
        else:
            U |= bit
    return FlagClassification(w, S, T, U)


@lru_cache(maxsize=200000)
def classification(w):
    "Cached alpha-test classification (no cross-check, for hot loops)."
    return classify_all(w, check=False)


# ---------------------------------------------------------------------------
# route 3: randomized prime-field evaluation

def _sample_entry_rows(w, rng, p):
    "Integer rows mod p fitting P_w with nonzero uniform stars."
    P = pattern_matrix(w)
    rows = []
    for row in P.entries:
        rows.append([rng.randint(1, p - 1) if e == STAR else int(e == 1) for e in row])
    return rows


def _apply_unitriangular(rows, rng, p):
    "Left-multiply by a random lower unitriangular matrix, in place."
    k = len(rows)
    n = len(rows[0])
    for i in range(k - 1, 0, -1):
        coeffs = [rng.randint(0, p - 1) for _ in range(i)]
        target = rows[i]
        for m, c in enumerate(coeffs):
            if c:
                src = rows[m]
                for j in range(n):
                    target[j] = (target[j] + c * src[j]) % p
    return rows


def all_flag_minors_mod(rows, idx, p=PRIME):
    """All flag minor values of an integer matrix, one per indexed column
    set, via a shared last-row Laplace expansion over column masks."""
    D = {0: 1}
    out = []
    for (subset, mask, items) in zip(idx.subsets, idx.masks, idx.expansion()):
        r = len(subset)
        row = rows[r - 1]
        s = 0
        for (c, sub, sign) in items:
            a = row[c]
            if a:
                s += sign * a * D[sub]
        s %= p
        D[mask] = s
        out.append(s)
    return out


def _find_zero_assignment(w, J, rng, p, attempts=2):
    """Search for star values making the flag minor on J vanish, by
    solving the minor as a linear function of one star at a time."""
    J = tuple(sorted(J))
    h = len(J)
    P = pattern_matrix(w)
    cells = [(r, j) for (r, j) in P.star_cells() if r <= h and j in J]
    if not cells:
        return False
    rpos = {r: i for i, r in enumerate(range(1, h + 1))}
    cpos = {j: i for i, j in enumerate(J)}
    for _ in range(attempts):
        base = _sample_entry_rows(w, rng, p)
        sub = [[base[r - 1][j - 1] for j in J] for r in range(1, h + 1)]
        for (r, j) in cells:
            ri, ci = rpos[r], cpos[j]
            keep = sub[ri][ci]
            sub[ri][ci] = 0
            d0 = det_mod(sub, p)
            sub[ri][ci] = 1
            d1 = det_mod(sub, p)
            sub[ri][ci] = keep
            slope = (d1 - d0) % p
            if slope:
                root = (-d0) * pow(slope, p - 2, p) % p
                sub[ri][ci] = root
                ok = det_mod(sub, p) == 0
                sub[ri][ci] = keep
                if ok:
                    return True
    return False


def evaluate_flag_randomized(w, J, trials=20, seed=0, p=PRIME):
    """Probabilistic S/T/U estimate: all trials vanish -> truly, mixed or
    a targeted zero assignment found -> sometimes, else unvanishing."""
    if trials < 1:
        raise FlagError("trials must be >= 1")
    J = tuple(sorted(J))
    h = len(J)
    if h > w.k or h == 0:
        raise FlagError("|J| must be in [k], got %d" % h)
    rng = random.Random(seed)
    zeros = nonzeros = 0
    for _ in range(trials):
        rows = _apply_unitriangular(_sample_entry_rows(w, rng, p), rng, p)
        sub = [[rows[r][j - 1] for j in J] for r in range(h)]
        if det_mod(sub, p) == 0:
            zeros += 1
        else:
            nonzeros += 1
    if zeros and nonzeros:
        return SOMETIMES
    if zeros:
        return TRULY
    if _find_zero_assignment(w, J, rng, p):
        return SOMETIMES
    return UNVANISHING


def classify_all_randomized(w, trials=20, seed=0, p=PRIME):
    """Randomized classification of every indexed column set at once.

    Shares the per-sample subset expansion across all column sets, so a
    full sweep costs O(trials * sum_h C(n,h) h) field operations."""
    idx = column_set_index(w.n, w.k)
    rng = random.Random(seed)
    counts = [0] * len(idx)
    for _ in range(trials):
        rows = _apply_unitriangular(_sample_entry_rows(w, rng, p), rng, p)
        vals = all_flag_minors_mod(rows, idx, p)
        for i, v in enumerate(vals):
            if v:
                counts[i] += 1
    S = T = U = 0
    for i, c in enumerate(counts):
        bit = 1 << i
        if c == 0:
            T |= bit
        elif c < trials:
            S |= bit
        elif _find_zero_assignment(w, idx.subsets[i], rng, p):
            S |= bit
        else:
            U |= bit
    return FlagClassification(w, S, T, U)


def general_minor_vanishes(w, I, J, trials=20, seed=0, p=PRIME):
    """Randomized test whether the (I,J) minor vanishes on the whole cell.

    General row sets are not invariant under the unitriangular action, so
    each trial samples a full U * (pattern sample) product; stars may be
    zero here, for genericity over the cell."""
    I = tuple(sorted(I))
    J = tuple(sorted(J))
    if len(I) != len(J):
        raise FlagError("|I| must equal |J|")
    if not I or I[-1] > w.k or J[-1] > w.n:
        raise FlagError("index sets out of range")
    rng = random.Random(seed)
    P = pattern_matrix(w)
    for _ in range(trials):
        rows = []
        for row in P.entries:
            rows.append([rng.randint(0, p - 1) if e == STAR else int(e == 1) for e in row])
        _apply_unitriangular(rows, rng, p)
        sub = [[rows[r - 1][j - 1] for j in J] for r in I]
        if det_mod(sub, p) != 0:
            return False
    return True


def rank_w_h(w, h, J):
    """Maximum over the cell of the rank of the top-h-row submatrix on
    columns J; computed as a generic rank of the pattern."""
    if h < 0 or h > w.k:
        raise FlagError("h out of range")
    if h == 0 or not J:
        return 0
    return generic_rank(pattern_matrix(w), range(1, h + 1), J)


# ---------------------------------------------------------------------------
# relations built on the classification

def _check_shape(v, w):
    if (v.n, v.k) != (w.n, w.k):
        raise WordError("shape mismatch: (%d,%d) vs (%d,%d)" % (v.n, v.k, w.n, w.k))


def touches(v, w):
    "True iff the closure of C_v meets C_w: T_v disjoint from U_w."
    _check_shape(v, w)
    return classification(v).T & classification(w).U == 0


def medium_leq(v, w):
    "Medium roast order: containment of truly-vanishing sets."
    _check_shape(v, w)
    cv, cw = classification(v), classification(w)
    return cv.T & ~cw.T == 0


def medium_leq_alpha(v, w):
    """Direct alpha-order test: every J whose w-multiset dominates the
    w-prefix must also dominate for v."""
    _check_shape(v, w)
    av = alpha_vector(v)
    aw = alpha_vector(w)
    idx = column_set_index(w.n, w.k)
    for J in idx.subsets:
        h = len(J)
        if gale_leq(aw[:h], [aw[w[j] - 1] for j in J]):
            if not gale_leq(av[:h], [av[v[j] - 1] for j in J]):
                return False
    return True


def ehresmann_necessary(v, w):
    "Gale comparison of the alpha-vector prefixes, every h."
    _check_shape(v, w)
    av = alpha_vector(v)
    aw = alpha_vector(w)
    return all(gale_leq(av[:h], aw[:h]) for h in range(1, w.k + 1))
