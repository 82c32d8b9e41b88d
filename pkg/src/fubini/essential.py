"""Generalized Rothe diagrams, ranked essential sets, rank-condition
membership tests, and exact Bruhat decomposition of matrices."""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .flags import classification, column_set_index
from .linalg import LinalgError, RationalMatrix, det, in_span, prefix_rank_profile, rank
from .patterns import ONE as P_ONE, STAR, ZERO as P_ZERO, pattern_matrix, generic_rank
from .words import (FubiniWord, alpha_vector, beta_chain, convexify,
                    initial_permutation, is_permutation, standardize)


class EssentialError(ValueError):
    pass


class MatrixDomainError(ValueError):
    """Input matrix is not full rank or has a zero column."""


class DecompositionError(ValueError):
    pass


def rothe_diagram(p):
    "D(p) = {(p_j, i) : i < j and p_i > p_j} in matrix coordinates."
    if not is_permutation(p):
        raise EssentialError("not a permutation: %r" % (p,))
    m = len(p)
    return frozenset((p[j - 1], i)
                     for j in range(1, m + 1)
                     for i in range(1, j)
                     if p[i - 1] > p[j - 1])


def essential_cells(p):
    "NE corners of the Rothe diagram: cells with no east or south neighbor."
    D = rothe_diagram(p)
    return frozenset((i, j) for (i, j) in D
                     if (i + 1, j) not in D and (i, j + 1) not in D)


def fubini_diagram(w):
    "D(std(conv(w))); always contained in the top k rows."
    D = rothe_diagram(standardize(convexify(w)))
    if any(i > w.k for (i, j) in D):
        raise EssentialError("diagram cell below row k for %s" % w)
    return D


@dataclass(frozen=True)
class EssentialTriple:
    """Rank condition: the top h rows on the columns beta have rank <= r."""

    h: int
    beta: tuple
    r: int


def ranked_essential_set(w, strict=True):
    """Triples (h, beta_i(w), r) for essential cells (h, |beta_i|) of
    std(conv(w)), with r the generic rank of the pattern there.

    An essential cell whose column index matches no |beta_i| cannot occur
    per the definition; it is guarded and reported, not patched.  With
    strict=False returns (triples, unmatched_cells) instead of raising."""
    cells = sorted(essential_cells(standardize(convexify(w))))
    betas = beta_chain(w)
    size_to_beta = {len(b): b for b in betas}
    P = pattern_matrix(w)
    triples = []
    unmatched = []
    for (h, c) in cells:
        if c not in size_to_beta:
            unmatched.append((h, c))
            continue
        beta = size_to_beta[c]
        r = generic_rank(P, range(1, h + 1), beta)
        triples.append(EssentialTriple(h, beta, r))
    if strict and unmatched:
        raise EssentialError(
            "essential cells %r of %s match no beta size (beta sizes %r)"
            % (unmatched, w, sorted(size_to_beta)))
    if strict:
        return triples
    return triples, unmatched


from functools import lru_cache


@lru_cache(maxsize=100000)
def _ess_triples(w):
    return tuple(ranked_essential_set(w, strict=False)[0])


def _require_domain(A, k, n):
    if (A.rows, A.cols) != (k, n):
        raise MatrixDomainError("matrix is %dx%d, expected %dx%d"
                                % (A.rows, A.cols, k, n))
    if not linalg.is_full_rank_no_zero_columns(A):
        raise MatrixDomainError("matrix must be full rank with no zero columns")


def member_closure_flags(A, w, validate=True):
    "True iff every flag minor indexed by T_w vanishes on A (exact)."
    if validate:
        _require_domain(A, w.k, w.n)
    cls = classification(w)
    for J in cls.members("T"):
        h = len(J)
        if det(A.submatrix(range(1, h + 1), J)) != 0:
            return False
    return True


def member_closure_flags_bitset(zero_minor_bits, w):
    """Membership from a precomputed bitset of vanishing flag minors of A
    over the column-set index (batch form of member_closure_flags)."""
    return classification(w).T & ~zero_minor_bits == 0


def zero_flag_minor_bits(A, w_shape):
    "Bitset over the column-set index marking the vanishing flag minors of A."
    n, k = w_shape
    idx = column_set_index(n, k)
    bits = 0
    for i, J in enumerate(idx.subsets):
        h = len(J)
        if det(A.submatrix(range(1, h + 1), J)) == 0:
            bits |= 1 << i
    return bits


def member_closure_ess(A, w, validate=True):
    "True iff every ranked essential-set condition of w holds for A."
    if validate:
        _require_domain(A, w.k, w.n)
    for t in _ess_triples(w):
        if rank(A, range(1, t.h + 1), t.beta) > t.r:
            return False
    return True


def medium_leq_ess(v, w):
    """Essential-set order test: each triple of v is dominated by some
    triple of w via max(0, m-h) + |beta_j(v) \\ beta_i(w)| <= s - r."""
    if (v.n, v.k) != (w.n, w.k):
        raise EssentialError("shape mismatch")
    tv = _ess_triples(v)
    tw = _ess_triples(w)
    for t in tv:
        bj = set(t.beta)
        ok = False
        for u in tw:
            excess = max(0, t.h - u.h) + len(bj.difference(u.beta))
            if excess <= t.r - u.r:
                ok = True
                break
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# Bruhat decomposition of explicit matrices

def decompose(A):
    """Factor A = U * A' * T exactly, with U lower unitriangular, A'
    fitting the pattern of the recovered word, and T diagonal.

    Returns (w, Aprime, U, t) with t the tuple of diagonal scalars."""
    k, n = A.rows, A.cols
    if not linalg.is_full_rank_no_zero_columns(A):
        raise MatrixDomainError("matrix must be full rank with no zero columns")
    rho = prefix_rank_profile(A)

    # initial positions: full-column-prefix rank jumps
    initials = [j for j in range(1, n + 1) if rho[k][j] > rho[k][j - 1]]
    if len(initials) != k:
        raise DecompositionError("expected %d rank jumps, found %d" % (k, len(initials)))

    letters = [0] * n
    for j in initials:
        # first row prefix at which column j leaves the span of its predecessors
        for r in range(1, k + 1):
            if rho[r][j] > rho[r][j - 1]:
                letters[j - 1] = r
                break
    pi = tuple(letters[j - 1] for j in initials)
    if sorted(pi) != list(range(1, k + 1)):
        raise DecompositionError("initial letters %r are not a permutation" % (pi,))

    init_cols = [A.column(j) for j in initials]
    for j in range(1, n + 1):
        if letters[j - 1]:
            continue
        col = A.column(j)
        for m in range(1, k + 1):
            if in_span(col, init_cols[:m]):
                letters[j - 1] = pi[m - 1]
                break
        else:
            raise DecompositionError("column %d not in the span of initial columns" % j)
    w = FubiniWord(tuple(letters), k)

    alpha = alpha_vector(w)
    # LU of the initial columns ordered by letter value: the unit lower
    # factor is the unitriangular part of the decomposition
    C = [[A.entry(r, alpha[i]) for i in range(k)] for r in range(1, k + 1)]
    L = _unit_lower_lu(C)
    B = _forward_solve(L, A)

    t = []
    for j in range(1, n + 1):
        tj = B.entry(w[j], j)
        if tj == 0:
            raise DecompositionError("zero pivot for column %d" % j)
        t.append(tj)
    Aprime = B.scale_columns([Fraction(1) / tj for tj in t])

    P = pattern_matrix(w)
    for r in range(1, k + 1):
        for j in range(1, n + 1):
            e = P.entry(r, j)
            v = Aprime.entry(r, j)
            if e == P_ZERO and v != 0:
                raise DecompositionError("nonzero entry at forced zero (%d,%d)" % (r, j))
            if e == P_ONE and v != 1:
                raise DecompositionError("entry at (%d,%d) is %s, expected 1" % (r, j, v))
    U = RationalMatrix(L)
    return w, Aprime, U, tuple(t)


def _unit_lower_lu(C):
    "Doolittle LU without pivoting; returns the unit lower factor."
    k = len(C)
    a = [list(map(Fraction, row)) for row in C]
    L = [[Fraction(1) if i == j else Fraction(0) for j in range(k)] for i in range(k)]
    for c in range(k):
        if a[c][c] == 0:
            raise DecompositionError("LU pivot %d vanished" % (c + 1))
        for r in range(c + 1, k):
            f = a[r][c] / a[c][c]
            L[r][c] = f
            if f:
                for j in range(c, k):
                    a[r][j] -= f * a[c][j]
    return L


def _forward_solve(L, A):
    "Compute L^{-1} A by forward substitution (L unit lower triangular)."
    k = len(L)
    data = [list(row) for row in A.entries]
    for r in range(k):
        for m in range(r):
            f = L[r][m]
            if f:
                for j in range(A.cols):
                    data[r][j] -= f * data[m][j]
    return RationalMatrix(data)


def recompose(U, Aprime, t):
    "U * A' * diag(t), the inverse of decompose."
    return (U @ Aprime).scale_columns(t)
