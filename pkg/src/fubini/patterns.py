"""Pattern matrices, dimension statistics, generic rank, and the
codimension generating-function identities."""

from dataclasses import dataclass

from .qpoly import QPoly, q_factorial, q_stirling
from .words import FubiniWord, alpha_vector, enumerate_words

ZERO, ONE, STAR = 0, 1, 2

_RENDER = {ZERO: "0", ONE: "1", STAR: "*"}


@dataclass(frozen=True)
class PatternMatrix:
    """k x n grid over {0, 1, *} canonically representing a cell.

    Each column j holds its single 1 at row w_j; stars mark the free
    entries, which always sit in rows whose letter starts strictly
    earlier than the letter of the column.
    """

    word: FubiniWord
    entries: tuple  # tuple of k row-tuples of length n

    @property
    def k(self):
        return self.word.k

    @property
    def n(self):
        return self.word.n

    def entry(self, r, j):
        "Entry at 1-based (row, column)."
        return self.entries[r - 1][j - 1]

    def star_cells(self):
        "All (row, col) star positions, 1-based, row-major."
        return [(r + 1, j + 1)
                for r, row in enumerate(self.entries)
                for j, e in enumerate(row) if e == STAR]

    def render(self):
        return "\n".join(" ".join(_RENDER[e] for e in row) for row in self.entries)


def pattern_matrix(w):
    """Build P_w: start from the 0/1 matrix of w and star every position
    (w_i, j) with i initial, i < alpha_{w_j}, and either j initial with
    w_i < w_j, or j redundant."""
    alpha = alpha_vector(w)
    init = set(alpha)
    grid = [[ZERO] * w.n for _ in range(w.k)]
    for j in range(1, w.n + 1):
        grid[w[j] - 1][j - 1] = ONE
    for j in range(1, w.n + 1):
        a_j = alpha[w[j] - 1]
        j_initial = j in init
        for i in init:
            if i >= a_j:
                continue
            if (j_initial and w[i] < w[j]) or not j_initial:
                grid[w[i] - 1][j - 1] = STAR
    return PatternMatrix(w, tuple(tuple(row) for row in grid))


def dimension(w):
    "Number of stars in P_w."
    P = pattern_matrix(w)
    return sum(row.count(STAR) for row in P.entries)


def cell_dimension(w):
    return dimension(w) + w.k * (w.k - 1) // 2


def codimension(w):
    return w.n * (w.k - 1) - cell_dimension(w)


# ---------------------------------------------------------------------------
# generic rank via bipartite matching

def generic_rank(P, rows, cols):
    """Maximum rank over all matrices fitting P, restricted to the given
    1-based row and column sets.

    Equals the maximum matching on nonzero cells: within any square
    subpattern the determinant monomials never cancel, because a star
    set determines the remaining 1-cells (one per column) and hence the
    whole permutation term.
    """
    rows = sorted(set(rows))
    cols = sorted(set(cols))
    adj = []
    for r in rows:
        adj.append([ci for ci, j in enumerate(cols) if P.entry(r, j) != ZERO])
    return max_bipartite_matching(adj, len(cols))


def max_bipartite_matching(adj, n_right):
    """Augmenting-path maximum matching; adj[l] lists right-neighbors of l."""
    match_right = [-1] * n_right

    def augment(l, seen):
        for r in adj[l]:
            if seen[r]:
                continue
            seen[r] = True
            if match_right[r] < 0 or augment(match_right[r], seen):
                match_right[r] = l
                return True
        return False

    size = 0
    for l in range(len(adj)):
        if augment(l, [False] * n_right):
            size += 1
    return size


# ---------------------------------------------------------------------------
# generating functions

def dim_polynomial(n, k):
    "Sum of q^{dim(w)} over W_{n,k}."
    coeffs = {}
    for w in enumerate_words(n, k):
        d = dimension(w)
        coeffs[d] = coeffs.get(d, 0) + 1
    top = max(coeffs)
    return QPoly([coeffs.get(i, 0) for i in range(top + 1)])


def poincare_polynomial(n, k):
    "Sum of q^{codim(C_w)} over W_{n,k}."
    coeffs = {}
    for w in enumerate_words(n, k):
        c = codimension(w)
        coeffs[c] = coeffs.get(c, 0) + 1
    top = max(coeffs)
    return QPoly([coeffs.get(i, 0) for i in range(top + 1)])


def rev_q_stirling(n, k):
    return q_stirling(n, k).reverse()


__all__ = [
    "ZERO", "ONE", "STAR", "PatternMatrix", "pattern_matrix",
    "dimension", "cell_dimension", "codimension",
    "generic_rank", "max_bipartite_matching",
    "dim_polynomial", "poincare_polynomial", "rev_q_stirling",
    "q_factorial", "q_stirling",
]
