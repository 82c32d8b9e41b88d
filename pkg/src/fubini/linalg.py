"""Exact linear algebra: rational matrices (arbitrary-precision, no
floats anywhere) and prime-field matrices for randomized identity tests."""

import random
from fractions import Fraction

from .patterns import STAR, ZERO as P_ZERO, ONE as P_ONE

PRIME = 2305843009213693951        # 2^61 - 1
SECOND_PRIME = 2305843009213693967  # next prime above 2^61


class LinalgError(ValueError):
    pass


class RationalMatrix:
    """Immutable matrix with exact Fraction entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(Fraction(e) for e in row) for row in entries)
        if not entries or not entries[0]:
            raise LinalgError("empty matrix")
        if len({len(row) for row in entries}) != 1:
            raise LinalgError("ragged rows")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", len(entries[0]))

    def __setattr__(self, *a):
        raise AttributeError("RationalMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def entry(self, r, j):
        "1-based access."
        return self.entries[r - 1][j - 1]

    def column(self, j):
        return tuple(row[j - 1] for row in self.entries)

    def submatrix(self, rows, cols):
        rows = sorted(rows)
        cols = sorted(cols)
        return RationalMatrix([[self.entries[r - 1][c - 1] for c in cols] for r in rows])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise LinalgError("shape mismatch in product")
        return RationalMatrix(
            [[sum(self.entries[i][t] * other.entries[t][j] for t in range(self.cols))
              for j in range(other.cols)] for i in range(self.rows)])

    def scale_columns(self, scalars):
        if len(scalars) != self.cols:
            raise LinalgError("need one scalar per column")
        return RationalMatrix(
            [[e * Fraction(s) for e, s in zip(row, scalars)] for row in self.entries])

    def __repr__(self):
        return "RationalMatrix(%r)" % ([[str(e) for e in row] for row in self.entries],)

    @classmethod
    def identity(cls, m):
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])


def det(M):
    """Exact determinant by fraction-free Bareiss elimination."""
    if M.rows != M.cols:
        raise LinalgError("determinant needs a square matrix")
    a = [list(row) for row in M.entries]
    m = M.rows
    sign = 1
    prev = Fraction(1)
    for c in range(m - 1):
        if a[c][c] == 0:
            for r in range(c + 1, m):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r in range(c + 1, m):
            for j in range(c + 1, m):
                a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev
            a[r][c] = Fraction(0)
        prev = a[c][c]
    return sign * a[m - 1][m - 1]


def _echelon_rank(rows):
    "Row echelon rank of a list-of-lists of Fractions (consumed)."
    m = len(rows)
    if m == 0:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < m and col < ncols:
        piv = None
        for r in range(rank, m):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pval = prow[col]
        for r in range(rank + 1, m):
            f = rows[r][col]
            if f:
                f = f / pval
                row = rows[r]
                for j in range(col, ncols):
                    row[j] -= f * prow[j]
        rank += 1
        col += 1
    return rank


def rank(M, rows=None, cols=None):
    "Exact rank of the selected submatrix (1-based index sets)."
    if rows is None:
        rows = range(1, M.rows + 1)
    if cols is None:
        cols = range(1, M.cols + 1)
    rows = sorted(set(rows))
    cols = sorted(set(cols))
    if not rows or not cols:
        return 0
    if rows and (rows[0] < 1 or rows[-1] > M.rows):
        raise LinalgError("row index out of range")
    if cols and (cols[0] < 1 or cols[-1] > M.cols):
        raise LinalgError("column index out of range")
    data = [[M.entries[r - 1][c - 1] for c in cols] for r in rows]
    return _echelon_rank(data)


def prefix_rank_profile(M):
    """(k+1) x (n+1) table rho[r][j] = rank of the top-left r x j submatrix."""
    k, n = M.rows, M.cols
    rho = [[0] * (n + 1) for _ in range(k + 1)]
    for r in range(1, k + 1):
        # incremental echelon over growing column prefixes of the top r rows
        basis = []  # echelonized columns, each a list of r Fractions
        for j in range(1, n + 1):
            v = [M.entries[i][j - 1] for i in range(r)]
            for b in basis:
                lead = next(i for i in range(r) if b[i] != 0)
                if v[lead] != 0:
                    f = v[lead] / b[lead]
                    v = [vi - f * bi for vi, bi in zip(v, b)]
            if any(vi != 0 for vi in v):
                basis.append(v)
            rho[r][j] = len(basis)
    return rho


def in_span(v, basis_columns):
    "Exact test whether column vector v lies in the span of the given columns."
    if not basis_columns:
        return all(Fraction(x) == 0 for x in v)
    height = len(v)
    if any(len(b) != height for b in basis_columns):
        raise LinalgError("height mismatch")
    cols = [list(map(Fraction, b)) for b in basis_columns]
    aug = cols + [list(map(Fraction, v))]
    data = [[aug[c][r] for c in range(len(aug))] for r in range(height)]
    r_basis = _echelon_rank([row[:-1] for row in data])
    r_aug = _echelon_rank(data)
    return r_aug == r_basis


def is_full_rank_no_zero_columns(M):
    if any(all(e == 0 for e in M.column(j)) for j in range(1, M.cols + 1)):
        return False
    return rank(M) == M.rows


# ---------------------------------------------------------------------------
# prime field

class PrimeFieldMatrix:
    """Matrix over F_p for a fixed prime p > 2^60."""

    __slots__ = ("rows", "cols", "entries", "p")

    def __init__(self, entries, p=PRIME):
        entries = tuple(tuple(int(e) % p for e in row) for row in entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", len(entries[0]))
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("PrimeFieldMatrix is immutable")

    def entry(self, r, j):
        return self.entries[r - 1][j - 1]


def det_mod(rows, p=PRIME):
    "Determinant of a list-of-lists over F_p by Gaussian elimination."
    a = [list(r) for r in rows]
    m = len(a)
    out = 1
    for c in range(m):
        piv = None
        for r in range(c, m):
            if a[r][c] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        pv = a[c][c] % p
        out = out * pv % p
        inv = pow(pv, p - 2, p)
        for r in range(c + 1, m):
            f = a[r][c] % p
            if f:
                f = f * inv % p
                ac = a[c]
                ar = a[r]
                for j in range(c + 1, m):
                    ar[j] = (ar[j] - f * ac[j]) % p
    return out % p


def rank_mod(rows, p=PRIME):
    a = [[e % p for e in r] for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    rk = 0
    col = 0
    while rk < m and col < ncols:
        piv = None
        for r in range(rk, m):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        a[rk], a[piv] = a[piv], a[rk]
        inv = pow(a[rk][col], p - 2, p)
        for r in range(rk + 1, m):
            f = a[r][col]
            if f:
                f = f * inv % p
                for j in range(col, ncols):
                    a[r][j] = (a[r][j] - f * a[rk][j]) % p
        rk += 1
        col += 1
    return rk


# ---------------------------------------------------------------------------
# sampling

def sample_from_pattern(P, domain="rational-small", seed=0, allow_zero=False, p=PRIME):
    """Fill the stars of a pattern with independent uniform samples.

    rational-small: integers in [-99, 99] (nonzero unless allow_zero);
    prime-field: uniform in F_p (nonzero unless allow_zero).
    """
    rng = random.Random(seed)
    grid = []
    for row in P.entries:
        out = []
        for e in row:
            if e == STAR:
                out.append(_draw(rng, domain, allow_zero, p))
            elif e == P_ONE:
                out.append(1)
            else:
                out.append(0)
        grid.append(out)
    if domain == "prime-field":
        return PrimeFieldMatrix(grid, p)
    return RationalMatrix(grid)


def random_unitriangular(k, domain="rational-small", seed=0, p=PRIME):
    "Lower unitriangular k x k with uniform strictly-below-diagonal entries."
    if k < 1:
        raise LinalgError("k must be positive")
    rng = random.Random(seed)
    grid = [[0] * k for _ in range(k)]
    for i in range(k):
        grid[i][i] = 1
        for j in range(i):
            grid[i][j] = _draw(rng, domain, allow_zero=True, p=p)
    if domain == "prime-field":
        return PrimeFieldMatrix(grid, p)
    return RationalMatrix(grid)


def random_diagonal(n, domain="rational-small", seed=0, p=PRIME):
    "Nonzero diagonal scalars for the right torus action."
    rng = random.Random(seed)
    return tuple(_draw(rng, domain, allow_zero=False, p=p) for _ in range(n))


def _draw(rng, domain, allow_zero, p):
    if domain == "rational-small":
        while True:
            x = rng.randint(-99, 99)
            if x or allow_zero:
                return x
    if domain == "prime-field":
        lo = 0 if allow_zero else 1
        return rng.randint(lo, p - 1)
    raise LinalgError("unknown sampling domain %r" % domain)
