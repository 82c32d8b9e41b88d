"""Fubini words and their basic combinatorial statistics.

A Fubini word of length n on the alphabet [k] is the one-line notation
of a surjection [n] -> [k].  Everything here is 1-based: positions run
over 1..n and letters over 1..k, matching the usual conventions for
permutations in one-line notation.
"""

from dataclasses import dataclass
from functools import lru_cache


class WordError(ValueError):
    """Invalid Fubini word or malformed word input."""


@dataclass(frozen=True)
class FubiniWord:
    """A surjection [n] -> [k] in one-line notation."""

    letters: tuple
    k: int

    def __post_init__(self):
        if not self.letters:
            raise WordError("empty word")
        seen = set(self.letters)
        if self.k < 1 or self.k > len(self.letters):
            raise WordError("need 1 <= k <= n, got k=%d n=%d" % (self.k, len(self.letters)))
        if seen != set(range(1, self.k + 1)):
            raise WordError("word %r is not surjective onto [%d]" % (list(self.letters), self.k))

    @property
    def n(self):
        return len(self.letters)

    def __getitem__(self, j):
        "Letter at 1-based position j."
        return self.letters[j - 1]

    def __str__(self):
        if self.k <= 9:
            return "".join(str(a) for a in self.letters)
        return ",".join(str(a) for a in self.letters)

    def __iter__(self):
        return iter(self.letters)


def word(letters, k=None):
    letters = tuple(letters)
    if k is None:
        k = max(letters) if letters else 0
    return FubiniWord(letters, k)


def parse_word(text, k=None):
    """Parse a word from contiguous digits (k <= 9 only) or comma-separated ints."""
    text = text.strip()
    if not text:
        raise WordError("empty input")
    if "," in text:
        try:
            letters = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise WordError("malformed comma-separated word %r" % text)
    else:
        if not text.isdigit():
            raise WordError("malformed word %r" % text)
        letters = tuple(int(c) for c in text)
        if k is not None and k > 9:
            raise WordError("digit form is ambiguous for k > 9; use commas")
    if any(a < 1 for a in letters):
        raise WordError("letters must be positive")
    if k is None:
        k = max(letters)
    if max(letters) > k:
        raise WordError("letter %d exceeds k=%d" % (max(letters), k))
    return FubiniWord(letters, k)


def enumerate_words(n, k):
    """Yield every word of W_{n,k} exactly once, in lex order of one-line notation.

    Prefix recursion with a surjectivity prune, so it scales past the
    sizes where filtering all k^n strings would be wasteful.
    """
    if k < 1 or k > n:
        raise WordError("need 1 <= k <= n, got k=%d n=%d" % (k, n))
    prefix = [0] * n

    def rec(pos, missing):
        if missing > n - pos:
            return
        if pos == n:
            yield FubiniWord(tuple(prefix), k)
            return
        for a in range(1, k + 1):
            fresh = prefix[:pos].count(a) == 0
            prefix[pos] = a
            yield from rec(pos + 1, missing - 1 if fresh else missing)

    yield from rec(0, k)


def count_words(n, k):
    "k! * S(n,k), by the Stirling recurrence."
    return _factorial(k) * stirling2(n, k)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def stirling2(n, k):
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


# ---------------------------------------------------------------------------
# alpha / beta statistics

def alpha_vector(w):
    "alpha[i-1] = position of the first i in w (1-based)."
    alpha = [0] * w.k
    for j in range(w.n, 0, -1):
        alpha[w[j] - 1] = j
    return tuple(alpha)


def initial_positions(w):
    "The set of first-occurrence positions, in increasing order."
    return tuple(sorted(alpha_vector(w)))


def alpha_multiset(w, J):
    "Sorted multiset {alpha_{w_j} : j in J}."
    alpha = alpha_vector(w)
    for j in J:
        if not 1 <= j <= w.n:
            raise WordError("position %d out of range [%d]" % (j, w.n))
    return tuple(sorted(alpha[w[j] - 1] for j in J))


def initial_permutation(w):
    "pi(w) in S_k: the subword of first occurrences, in position order."
    init = set(alpha_vector(w))
    return tuple(w[j] for j in range(1, w.n + 1) if j in init)


def ordered_set_partition(w):
    "Block i is the set of positions carrying letter i."
    blocks = [[] for _ in range(w.k)]
    for j in range(1, w.n + 1):
        blocks[w[j] - 1].append(j)
    return tuple(tuple(b) for b in blocks)


def beta_chain(w):
    "beta_i = positions carrying one of the first i initial letters."
    pi = initial_permutation(w)
    rank = {letter: i for i, letter in enumerate(pi, start=1)}
    chain = []
    for i in range(1, w.k + 1):
        chain.append(tuple(j for j in range(1, w.n + 1) if rank[w[j]] <= i))
    return tuple(chain)


def convexify(w):
    "The unique convex word with the same initial permutation and content."
    pi = initial_permutation(w)
    counts = {a: 0 for a in range(1, w.k + 1)}
    for a in w:
        counts[a] += 1
    letters = []
    for a in pi:
        letters.extend([a] * counts[a])
    return FubiniWord(tuple(letters), w.k)


def is_convex(w):
    return convexify(w) == w


def standardize(w):
    "Replace the n-k redundant letters with k+1, ..., n from left to right."
    init = set(alpha_vector(w))
    nxt = w.k + 1
    out = []
    for j in range(1, w.n + 1):
        if j in init:
            out.append(w[j])
        else:
            out.append(nxt)
            nxt += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Gale order and permutation utilities

def gale_leq(A, B):
    "Elementwise comparison of the sorted multisets A and B."
    A = sorted(A)
    B = sorted(B)
    if len(A) != len(B):
        raise WordError("Gale comparison needs equal sizes, got %d and %d" % (len(A), len(B)))
    return all(a <= b for a, b in zip(A, B))


def is_permutation(p):
    return sorted(p) == list(range(1, len(p) + 1))


def inversions(p):
    m = len(p)
    return sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])


def bruhat_leq(u, v):
    "Ehresmann criterion: every sorted prefix of u is Gale-below that of v."
    if len(u) != len(v):
        raise WordError("permutations must have equal length")
    su, sv = [], []
    for i in range(len(u) - 1):
        _insort(su, u[i])
        _insort(sv, v[i])
        if any(a > b for a, b in zip(su, sv)):
            return False
    return True


def _insort(xs, x):
    lo, hi = 0, len(xs)
    while lo < hi:
        mid = (lo + hi) // 2
        if xs[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    xs.insert(lo, x)


def bruhat_covers(u, v):
    "True iff v = t_ab u with exactly one more inversion than u."
    if len(u) != len(v):
        raise WordError("permutations must have equal length")
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    if u[i] != v[j] or u[j] != v[i]:
        return False
    return inversions(v) == inversions(u) + 1


def swap_letter_values(w, a, b):
    "Exchange the letter values a and b throughout the one-line notation."
    trans = {a: b, b: a}
    return FubiniWord(tuple(trans.get(x, x) for x in w), w.k)
