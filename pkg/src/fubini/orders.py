"""The three Fubini-Bruhat posets (medium roast, espresso, decaf),
covering-rule generators, and rankedness diagnostics.

Posets store the full reflexive-transitive relation as per-element
bitsets over a fixed lexicographic enumeration of the words, so that
containment and intersection questions are word-parallel.
"""

from dataclasses import dataclass, field

from .patterns import codimension
from .qpoly import QPoly
from .words import (FubiniWord, WordError, alpha_vector, bruhat_covers,
                    enumerate_words, initial_permutation, swap_letter_values)
from . import flags

KINDS = ("medium", "espresso", "decaf")

DEFAULT_BUDGET = 20000


class OrderError(ValueError):
    pass


class CycleError(OrderError):
    """The touching relation produced a directed cycle (contradicting
    acyclicity of the espresso order)."""


@dataclass(frozen=True)
class CoverMove:
    """A generated relation lower < upper with its provenance.

    kind is "transposition" (params (i, j)), "pushback" (params (j,)) or
    "superpushback" (params (j, p))."""

    kind: str
    params: tuple
    lower: FubiniWord
    upper: FubiniWord
    is_cover: bool = True
    redundancy_preserved: bool = True


def transposition_relation(w, i, j):
    """w < t_ij w when alpha_i(w) < alpha_j(w); the move is a medium
    roast cover exactly when pi(t_ij w) covers pi(w) in S_k."""
    if not 1 <= i < j <= w.k:
        raise OrderError("need 1 <= i < j <= k")
    alpha = alpha_vector(w)
    if alpha[i - 1] >= alpha[j - 1]:
        return None
    upper = swap_letter_values(w, i, j)
    cover = bruhat_covers(initial_permutation(w), initial_permutation(upper))
    return CoverMove("transposition", (i, j), w, upper, is_cover=cover)


def pushback_moves(w):
    """For each redundant position j carrying pi_i with i < k, the word v
    obtained by writing pi_{i+1} there is covered by w."""
    alpha = alpha_vector(w)
    init = set(alpha)
    pi = initial_permutation(w)
    rank = {letter: m for m, letter in enumerate(pi, start=1)}
    moves = []
    for j in range(1, w.n + 1):
        if j in init:
            continue
        i = rank[w[j]]
        if i >= w.k:
            continue
        letters = list(w.letters)
        letters[j - 1] = pi[i]
        moves.append(CoverMove("pushback", (j,), FubiniWord(tuple(letters), w.k), w))
    return moves


def superpushback_moves(w, p):
    """Candidate moves replacing a redundant pi_i by pi_{i+p}.

    Each move records whether the replaced position stays redundant
    (alpha of the new letter still left of j); claims about cover status
    are verified downstream, never assumed."""
    if p < 1:
        raise OrderError("p must be >= 1")
    alpha = alpha_vector(w)
    init = set(alpha)
    pi = initial_permutation(w)
    rank = {letter: m for m, letter in enumerate(pi, start=1)}
    moves = []
    for j in range(1, w.n + 1):
        if j in init:
            continue
        i = rank[w[j]]
        if i + p > w.k:
            continue
        new_letter = pi[i + p - 1]
        letters = list(w.letters)
        letters[j - 1] = new_letter
        preserved = alpha[new_letter - 1] < j
        moves.append(CoverMove("superpushback", (j, p),
                               FubiniWord(tuple(letters), w.k), w,
                               is_cover=True, redundancy_preserved=preserved))
    return moves


# ---------------------------------------------------------------------------

@dataclass
class Poset:
    """A Fubini-Bruhat poset on all of W_{n,k} in lex enumeration order.

    up[i] is the bitset of elements strictly above element i in the
    (transitively closed) relation; hasse_up[i] the bitset of covers."""

    n: int
    k: int
    kind: str
    elements: list
    up: list
    hasse_up: list
    codim: list
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {w: i for i, w in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def leq(self, v, w):
        if v == w:
            return True
        i, j = self.index[v], self.index[w]
        return bool(self.up[i] >> j & 1)

    def hasse_edges(self):
        "Sorted (lower_index, upper_index) pairs."
        return [(i, j) for i in range(len(self.elements))
                for j in _iter_bits(self.hasse_up[i])]

    def relation_pairs(self):
        "All strict related pairs (lower_index, upper_index)."
        return [(i, j) for i in range(len(self.elements))
                for j in _iter_bits(self.up[i])]

    def minimum(self):
        below = [0] * len(self.elements)
        for i, row in enumerate(self.up):
            for j in _iter_bits(row):
                below[j] += 1
        mins = [i for i, b in enumerate(below) if b == 0]
        if len(mins) != 1:
            return None
        return self.elements[mins[0]]

    def __eq__(self, other):
        return (isinstance(other, Poset)
                and (self.n, self.k, self.kind) == (other.n, other.k, other.kind)
                and self.elements == other.elements
                and self.up == other.up
                and self.hasse_up == other.hasse_up
                and self.codim == other.codim)


def _iter_bits(x):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def build_poset(n, k, kind, budget=DEFAULT_BUDGET):
    if kind not in KINDS:
        raise OrderError("unknown order kind %r" % kind)
    elements = list(enumerate_words(n, k))
    if len(elements) > budget:
        raise OrderError("|W_{%d,%d}| = %d exceeds budget %d" % (n, k, len(elements), budget))
    index = {w: i for i, w in enumerate(elements)}
    codim = [codimension(w) for w in elements]
    if kind == "medium":
        up = _medium_relation(elements)
    elif kind == "espresso":
        up = _espresso_relation(elements)
    else:
        up = _decaf_relation(elements, index)
    hasse = _transitive_reduction(up)
    return Poset(n, k, kind, elements, up, hasse, codim, index)


def _medium_relation(elements):
    cls = [flags.classification(w) for w in elements]
    t = [c.T for c in cls]
    V = len(elements)
    up = [0] * V
    for i in range(V):
        ti = t[i]
        row = 0
        for j in range(V):
            if i != j and ti & ~t[j] == 0:
                row |= 1 << j
        up[i] = row
    return up


def _espresso_relation(elements):
    cls = [flags.classification(w) for w in elements]
    V = len(elements)
    up = [0] * V
    for i in range(V):
        ti = cls[i].T
        row = 0
        for j in range(V):
            if i != j and ti & cls[j].U == 0:
                row |= 1 << j
        up[i] = row
    _warshall_closure(up)
    for i in range(V):
        if up[i] >> i & 1:
            raise CycleError("directed cycle through %s in the touching relation"
                             % elements[i])
    return up


def _decaf_relation(elements, index):
    V = len(elements)
    adj = [0] * V
    for w in elements:
        wi = index[w]
        for move in decaf_cover_moves(w):
            adj[index[move.lower]] |= 1 << index[move.upper]
    up = _dag_closure(adj)
    return up


def decaf_cover_moves(w):
    "Transposition-rule covers plus pushback covers out of / into w."
    moves = []
    for i in range(1, w.k):
        for j in range(i + 1, w.k + 1):
            m = transposition_relation(w, i, j)
            if m is not None and m.is_cover:
                moves.append(m)
    moves.extend(pushback_moves(w))
    return moves


def _warshall_closure(up):
    V = len(up)
    for m in range(V):
        bm = 1 << m
        rowm = up[m]
        if not rowm:
            continue
        for i in range(V):
            if up[i] & bm:
                up[i] |= rowm
    # one pass of intermediates suffices (Floyd-Warshall)


def _dag_closure(adj):
    "Transitive closure of a DAG adjacency bitset list, by topo order."
    V = len(adj)
    indeg = [0] * V
    for i in range(V):
        for j in _iter_bits(adj[i]):
            indeg[j] += 1
    stack = [i for i in range(V) if indeg[i] == 0]
    topo = []
    indeg2 = list(indeg)
    while stack:
        i = stack.pop()
        topo.append(i)
        for j in _iter_bits(adj[i]):
            indeg2[j] -= 1
            if indeg2[j] == 0:
                stack.append(j)
    if len(topo) != V:
        raise CycleError("cover moves produced a directed cycle")
    up = [0] * V
    for i in reversed(topo):
        row = 0
        for j in _iter_bits(adj[i]):
            row |= (1 << j) | up[j]
        up[i] = row
    return up


def _transitive_reduction(up):
    "Hasse edges: strict relations not implied by a two-step path."
    V = len(up)
    hasse = [0] * V
    for i in range(V):
        row = up[i]
        implied = 0
        for j in _iter_bits(row):
            implied |= up[j]
        hasse[i] = row & ~implied
    return hasse


# ---------------------------------------------------------------------------
# diagnostics

def is_ranked(P):
    """True iff every Hasse edge has codimension gap exactly 1; on
    failure returns a violating edge as certificate."""
    for (i, j) in P.hasse_edges():
        if P.codim[j] - P.codim[i] != 1:
            return False, (P.elements[i], P.elements[j],
                           P.codim[i], P.codim[j])
    return True, None


def rank_generating_function(P):
    "Sum of q^codim over the elements; only defined for ranked posets."
    ok, cert = is_ranked(P)
    if not ok:
        raise OrderError("poset is not ranked; certificate %r" % (cert,))
    top = max(P.codim)
    coeffs = [0] * (top + 1)
    for c in P.codim:
        coeffs[c] += 1
    return QPoly(coeffs)


def relation_inclusion(Pa, Pb):
    "True iff every relation of Pa also holds in Pb (same element set)."
    if Pa.elements != Pb.elements:
        raise OrderError("element sets differ")
    return all(a & ~b == 0 for a, b in zip(Pa.up, Pb.up))


class LiftingPrecondition(OrderError):
    """Inputs do not satisfy the lifting hypotheses (distinct from a
    property failure)."""


def lifting_check(v, w, i, relation="medium"):
    """Check s_i v <= s_i w (or the touching variant) for a qualifying
    pair: i+1 starts before i in both words and v <= w (resp. v -> w)."""
    if (v.n, v.k) != (w.n, w.k):
        raise WordError("shape mismatch")
    if not 1 <= i <= v.k - 1:
        raise LiftingPrecondition("need i in [k-1]")
    av, aw = alpha_vector(v), alpha_vector(w)
    if not (av[i] < av[i - 1] and aw[i] < aw[i - 1]):
        raise LiftingPrecondition("need alpha_{i+1} < alpha_i in both words")
    sv = swap_letter_values(v, i, i + 1)
    sw = swap_letter_values(w, i, i + 1)
    if relation == "medium":
        if not flags.medium_leq(v, w):
            raise LiftingPrecondition("v <= w required")
        return flags.medium_leq(sv, sw)
    if relation == "touch":
        if not flags.touches(v, w):
            raise LiftingPrecondition("v -> w required")
        return flags.touches(sv, sw)
    raise OrderError("unknown relation %r" % relation)
