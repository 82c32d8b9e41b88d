"""Fubini word combinatorics: pattern matrices, flag-minor
classification, the three Fubini-Bruhat orders, ranked essential sets,
and exact Bruhat decomposition of matrices.

The package is organized by topic:

- words:      Fubini words, alpha/beta statistics, Gale and Bruhat orders
- qpoly:      integer polynomials in q, q-factorials, q-Stirling numbers
- patterns:   pattern matrices, cell dimensions, generic rank
- linalg:     exact rational and prime-field linear algebra
- flags:      S/T/U classification of flag minors by three oracles
- orders:     medium roast / espresso / decaf posets and cover moves
- essential:  essential sets, membership tests, matrix decomposition
- serialize:  JSON/DOT import and export
- figures:    matplotlib rendering of posets and reports
- verify:     batch cross-oracle property suites
- cli:        the `fubini` command-line tool
"""

from .words import (FubiniWord, word, parse_word, enumerate_words, count_words,
                    alpha_vector, initial_permutation, beta_chain, convexify,
                    standardize)
from .patterns import (pattern_matrix, dimension, cell_dimension, codimension,
                       generic_rank, poincare_polynomial)
from .flags import (classify_all, classification, classify_all_randomized,
                    touches, medium_leq)
from .orders import build_poset, is_ranked, rank_generating_function
from .essential import ranked_essential_set, member_closure_flags, \
    member_closure_ess, medium_leq_ess, decompose, recompose

__all__ = [
    "FubiniWord", "word", "parse_word", "enumerate_words", "count_words",
    "alpha_vector", "initial_permutation", "beta_chain", "convexify",
    "standardize",
    "pattern_matrix", "dimension", "cell_dimension", "codimension",
    "generic_rank", "poincare_polynomial",
    "classify_all", "classification", "classify_all_randomized",
    "touches", "medium_leq",
    "build_poset", "is_ranked", "rank_generating_function",
    "ranked_essential_set", "member_closure_flags", "member_closure_ess",
    "medium_leq_ess", "decompose", "recompose",
]

__version__ = "0.1.0"
