import pytest

from fubini import flags
from fubini.flags import (SOMETIMES, TRULY, UNVANISHING, FlagError,
                          classify_all, classify_all_randomized,
                          classify_flag_alpha, classify_flag_matching,
                          column_set_index, ehresmann_necessary,
                          evaluate_flag_randomized, general_minor_vanishes,
                          medium_leq, medium_leq_alpha, rank_w_h, touches)
from fubini.words import bruhat_leq, enumerate_words, parse_word


def test_column_set_index():
    idx = column_set_index(4, 2)
    assert len(idx) == 4 + 6
    assert idx.subsets[:4] == ((1,), (2,), (3,), (4,))
    assert idx.of((2, 1)) == idx.of((1, 2))
    with pytest.raises(FlagError):
        idx.of((1, 2, 3))        # size 3 > k


def test_worked_example_classification():
    # alpha(21231231) = (2,1,4); J = {2,6,8} carries letters (1,3,1)
    w = parse_word("21231231")
    assert classify_flag_alpha(w, (2, 6, 8)) == TRULY
    assert classify_flag_matching(w, (2, 6, 8)) == TRULY
    assert evaluate_flag_randomized(w, (2, 6, 8), trials=20, seed=0) == TRULY


def test_single_column_classes():
    w = parse_word("31123")
    # the one-row flag minor on column j is the entry A[1, j]
    assert classify_flag_alpha(w, (2,)) == UNVANISHING
    assert classify_flag_alpha(w, (1,)) == TRULY
    assert classify_flag_alpha(w, (5,)) == TRULY


def test_general_minor_worked_example():
    # the ({2},{1}) minor vanishes identically on the cell of 31123
    w = parse_word("31123")
    assert general_minor_vanishes(w, (2,), (1,), trials=20, seed=0)
    assert not general_minor_vanishes(w, (1,), (2,), trials=20, seed=0)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 3), (5, 3)])
def test_oracle_triangle(n, k):
    for w in enumerate_words(n, k):
        cls = classify_all(w, check=True)   # alpha vs matching, entrywise
        rnd = classify_all_randomized(w, trials=20, seed=0)
        assert (cls.S, cls.T, cls.U) == (rnd.S, rnd.T, rnd.U)
        full = (1 << len(column_set_index(n, k))) - 1
        assert cls.S | cls.T | cls.U == full
        assert not (cls.S & cls.T or cls.S & cls.U or cls.T & cls.U)


def test_classification_members():
    w = parse_word("1323")
    cls = classify_all(w)
    for which in (SOMETIMES, TRULY, UNVANISHING):
        for J in cls.members(which):
            assert cls.class_of(J) == which


def test_touching_worked_example():
    v = parse_word("1323")
    w = parse_word("1123")
    assert touches(v, w)
    assert not medium_leq(v, w)
    assert not medium_leq(w, v)


def test_touching_not_symmetric_or_transitive():
    a, b, c = parse_word("1323"), parse_word("1123"), parse_word("1132")
    assert touches(a, b) and touches(b, c) and not touches(a, c)


@pytest.mark.parametrize("n,k", [(4, 2), (4, 3), (5, 3)])
def test_order_tests_agree(n, k):
    ws = list(enumerate_words(n, k))
    for v in ws:
        for w in ws:
            m = medium_leq(v, w)
            assert m == medium_leq_alpha(v, w)
            if m:
                assert touches(v, w)
                assert ehresmann_necessary(v, w)


def test_k_equals_n_is_bruhat():
    ws = list(enumerate_words(4, 4))
    for v in ws:
        for w in ws:
            assert medium_leq(v, w) == bruhat_leq(v.letters, w.letters)


def test_rank_w_h():
    w = parse_word("31422")
    assert rank_w_h(w, 0, (1, 2)) == 0
    assert rank_w_h(w, 4, (1, 2, 3, 4, 5)) == 4
    assert rank_w_h(w, 1, (1,)) == 0
    with pytest.raises(FlagError):
        rank_w_h(w, 5, (1,))


def test_shape_checks():
    with pytest.raises(Exception):
        medium_leq(parse_word("12"), parse_word("112"))
    with pytest.raises(FlagError):
        classify_flag_alpha(parse_word("12"), ())
