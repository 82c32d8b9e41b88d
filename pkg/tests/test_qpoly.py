import pytest

from fubini.qpoly import ONE, QPoly, q_factorial, q_int, q_stirling


def test_qpoly_arithmetic():
    a = QPoly([1, 2])
    b = QPoly([0, 1, 1])
    assert (a + b).coeffs == (1, 3, 1)
    assert (a * b).coeffs == (0, 1, 3, 2)
    assert QPoly([0, 0]) == QPoly()
    assert QPoly.monomial(3, 2).coeffs == (0, 0, 0, 2)
    assert a(3) == 7
    assert QPoly([1, 2, 3]).reverse().coeffs == (3, 2, 1)
    assert str(QPoly([1, 3, 2])) == "1 + 3q + 2q^2"
    assert str(QPoly()) == "0"


def test_q_int_and_factorial():
    assert q_int(3).coeffs == (1, 1, 1)
    assert q_factorial(3).coeffs == (1, 2, 2, 1)
    assert q_factorial(0) == ONE
    # evaluation at q = 1 gives the classical factorial
    assert q_factorial(5)(1) == 120


def test_q_stirling_values():
    assert q_stirling(3, 2).coeffs == (2, 1)          # 2 + q
    assert q_stirling(4, 2).coeffs == (3, 3, 1)
    assert q_stirling(5, 5) == ONE
    # q = 1 recovers the classical Stirling numbers
    assert q_stirling(5, 3)(1) == 25
    assert q_stirling(6, 3)(1) == 90
    with pytest.raises(ValueError):
        q_stirling(2, 3)
