from fractions import Fraction

import pytest

from qgrowth.laurent import LaurentPoly, q_integer


def direct_q_integer(n):
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n), written out term by term."""
    return LaurentPoly.from_exponents(n - 1 - 2 * k for k in range(n))


@pytest.mark.parametrize('n', range(0, 30))
def test_q_integer_matches_direct_expansion(n):
    assert q_integer(n) == direct_q_integer(n)


def test_q_integer_negative_and_values():
    assert q_integer(-3) == -q_integer(3)
    assert q_integer(3).evaluate(Fraction(1, 2)) == Fraction(21, 4)
    assert q_integer(5).evaluate(1) == 5


def test_q_integer_is_bar_invariant():
    for n in range(12):
        assert q_integer(n).bar() == q_integer(n)


def test_arithmetic():
    p = LaurentPoly({1: 1, -1: 1})
    assert p * p == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert p - p == 0
    assert (p + 3).as_dict() == {1: 1, -1: 1, 0: 3}
    assert 2 * p == p + p
    assert not LaurentPoly()
    assert hash(p) == hash(LaurentPoly({-1: 1, 1: 1}))


def test_exponents_and_evaluation():
    p = LaurentPoly({2: 2, -1: 1})
    assert p.exponents() == (-1, 2, 2)
    assert p.evaluate(2.0) == pytest.approx(8.5)
    with pytest.raises(ValueError):
        (-p).exponents()


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({1: 0.5})
