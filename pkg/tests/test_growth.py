import math
from fractions import Fraction

import pytest

from qgrowth.growth import growth_rate_bracket, growth_sequence, verify_growth_bounds
from qgrowth.laurent import q_integer
from qgrowth.models import AoF, AuF, SqU2
from qgrowth.formats import bundled_model


def test_quantum_dimension_sequence_is_q_integers(sq_half):
    rep = growth_sequence(sq_half, 1, 10)
    for n, value, root in rep.terms:
        assert value == q_integer(n + 1).evaluate(Fraction(1, 2))
        assert root == pytest.approx(float(value) ** (1 / n))
    assert rep.terms[1][1] == Fraction(21, 4)


def test_bracket_contains_rate(sq_half):
    lo, hi = growth_rate_bracket(sq_half, 1, 10)
    assert lo == 2.0
    assert hi == pytest.approx(float(q_integer(11).evaluate(Fraction(1, 2))) ** 0.1)
    assert lo <= 2.0 <= hi


def test_classical_growth_is_polynomial():
    rep = growth_sequence(SqU2(1.0), 1, 20, 'integral_dim')
    assert rep.values() == tuple(range(2, 22))
    assert rep.verdict == 'subexponential'
    lo, hi = growth_rate_bracket(SqU2(1.0), 1, 20)
    assert lo == 1.0 and hi == pytest.approx(min((n + 1) ** (1 / n) for n in range(1, 21)))


def test_free_unitary_powers(au3):
    rep = growth_sequence(au3, 'g', 6)
    assert rep.values() == (3, 9, 27, 81, 243, 729)
    assert rep.limit == 3.0 and rep.lower == 1.0


def test_upper_endpoint_is_monotone(ao_vv):
    uppers = [growth_rate_bracket(ao_vv, 1, N)[1] for N in range(1, 16)]
    assert all(b <= a for a, b in zip(uppers, uppers[1:]))


def test_bounds_on_deformation(sq_half):
    rep = verify_growth_bounds(sq_half, 3, 16)
    assert rep.holds and rep.equality_detected and rep.inverse_symmetric
    assert rep.strict_extremes is False


def test_bounds_on_free_unitary():
    rep = verify_growth_bounds(AuF([1.0, 1.0]), 'g', 12)
    assert rep.holds and not rep.equality_detected
    assert rep.lambda_min == rep.lambda_max == 1.0
    assert rep.strict_extremes


def test_bounds_on_free_orthogonal_rank_three(ao_vv):
    rep = verify_growth_bounds(ao_vv, 1, 16)
    assert rep.holds
    assert rep.dim_verdict == 'exponential'
    assert not rep.equality_detected
    assert rep.strict_extremes


def test_rank_two_inverse_symmetry():
    rep = verify_growth_bounds(AoF([0.25, 4.0]), 1, 12)
    assert rep.inverse_symmetric and rep.lambda_min == 0.25 and rep.lambda_max == 4.0


def test_multiplicity_needs_action(sq_half):
    with pytest.raises(ValueError):
        growth_sequence(sq_half, 1, 4, 'multiplicity')
    with pytest.raises(ValueError):
        growth_sequence(sq_half, 1, 0)


def test_table_model_growth():
    s3 = bundled_model('s3')
    rep = growth_sequence(s3, 'std', kind='integral_dim')
    assert rep.N == 12
    assert rep.values() == (2,) * 12
    # a finite group has D_u = 1, but finite depth only brackets it
    assert rep.lower == 1.0 and rep.upper == pytest.approx(2 ** (1 / 12))
    assert rep.verdict == 'undetermined'
    assert math.isclose(growth_sequence(s3, 'std').upper, rep.upper)
