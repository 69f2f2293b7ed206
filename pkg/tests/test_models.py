import json
import math
from fractions import Fraction

import pytest

from qgrowth.fusion import FusionError
from qgrowth.laurent import q_integer
from qgrowth.models import AoF, AuF, ModelError, SqU2, lambda_bounds, model_from_dict, q_from_trace
from qgrowth.spectra import EigenSpectrum


def test_sq_u2_exact_data(sq_half):
    assert sq_half.qdim(2) == Fraction(21, 4)
    assert sq_half.qdim(2) == q_integer(3).evaluate(Fraction(1, 2))
    assert sq_half.intdim(5) == 6
    assert sq_half.jj_spectrum(2) == EigenSpectrum.from_exponents([2, 0, -2], 0.5)
    assert lambda_bounds(sq_half, 3) == (0.125, 8.0)


def test_sq_u2_depends_on_absolute_value():
    assert SqU2(-0.5).jj_spectrum(3) == SqU2(0.5).jj_spectrum(3)
    assert SqU2(-1).is_kac and SqU2(-1).jj_spectrum(4).is_trivial()
    with pytest.raises(ModelError):
        SqU2(1.5)


def test_q_from_trace():
    q = q_from_trace(3.5)
    assert q + 1 / q == pytest.approx(3.5)
    assert q == pytest.approx((3.5 - math.sqrt(8.25)) / 2)
    with pytest.raises(ModelError):
        q_from_trace(1.0)


def test_ao_f_dimensions(ao_vv):
    q = ao_vv.q
    for r in range(8):
        # quantum dimensions are the q-integers of the equivalent deformation
        assert float(ao_vv.qdim(r)) == pytest.approx(q_integer(r + 1).evaluate(q), rel=1e-12)
    rho = (3 + math.sqrt(5)) / 2
    for r in range(12):
        chebyshev = (rho ** (r + 1) - rho ** -(r + 1)) / (rho - 1 / rho)
        assert ao_vv.intdim(r) == round(chebyshev)


def test_ao_f_spectrum_traces(ao_vv):
    for r in range(8):
        s = ao_vv.jj_spectrum(r)
        assert s.cardinality == ao_vv.intdim(r)
        assert s.exact_total() == ao_vv.qdim(r)
        assert s.inverse_total() == pytest.approx(float(ao_vv.qdim(r)))


def test_ao_f_spectrum_is_clebsch_gordan_compatible(ao_vv):
    for a in range(4):
        for b in range(4):
            lhs = ao_vv.jj_spectrum(a).tensor(ao_vv.jj_spectrum(b))
            rhs = EigenSpectrum()
            for c, m in ao_vv.fusion.fuse(a, b).items():
                for _ in range(m):
                    rhs = rhs + ao_vv.jj_spectrum(c)
            assert lhs == rhs


def test_rank_two_ao_f_matches_deformation():
    ao, sq = AoF([0.25, 4.0]), SqU2(0.25)
    for r in range(6):
        assert ao.jj_spectrum(r).approx_equal(sq.jj_spectrum(r))
        assert ao.qdim_float(r) == pytest.approx(sq.qdim_float(r))


def test_ao_f_validation():
    with pytest.raises(ModelError, match='Trace'):
        AoF([0.5, 1.0])
    # normalized but not inversion symmetric: 2 + 3 + c = 1/2 + 1/3 + 1/c
    s = 5 - 1 / 2 - 1 / 3
    c = (-s + math.sqrt(s * s + 4)) / 2
    with pytest.raises(ModelError, match='closed under'):
        AoF([2.0, 3.0, c])
    with pytest.raises(ModelError):
        AoF([1.0])


def test_au_f_powers(au3):
    assert au3.qdim('ggg') == 27
    assert au3.intdim('GG') == 9
    assert au3.lambda_bounds('g') == (1.0, 1.0)
    m = AuF([0.5, 1.0, 2.0])
    assert m.jj_spectrum('GG') == m.jj_spectrum('gg').inverse()
    assert m.qdim('gg') == Fraction(49, 4)
    with pytest.raises(FusionError):
        m.qdim('gG')


def test_model_from_dict_round_trip(ao_vv):
    for model in (SqU2(0.3), ao_vv, AuF([0.5, 1.0, 2.0])):
        assert model_from_dict(json.loads(json.dumps(model.definition()))) == model


def test_table_model_validation():
    doc = {'family': 'table', 'q': 0.5, 'table': {
        'irreps': [{'key': 'e', 'dim': 1, 'qdim_value': 1, 'jj_spectrum': [1]},
                   {'key': 'x', 'dim': 2, 'qdim_exponents': [1, -1], 'jj_exponents': [1, -1]}],
        'fusion': []}}
    m = model_from_dict(doc)
    assert m.qdim('x') == Fraction(5, 2)
    bad = json.loads(json.dumps(doc))
    bad['table']['irreps'][1]['jj_spectrum'] = [1, 1]
    del bad['table']['irreps'][1]['jj_exponents']
    with pytest.raises(ModelError, match="irrep 'x'"):
        model_from_dict(bad)
    missing = json.loads(json.dumps(doc))
    del missing['table']['irreps'][1]['jj_exponents']
    with pytest.raises(ModelError, match='no jj_spectrum'):
        model_from_dict(missing).jj_spectrum('x')
    with pytest.raises(ModelError, match='unknown model family'):
        model_from_dict({'family': 'so3'})
