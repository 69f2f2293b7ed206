from fractions import Fraction

import numpy as np
import pytest

from qgrowth.laurent import q_integer
from qgrowth.spectra import EigenSpectrum, SpectrumError, tensor_jj_spectrum


def test_from_exponents_values():
    s = EigenSpectrum.from_exponents([1, -1, 1], 0.5)
    assert s.cardinality == 3
    np.testing.assert_array_equal(s.values(), [0.5, 0.5, 2.0])
    assert s.min() == 0.5 and s.max() == 2.0
    assert s.exact_total() == Fraction(3)


def test_from_values_pairs_inverses():
    s = EigenSpectrum.from_values([0.25, 1.0, 4.0])
    assert len(s.bases) == 1
    assert s.is_inversion_symmetric()
    assert s.tensor(s).cardinality == 9


def test_laurent_round_trip():
    s = EigenSpectrum.from_laurent(q_integer(4), 0.3)
    assert s.laurent() == q_integer(4)


def test_tensor_and_subtract():
    a = EigenSpectrum.from_exponents([1, -1], 0.5)
    sq = tensor_jj_spectrum(a, a)
    assert sq == EigenSpectrum.from_exponents([2, 0, 0, -2], 0.5)
    assert sq.subtract(EigenSpectrum.ones(1)) == EigenSpectrum.from_exponents([2, 0, -2], 0.5)
    with pytest.raises(SpectrumError):
        a.subtract(EigenSpectrum.ones(1))


def test_inverse_and_power():
    a = EigenSpectrum.from_values([0.5, 3.0])
    assert a.inverse().approx_equal(EigenSpectrum.from_values([2.0, 1 / 3]))
    assert a.power(3).cardinality == 8
    assert a.power(0) == EigenSpectrum.ones(1)
    assert a.total() == pytest.approx(3.5)
    assert a.inverse_total() == pytest.approx(2 + 1 / 3)


def test_union_merges_bases():
    a = EigenSpectrum.from_values([0.5, 2.0]) + EigenSpectrum.from_values([0.5, 1.0])
    assert a.distinct() == ((0.5, 2), (1.0, 1), (2.0, 1))


def test_trivial():
    assert EigenSpectrum.ones(4).is_trivial()
    assert EigenSpectrum.from_exponents([0, 0], 1.0).is_trivial()
    assert not EigenSpectrum.from_values([0.5, 2]).is_trivial()


def test_serialization_round_trip():
    s = EigenSpectrum.from_values([0.2, 5.0, 1.0, 3.0])
    assert EigenSpectrum.from_dict(s.to_dict()) == s


def test_rejects_bad_values():
    with pytest.raises(SpectrumError):
        EigenSpectrum.from_values([0.0])
    with pytest.raises(SpectrumError):
        EigenSpectrum((1.5,), {(1,): 1})
