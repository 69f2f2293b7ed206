from math import comb

import pytest

from qgrowth.fusion import (FreePowerFusion, FusionError, MultiplicityVector, ResourceLimitError, SU2Fusion,
                            TableFusion, decompose_power, dual, fuse, max_support)


def ballot(n, r):
    """Multiplicity of u_r in u_1^(x)n: walks of length n on Z>=0 from 0 to r."""
    if (n - r) % 2 or r > n:
        return 0
    k = (n - r) // 2
    return comb(n, k) - (comb(n, k - 1) if k > 0 else 0)


def test_clebsch_gordan():
    su2 = SU2Fusion()
    assert fuse(su2, 1, 1) == {0: 1, 2: 1}
    assert dict(su2.fuse(3, 2)) == {1: 1, 3: 1, 5: 1}
    assert dual(su2, 4) == 4


@pytest.mark.parametrize('n', range(0, 21))
def test_su2_power_matches_ballot_numbers(n):
    vec = decompose_power(SU2Fusion(), 1, n)
    for r in range(n + 1):
        assert vec.get(r, 0) == ballot(n, r)


def test_power_zero_is_unit():
    assert decompose_power(SU2Fusion(), 3, 0) == {0: 1}
    assert decompose_power(FreePowerFusion(), 'g', 0) == {'': 1}


def test_free_powers():
    fp = FreePowerFusion()
    assert fp.fuse('gg', 'g') == {'ggg': 1}
    assert fp.dual('ggG') == 'gGG'
    assert fp.parse_label('g^3') == 'ggg'
    assert fp.parse_label('1') == ''
    assert fp.format_label('GGG') == 'G^3'
    with pytest.raises(FusionError):
        fp.fuse('g', 'G')


def test_labels_and_parsing():
    su2 = SU2Fusion()
    assert su2.labels(3) == (0, 1, 2, 3)
    assert su2.parse_label('u7') == 7
    with pytest.raises(FusionError):
        su2.check(-1)


def _s3(**kw):
    keys = ['triv', 'sign', 'std']
    fusion = {('sign', 'sign'): {'triv': 1}, ('sign', 'std'): {'std': 1}, ('std', 'sign'): {'std': 1},
              ('std', 'std'): {'triv': 1, 'sign': 1, 'std': 1}}
    fusion.update(kw.pop('extra', {}))
    return TableFusion(keys, {k: k for k in keys}, fusion, **kw)


def test_table_fusion_checks_dimensions():
    t = _s3(dims={'triv': 1, 'sign': 1, 'std': 2})
    assert t.fuse('std', 'std') == {'triv': 1, 'sign': 1, 'std': 1}
    assert list(t.fuse('std', 'std')) == ['triv', 'sign', 'std']
    with pytest.raises(FusionError, match="a='std', b='std'"):
        _s3(dims={'triv': 1, 'sign': 1, 'std': 3})


def test_table_fusion_rejects_bad_tables():
    with pytest.raises(FusionError, match='unit law'):
        _s3(extra={('triv', 'std'): {'sign': 1}})
    with pytest.raises(FusionError, match='not involutive'):
        TableFusion(['e', 'a', 'b'], {'e': 'e', 'a': 'b', 'b': 'b'}, {})
    with pytest.raises(FusionError, match='no entry'):
        TableFusion(['e', 'a'], {'e': 'e', 'a': 'a'}, {}).fuse('a', 'a')


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv('QGROWTH_MAX_SUPPORT', '5')
    assert max_support() == 5
    with pytest.raises(ResourceLimitError):
        decompose_power(SU2Fusion(), 1, 12)
    monkeypatch.setenv('QGROWTH_MAX_SUPPORT', 'zero')
    with pytest.raises(ValueError):
        max_support()


def test_multiplicity_vector():
    v = MultiplicityVector([(0, 1), (2, 3)])
    assert v.total() == 4
    assert v.weighted_sum(lambda r: r + 1) == 10
    assert MultiplicityVector.from_dict(v.to_dict()) == v
    with pytest.raises(ValueError):
        MultiplicityVector([(0, 0)])
