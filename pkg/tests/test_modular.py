import math

import pytest

from qgrowth.actions import action_from_dict, bdv_action, builtin_actions, translation_action, wang_action
from qgrowth.formats import bundled_model
from qgrowth.models import AoF, AuF, SqU2, q_from_trace
from qgrowth.modular import (ModularError, connes_subgroup, delta_point_spectrum, is_tracial, kac_bound,
                             kac_exponential_necessity, plot_rows, type3_lower_bound)
from qgrowth.spectra import EigenSpectrum


def test_delta_spectrum_deformation(sq_half):
    rep = delta_point_spectrum(translation_action(sq_half), [1])
    assert rep.total == EigenSpectrum.from_exponents([2, 0, 0, -2], 0.5)
    assert [x for x, _ in plot_rows(rep)] == pytest.approx([2 * math.log(0.5), 0.0, -2 * math.log(0.5)])


def test_delta_spectrum_contains_one_and_is_symmetric(ao_vv):
    rep = delta_point_spectrum(translation_action(ao_vv))
    assert rep.total.distinct()[len(rep.total.distinct()) // 2][0] == 1.0
    assert rep.total.is_inversion_symmetric()
    assert rep.per_irrep[0] == ('u0', EigenSpectrum.ones(1))


def test_tracial_total_multiplicity():
    act = translation_action(SqU2(1.0))
    rep = delta_point_spectrum(act, range(5))
    assert rep.total == EigenSpectrum.ones(sum((r + 1) ** 2 for r in range(5)))
    assert rep.classification.kind == 'trace'


def test_non_spectral_subset(sq_half):
    with pytest.raises(ModularError):
        delta_point_spectrum(translation_action(sq_half).restricted([0, 1]), [2])


def test_trace_criterion(sq_half):
    for act in builtin_actions(SqU2(-1.0)).values():
        assert is_tracial(act).tracial
    rep = is_tracial(translation_action(sq_half))
    assert (rep.tracial, rep.witness, rep.condition) == (False, 'u1', 'a')
    # Kac base, nontrivial multiplicity operator: condition b
    act = action_from_dict({'spectrum': [{'irrep': 'g', 'mult': 2, 'JJ': [2, 0.5]},
                                         {'irrep': 'G', 'mult': 2, 'JJ': [2, 0.5]}]}, AuF([1.0, 1.0, 1.0]))
    rep = is_tracial(act)
    assert (rep.tracial, rep.witness, rep.condition) == (False, 'G', 'b')


def test_connes_exact_gcd():
    cls = connes_subgroup(EigenSpectrum.from_exponents([0, 6, -6, 9], 0.5))
    assert cls.kind == 'III_lambda_candidate' and cls.mode == 'exact' and cls.lam == 0.125
    assert connes_subgroup(EigenSpectrum.ones(2)).kind == 'trace'
    with pytest.raises(ModularError):
        connes_subgroup(EigenSpectrum())


def test_connes_float_modes():
    two_three = EigenSpectrum.from_values([2.0, 0.5, 3.0, 1 / 3])
    assert connes_subgroup(two_three).kind == 'III_1_candidate'
    x = 0.7
    commensurable = EigenSpectrum.from_values([x ** 2, x ** -2, x ** 3, x ** -3])
    cls = connes_subgroup(commensurable)
    assert cls.kind == 'III_lambda_candidate' and cls.lam == pytest.approx(x)
    # a generator needing a multiplier between 1000 and 1/sqrt(tol) is not decided
    g = 1e-3
    awkward = EigenSpectrum.from_values([math.exp(-1500 * g), math.exp(-1501 * g)])
    assert connes_subgroup(awkward).kind == 'undetermined'


def test_vaes_vergnioux_instance(ao_vv):
    act = translation_action(ao_vv)
    rep = delta_point_spectrum(act, [1])
    want = EigenSpectrum.from_values([a * b for a in (0.5, 1.0, 2.0) for b in (2.0, 1.0, 0.5)])
    assert rep.total.approx_equal(want)
    assert rep.classification.lam == 0.5
    bound = type3_lower_bound(act)
    assert bound.bound == pytest.approx(0.5 * q_from_trace(3.5), rel=1e-12)
    assert bound.bound <= 0.5


def test_type3_bound_closed_forms(sq_half):
    for r in (1, 2, 3):
        act = translation_action(sq_half).restricted(range(r, r + 3))
        assert type3_lower_bound(act).bound == pytest.approx(0.5 ** (2 * r))
    au = AuF([0.5, 1.0, 2.0])
    assert type3_lower_bound(translation_action(au)).bound == pytest.approx(0.5 / 3.5)


def test_type3_bound_finite_depth_is_weaker_and_monotone(ao_vv):
    act = translation_action(ao_vv)
    exact = type3_lower_bound(act).bound
    values = [type3_lower_bound(act, N=N, use_closed_form=False).bound for N in (2, 4, 8, 16)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    assert values[-1] <= exact


def test_type3_bound_consistent_with_subgroup(ao_vv, sq_half):
    for model in (ao_vv, sq_half, AuF([0.5, 1.0, 2.0])):
        for act in builtin_actions(model).values():
            cls = delta_point_spectrum(act).classification
            if cls.kind == 'III_lambda_candidate':
                assert cls.lam >= type3_lower_bound(act).bound


def test_type3_bound_vacuous_for_kac():
    with pytest.raises(ModularError, match='vacuous'):
        type3_lower_bound(wang_action(2))


@pytest.mark.parametrize('n', [2, 3, 5])
def test_wang_action_bounds(n):
    act = wang_action(n)
    assert kac_bound(act) == 1 / n
    cls = delta_point_spectrum(act).classification
    assert cls.kind == 'III_lambda_candidate' and cls.lam == 1 / n
    rep = kac_exponential_necessity(act)
    assert rep.status == 'pass' and rep.witness == 'G'


def test_kac_bound_errors(sq_half):
    with pytest.raises(ModularError, match='Kac'):
        kac_bound(translation_action(sq_half))
    with pytest.raises(ModularError, match='tracial'):
        kac_bound(translation_action(AuF([1.0, 1.0])))


def test_kac_bound_custom_table_action():
    # a Kac table where the first nontrivial J*J sits on a dimension-2 irrep
    s3 = bundled_model('s3')
    act = action_from_dict({'spectrum': [{'irrep': 'std', 'mult': 1, 'JJ': [1.0]}]}, s3)
    with pytest.raises(ModularError, match='tracial'):
        kac_bound(act)
    assert kac_exponential_necessity(act).status == 'pass'


def test_kac_necessity_on_tracial_deformation():
    for act in builtin_actions(SqU2(-1.0)).values():
        assert kac_exponential_necessity(act).status == 'pass'
    with pytest.raises(ModularError):
        kac_exponential_necessity(bdv_action(AoF([0.5, 1.0, 2.0])))
