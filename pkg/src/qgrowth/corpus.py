"""Regression corpus of worked examples with known answers.

Each case is a small function returning ``(passed, detail)``. :func:`run_corpus` evaluates
them all and returns a :class:`CorpusReport` whose rows form a pass/fail matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import bdv_action, builtin_actions, kms_check, translation_action, verify_action_bounds, wang_action
from .growth import growth_sequence, verify_growth_bounds
from .models import AoF, AuF, SqU2, q_from_trace
from .modular import (connes_subgroup, delta_point_spectrum, is_tracial, kac_bound, kac_exponential_necessity,
                      type3_lower_bound)
from .reports import register
from .spectra import EigenSpectrum, close

__all__ = ['CASES', 'CorpusReport', 'run_corpus']


def _classical_polynomial_growth():
    rep = growth_sequence(SqU2(1.0), 1, 24, 'integral_dim')
    ok = rep.values() == tuple(range(2, 26)) and rep.verdict == 'subexponential'
    return ok, f'Dim_(u1,n) = n+1, verdict {rep.verdict}'


def _sq_u2_spectra():
    m = SqU2(0.5)
    for r in range(13):
        want = EigenSpectrum.from_exponents(range(r, -r - 1, -2), 0.5)
        lam, Lam = m.lambda_bounds(r)
        if m.jj_spectrum(r) != want or lam != 0.5 ** r or Lam != 0.5 ** -r:
            return False, f'u{r}: {m.jj_spectrum(r)!r}'
    return True, 'Sp(j*j) on u_r is {q^r, ..., q^-r} for r <= 12'


def _sq_u2_growth_equality():
    m = SqU2(0.5)
    for r in range(1, 13):
        rep = verify_growth_bounds(m, r, 24)
        if not (rep.holds and rep.equality_detected and rep.upper <= 1.1 * 0.5 ** -r):
            return False, f'u{r}: {rep}'
    return True, 'D_(u_r) = q^-r = Lambda = 1/lambda for r <= 12'


def _free_unitary_dimensions():
    for n in (2, 3, 4):
        m = AuF([1.0] * n)
        rep = growth_sequence(m, 'g', 8)
        bounds = verify_growth_bounds(m, 'g', 8)
        if rep.values() != tuple(n ** k for k in range(1, 9)) or not bounds.strict_extremes:
            return False, f'n={n}: {rep.values()}'
        if m.lambda_bounds('g') != (1.0, 1.0):
            return False, f'n={n}: j*j is not trivial'
    return True, 'D_(g,k) = n^k, lambda = Lambda = 1 < D_g = n'


def _rank_two_middle_equality():
    m = AoF([0.25, 4.0])
    rep = verify_growth_bounds(m, 1, 16)
    return rep.holds and rep.inverse_symmetric and rep.equality_detected, f'lambda*Lambda = {rep.lambda_min * rep.lambda_max}'


def _free_orthogonal_dim_growth():
    for rank in (3, 4, 5):
        eigs = [1.0] * rank
        m = AoF(eigs)
        if any(m.intdim(r) < 2 ** (r - 1) * m.intdim(1) for r in range(1, 13)):
            return False, f'rank {rank}: dimension recursion too slow'
        if growth_sequence(m, 1, 12, 'integral_dim').verdict != 'exponential':
            return False, f'rank {rank}: verdict not exponential'
    return True, 'dim(u_r) >= 2^(r-1) dim(u_1), Dim_(u1) > 1 for rank 3, 4, 5'


def _relaxed_tensor_equality():
    for model in (AoF([0.5, 1.0, 2.0]), SqU2(0.5)):
        act = bdv_action(model)
        for r in range(1, 6):
            rep = verify_action_bounds(act, r, 16)
            if not (rep.bound_holds and rep.equality_b):
                return False, f'{model.family} u{r}: {rep}'
    return True, 'max Sp(J*J) = D_u on the equivalence-induced actions'


def _deformation_trace_criterion():
    for act in builtin_actions(SqU2(-1.0)).values():
        rep = is_tracial(act)
        if not rep.tracial or delta_point_spectrum(act).classification.kind != 'trace':
            return False, f'{act.name} is not tracial'
    rep = is_tracial(translation_action(SqU2(0.5)))
    ok = not rep.tracial and rep.witness == 'u1' and rep.condition == 'a'
    return ok, f'|q| = 1 tracial; q = 0.5 fails at {rep.witness} ({rep.condition})'


def _cuntz_gauge_action():
    for n in (2, 3, 5):
        act = wang_action(n)
        cls = delta_point_spectrum(act).classification
        if kac_bound(act) != 1 / n or cls.kind != 'III_lambda_candidate' or cls.lam != 1 / n:
            return False, f'n={n}: {cls}'
        if kac_exponential_necessity(act).status != 'pass':
            return False, f'n={n}: no exponential witness'
    return True, 'lambda = 1/n attained for n = 2, 3, 5'


def _free_orthogonal_translation_type():
    act = translation_action(AoF([0.5, 1.0, 2.0]))
    rep = delta_point_spectrum(act, [1])
    want = EigenSpectrum.from_values([a * b for a in (0.5, 1, 2) for b in (2, 1, 0.5)])
    bound = type3_lower_bound(act).bound
    expected = 0.5 * q_from_trace(3.5)
    ok = (rep.total.approx_equal(want) and rep.classification.lam == 0.5 and close(bound, expected, 1e-12)
          and bound <= 0.5)
    return ok, f'lambda = {rep.classification.lam}, bound = {bound:.6g}'


def _type3_bounds_closed_forms():
    q = 0.5
    m = SqU2(q)
    for r in (1, 2, 3):
        act = translation_action(m).restricted(range(r, r + 4))
        if not close(type3_lower_bound(act).bound, q ** (2 * r), 1e-12):
            return False, f'sq_u2 from u{r}'
    ao = AoF([0.5, 1.0, 2.0])
    for r in (1, 2):
        act = translation_action(ao).restricted(range(r, r + 3))
        want = (ao.q / 2.0) ** r
        if not close(type3_lower_bound(act).bound, want, 1e-9):
            return False, f'ao_f from u{r}'
    au = AuF([0.5, 1.0, 2.0])
    want = min(0.5, 1 / 2.0) / 3.5
    if not close(type3_lower_bound(translation_action(au)).bound, want, 1e-12):
        return False, 'au_f'
    return True, 'q^(2r), (q/||F||^2)^r and min(q_0, 1/q_n)/Trace(F*F) reproduced'


def _kms_identity():
    worst = 0.0
    for model in (SqU2(0.5), AoF([0.5, 1.0, 2.0]), AuF([0.5, 1.0, 2.0])):
        for act in builtin_actions(model).values():
            for u in act.labels(3):
                worst = max(worst, kms_check(act, u, trials=200).max_violation)
    return worst <= 1e-10, f'max violation {worst:.3g}'


def _connes_generators():
    exact = connes_subgroup(EigenSpectrum.from_exponents([4, 6, -6, 0], 0.5))
    trivial = connes_subgroup(EigenSpectrum.ones(3))
    dense = connes_subgroup(EigenSpectrum.from_values([2.0, 0.5, 3.0, 1 / 3]))
    ok = exact.lam == 0.25 and trivial.kind == 'trace' and dense.kind == 'III_1_candidate'
    return ok, f'gcd generator {exact.lam}, {{1}} -> {trivial.kind}, {{2, 3}} -> {dense.kind}'


CASES = (
    ('classical-polynomial-growth', _classical_polynomial_growth),
    ('deformed-su2-spectra', _sq_u2_spectra),
    ('deformed-su2-growth-equality', _sq_u2_growth_equality),
    ('free-unitary-dimensions', _free_unitary_dimensions),
    ('free-orthogonal-rank-two-symmetry', _rank_two_middle_equality),
    ('free-orthogonal-dimension-growth', _free_orthogonal_dim_growth),
    ('relaxed-tensor-equality', _relaxed_tensor_equality),
    ('trace-criterion', _deformation_trace_criterion),
    ('cuntz-gauge-action', _cuntz_gauge_action),
    ('free-orthogonal-translation-type', _free_orthogonal_translation_type),
    ('type3-bound-closed-forms', _type3_bounds_closed_forms),
    ('kms-identity', _kms_identity),
    ('modular-subgroup-generators', _connes_generators),
)


@register
@dataclass(frozen=True)
class CorpusReport:
    """``rows`` holds ``(case, PASS/FAIL, detail)``."""

    passed: bool
    rows: tuple


def run_corpus(cases=CASES) -> CorpusReport:
    rows = []
    for name, fn in cases:
        try:
            ok, detail = fn()
        except Exception as err:  # a crash is a failed case, reported rather than raised
            ok, detail = False, f'{type(err).__name__}: {err}'
        rows.append((name, 'PASS' if ok else 'FAIL', detail))
    return CorpusReport(all(r[1] == 'PASS' for r in rows), tuple(rows))
