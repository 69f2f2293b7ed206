"""Randomized invariants, 1000 derandomized cases each."""

from __future__ import annotations

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from qgrowth.actions import ActionError, action_from_dict, builtin_actions, translation_action
from qgrowth.formats import bundled_model
from qgrowth.fusion import SU2Fusion
from qgrowth.growth import growth_sequence, log_value
from qgrowth.models import AoF, AuF, SqU2
from qgrowth.modular import delta_point_spectrum
from qgrowth.spectra import EigenSpectrum

CASES = settings(max_examples=1000)

q_values = st.floats(0.05, 1.0).map(lambda q: round(q, 3)).filter(lambda q: q > 0)


@st.composite
def symmetric_eigs(draw, min_rank=2, max_rank=5):
    """F*F spectra closed under x -> 1/x, hence normalized."""
    rank = draw(st.integers(min_rank, max_rank))
    pairs = [round(draw(st.floats(0.1, 1.0)), 3) for _ in range(rank // 2)]
    eigs = [x for p in pairs for x in (p, 1 / p)]
    return eigs + [1.0] * (rank % 2)


su2_models = st.one_of(q_values.map(SqU2), symmetric_eigs().map(AoF))
models_and_labels = st.one_of(
    st.tuples(su2_models, st.integers(1, 3)),
    st.tuples(symmetric_eigs(max_rank=3).map(AuF), st.sampled_from(['g', 'G', 'gg', 'GG'])),
)


@CASES
@given(models_and_labels, st.integers(1, 4), st.integers(1, 4))
def test_submultiplicativity(model_label, m, n):
    model, u = model_label
    for kind in ('quantum_dim', 'integral_dim'):
        values = growth_sequence(model, u, m + n, kind).values()
        assert values[m + n - 1] <= values[m - 1] * values[n - 1]


@CASES
@given(models_and_labels, st.integers(1, 8))
def test_quantum_dims_dominate_top_eigenvalue(model_label, n):
    model, u = model_label
    lam, Lam = model.lambda_bounds(u)
    rep = growth_sequence(model, u, n)
    for k, value, _ in rep.terms:
        assert log_value(value) >= k * math.log(Lam) - 1e-9 * k
    # and the dual statement through the conjugate
    dual = growth_sequence(model, model.fusion.dual(u), n)
    assert dual.values() == rep.values()
    assert all(log_value(v) >= k * math.log(1 / lam) - 1e-9 * k for k, v, _ in dual.terms)


@CASES
@given(models_and_labels, st.integers(1, 6))
def test_dim_and_mult_below_quantum_dim(model_label, n):
    model, u = model_label
    qd = growth_sequence(model, u, n).values()
    dims = growth_sequence(model, u, n, 'integral_dim').values()
    assert all(d <= q for d, q in zip(dims, qd))
    for act in builtin_actions(model).values():
        mults = growth_sequence(model, u, n, 'multiplicity', act).values()
        assert all(m <= q for m, q in zip(mults, qd))


@CASES
@given(su2_models, st.integers(0, 6), st.integers(0, 6))
def test_fusion_conserves_dimensions(model, a, b):
    out = model.fusion.fuse(a, b)
    assert model.qdim(a) * model.qdim(b) == out.weighted_sum(model.qdim)
    assert model.intdim(a) * model.intdim(b) == out.weighted_sum(model.intdim)


@CASES
@given(su2_models, st.integers(0, 4), st.integers(0, 4))
def test_spectra_are_clebsch_gordan_compatible(model, a, b):
    lhs = model.jj_spectrum(a).tensor(model.jj_spectrum(b))
    rhs = EigenSpectrum()
    for c, m in model.fusion.fuse(a, b).items():
        for _ in range(m):
            rhs = rhs + model.jj_spectrum(c)
    assert lhs == rhs


@st.composite
def custom_actions(draw):
    n = draw(st.integers(2, 4))
    spectrum = []
    for label in draw(st.lists(st.sampled_from(['g', 'G', 'gg']), unique=True, max_size=3)):
        mult = draw(st.integers(1, 4))
        jj = [round(draw(st.floats(0.05, 20.0)), 4) for _ in range(mult)]
        spectrum.append({'irrep': label, 'mult': mult, 'JJ': jj})
    return AuF([1.0] * n), {'spectrum': spectrum}


@CASES
@given(custom_actions())
def test_loaded_actions_satisfy_multiplicity_chain(case):
    base, doc = case
    try:
        act = action_from_dict(doc, base)
    except ActionError:
        return
    for u in act.labels():
        assert act.mult(u) <= act.quantum_multiplicity(u) * (1 + 1e-9)
        assert act.quantum_multiplicity(u) <= float(base.qdim(u)) * (1 + 1e-6)


@CASES
@given(su2_models, st.integers(0, 8))
def test_builtin_actions_satisfy_multiplicity_chain(model, r):
    for act in builtin_actions(model).values():
        assert act.mult(r) <= act.quantum_multiplicity(r) * (1 + 1e-9)
        assert act.quantum_multiplicity(r) <= model.qdim_float(r) * (1 + 1e-9)


def weyl_multiplicities(k: int, n: int) -> dict[int, int]:
    """Multiplicities in u_k^(x)n from the SU(2) character (z^k + z^(k-2) + ... + z^-k)^n."""
    coeffs = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for e, c in coeffs.items():
            for j in range(-k, k + 1, 2):
                nxt[e + j] = nxt.get(e + j, 0) + c
        coeffs = nxt
    out = {}
    for r in range(0, k * n + 1):
        m = coeffs.get(r, 0) - coeffs.get(r + 2, 0)
        if m:
            out[r] = m
    return out


@CASES
@given(st.integers(1, 3), st.integers(0, 20))
def test_su2_multiplicities_match_character_oracle(k, n):
    assert dict(SU2Fusion().decompose_power(k, n)) == weyl_multiplicities(k, n)


s3 = bundled_model('s3')
small_models = st.one_of(su2_models, st.just(s3))


@st.composite
def model_triples(draw):
    model = draw(small_models)
    labels = model.fusion.labels(3)
    return model, tuple(draw(st.sampled_from(labels)) for _ in range(3))


@CASES
@given(model_triples())
def test_fusion_is_associative(case):
    model, (a, b, c) = case
    fus = model.fusion
    left = fus.tensor(fus.fuse(a, b), {c: 1})
    right = fus.tensor({a: 1}, fus.fuse(b, c))
    assert left == right


@CASES
@given(st.one_of(st.tuples(st.just(SU2Fusion()), st.integers(1, 3)),
                 st.tuples(st.just(s3.fusion), st.sampled_from(['sign', 'std']))),
       st.integers(0, 5), st.integers(0, 5))
def test_powers_split(case, m, n):
    fus, u = case
    whole = fus.decompose_power(u, m + n)
    assert whole == fus.tensor(fus.decompose_power(u, m), fus.decompose_power(u, n))


@CASES
@given(small_models, st.integers(0, 5))
def test_standard_solution_traces(model, i):
    labels = model.fusion.labels(5)
    u = labels[i % len(labels)]
    spec = model.jj_spectrum(u)
    d = float(model.qdim(u))
    assert math.isclose(spec.total(), d, rel_tol=1e-9)
    assert math.isclose(spec.inverse_total(), d, rel_tol=1e-9)
    assert spec.cardinality == model.intdim(u)
    lam, Lam = model.lambda_bounds(u)
    assert lam <= 1 + 1e-12 and Lam >= 1 - 1e-12
    trivial = math.isclose(lam, 1, rel_tol=1e-9) and math.isclose(Lam, 1, rel_tol=1e-9)
    assert trivial == math.isclose(d, model.intdim(u), rel_tol=1e-9)


@CASES
@given(su2_models, st.integers(0, 4))
def test_translation_modular_spectrum_is_jj_inverse_times_jj(model, r):
    act = translation_action(model)
    jj = model.jj_spectrum(r)
    assert act.JJ(r).tensor(jj).approx_equal(jj.inverse().tensor(jj))
    assert delta_point_spectrum(act, [r]).total.is_inversion_symmetric()
