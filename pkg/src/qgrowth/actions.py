"""Spectral data of ergodic actions.

An ergodic action of a compact quantum group is recorded through its spectral functor: for each
spectral irrep ``u`` a multiplicity space ``L_u`` of dimension ``mult(u)`` carrying a positive
operator ``J_u* J_u`` (the analogue of ``j_u* j_u`` on the representation space). Only the
spectra matter here, so ``JJ(u)`` is an :class:`~qgrowth.spectra.EigenSpectrum`.

On the spectral subalgebra spanned by ``a = conj(k) (x) psi`` the invariant state and the
modular group are explicit::

    omega(a* b)       = ||R_u||^-2    (k', JJ k) (psi, psi')
    omega(b a*)       = ||Rbar_u||^-2 (k', k)    (psi, (j*j)^-1 psi')
    sigma_{-i}(a)     = conj(JJ k) (x) (j*j) psi

:func:`kms_check` evaluates both sides of ``omega(sigma_{-i}(b) a*) = omega(a* b)`` on random
vectors.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass

import numpy as np

from .fusion import FreePowerFusion, Label
from .growth import VERDICT_TOL, growth_sequence
from .models import AoF, AuF, ModelError, QuantumGroupModel, SqU2
from .reports import register
from .spectra import REL_TOL, EigenSpectrum, SpectrumError, close

__all__ = ['DEFAULT_SEED', 'ActionError', 'SpectralActionModel', 'translation_action', 'bdv_action',
           'wang_action', 'builtin_actions', 'action_from_dict', 'validate_action', 'KMSReport',
           'kms_check', 'ActionBoundsReport', 'verify_action_bounds']

DEFAULT_SEED = 0x5EED


class ActionError(ValueError):
    """Raised for inconsistent action data or a query on a non-spectral irrep."""


Entry = tuple[int, EigenSpectrum]


class SpectralActionModel:
    """Spectral data ``u -> (mult(u), Sp(J_u* J_u))`` of an ergodic action.

    Parameters
    ----------
    base : QuantumGroupModel
    name : str
    entries : mapping, optional
        Explicit ``label -> (mult, JJ)`` for a finite spectrum.
    rule : callable, optional
        ``label -> (mult, JJ)`` or ``None`` (not spectral), for actions with infinite spectrum.
    relaxed_tensor : bool
        Whether the spectral functor is a relaxed tensor functor.
    factorial_assumptions : bool
        The user's assertion that the von Neumann algebra and its centralizer are factors.
        It is recorded in reports, never checked.
    mult_rate : callable or float, optional
        Closed-form growth rate of multiplicities along the powers of each irrep.
    """

    def __init__(self, base: QuantumGroupModel, name: str, entries: Mapping[Label, Entry] | None = None,
                 rule: Callable[[Label], Entry | None] | None = None, relaxed_tensor: bool = False,
                 factorial_assumptions: bool = False, mult_rate=None):
        if (entries is None) == (rule is None):
            raise ValueError('give exactly one of entries and rule')
        self.base = base
        self.name = name
        self.relaxed_tensor = relaxed_tensor
        self.factorial_assumptions = factorial_assumptions
        self._entries = None if entries is None else {base.check(u): e for u, e in entries.items()}
        self._rule = rule
        self._mult_rate = mult_rate
        self._cache: dict[Label, Entry | None] = {}

    def _entry(self, u) -> Entry | None:
        if self._entries is not None:
            return self._entries.get(u)
        if u not in self._cache:
            self._cache[u] = self._rule(u)
        return self._cache[u]

    def is_spectral(self, u) -> bool:
        return self.base.fusion.is_valid(u) and self._entry(u) is not None

    def _require(self, u) -> Entry:
        u = self.base.check(u)
        entry = self._entry(u)
        if entry is None:
            raise ActionError(f'{self.base.format_label(u)} is not in the spectrum of the {self.name} action')
        return entry

    def mult(self, u) -> int:
        """Dimension of the multiplicity space; 0 for irreps outside the spectrum."""
        entry = self._entry(self.base.check(u))
        return 0 if entry is None else entry[0]

    def JJ(self, u) -> EigenSpectrum:
        return self._require(u)[1]

    def quantum_multiplicity(self, u) -> float:
        """``sqrt(Trace(J*J) Trace((J*J)^-1))``, squeezed between ``mult(u)`` and ``d(u)``."""
        spec = self.JJ(u)
        return math.sqrt(spec.total() * spec.inverse_total())

    @property
    def mult_rate_known(self) -> bool:
        return self._mult_rate is not None

    def mult_rate(self, u) -> float | None:
        if callable(self._mult_rate):
            return self._mult_rate(u)
        return self._mult_rate

    def labels(self, depth: int = 6) -> tuple[Label, ...]:
        """Spectral irreps; for an infinite spectrum, those among ``base.fusion.labels(depth)``."""
        if self._entries is not None:
            return tuple(sorted(self._entries, key=self.base.fusion.sort_key))
        return tuple(u for u in self.base.fusion.labels(depth) if self.is_spectral(u))

    def restricted(self, labels) -> SpectralActionModel:
        """The same data with the spectrum cut down to `labels`."""
        entries = {u: self._require(u) for u in labels}
        return SpectralActionModel(self.base, self.name, entries=entries, relaxed_tensor=self.relaxed_tensor,
                                   factorial_assumptions=self.factorial_assumptions,
                                   mult_rate=self._mult_rate)

    def __repr__(self):
        return f'SpectralActionModel({self.name!r}, base={self.base!r})'


class _RateOf:
    """Picklable ``u -> rate`` adaptor for closed-form multiplicity rates."""

    def __init__(self, model, method, mapping=None):
        self.model, self.method, self.mapping = model, method, mapping

    def __call__(self, u):
        v = u if self.mapping is None else self.mapping(u)
        return getattr(self.model, self.method)(v)


def translation_action(model: QuantumGroupModel) -> SpectralActionModel:
    """The quantum group acting on itself by translation.

    Every irrep is spectral with ``mult(u) = dim(u)`` and ``Sp(J_u* J_u) = Sp(j_u* j_u)^-1``, so the
    modular spectrum on ``u`` is ``Sp(j*j) (x) Sp(j*j)^-1`` and the quantum multiplicity is ``d(u)``.
    """
    def rule(u):
        return model.intdim(u), model.jj_spectrum(u).inverse()

    return SpectralActionModel(model, 'translation', rule=rule, relaxed_tensor=False,
                               mult_rate=_RateOf(model, 'intdim_rate'))


def bdv_action(source: QuantumGroupModel, target: QuantumGroupModel | None = None,
               correspondence: Callable[[Label], Label] | None = None, depth: int = 6) -> SpectralActionModel:
    """Action of `source` obtained from a tensor equivalence onto `target`.

    The spectral functor is the equivalence followed by the embedding functor of `target`, a
    relaxed tensor functor with ``mult(u) = dim(Phi(u))`` and ``Sp(J_u* J_u) = Sp(j* j)`` of ``Phi(u)``.

    Parameters
    ----------
    source : QuantumGroupModel
    target : QuantumGroupModel, optional
        Defaults to ``S_qU(2)`` with ``q + 1/q = Trace(F*F)`` for ``A_o(F)``, and to `source`
        itself for ``S_qU(2)``.
    correspondence : callable, optional
        Label bijection ``Phi``; identity by default.
    depth : int
        Fusion rules and quantum dimensions are compared on all pairs of labels up to `depth`.
    """
    if target is None:
        if isinstance(source, AoF):
            target = source.equivalent_sq_u2()
        elif isinstance(source, SqU2):
            target = source
        else:
            raise ActionError(f'no default equivalence target for {source.family}; pass target=')
    phi = correspondence or (lambda u: u)
    labels = source.fusion.labels(depth)
    for a in labels:
        if not close(source.qdim_float(a), target.qdim_float(phi(a)), 1e-9):
            raise ActionError(f'correspondence changes the quantum dimension of {source.format_label(a)}')
        for b in labels:
            want = {phi(c): m for c, m in source.fusion.fuse(a, b).items()}
            got = dict(target.fusion.fuse(phi(a), phi(b)))
            if want != got:
                raise ActionError(f'correspondence is not fusion preserving on '
                                  f'{source.format_label(a)} (x) {source.format_label(b)}')

    def rule(u):
        v = phi(u)
        return target.intdim(v), target.jj_spectrum(v)

    return SpectralActionModel(source, 'bdv', rule=rule, relaxed_tensor=True,
                               mult_rate=_RateOf(target, 'intdim_rate', phi))


def wang_action(n: int) -> SpectralActionModel:
    """Action of ``A_u(n)`` on the Cuntz algebra ``O_n`` with its canonical gauge.

    The words of length ``k`` in the generators span one copy of ``g^k`` (and their adjoints one
    copy of ``G^k``), on which the modular group acts by ``n^{+-k}``. All multiplicities are 1.
    """
    if n < 2:
        raise ActionError(f'the Cuntz algebra needs n >= 2, got {n}')
    model = AuF([1.0] * n)

    def rule(u):
        if not FreePowerFusion.is_power(u):
            return None
        k = len(u)
        exp = -k if u[:1] == 'g' else k
        return 1, EigenSpectrum.from_exponents([exp], 1.0 / n)

    return SpectralActionModel(model, f'wang{n}', rule=rule, relaxed_tensor=False,
                               factorial_assumptions=True, mult_rate=1.0)


def builtin_actions(model: QuantumGroupModel) -> dict[str, SpectralActionModel]:
    """All built-in actions available for `model`, keyed by name."""
    out = {'translation': translation_action(model)}
    if isinstance(model, (SqU2, AoF)):
        out['bdv'] = bdv_action(model)
    if isinstance(model, AuF) and model.is_kac:
        out['wang'] = wang_action(model.rank)
    return out


def _bound_for(action: SpectralActionModel, u, N: int | None) -> float:
    rate = action.base.qdim_rate(u)
    if rate is not None:
        return rate
    return growth_sequence(action.base, u, N, 'quantum_dim').upper


def validate_action(action: SpectralActionModel, labels=None, N: int | None = None,
                    tol: float = VERDICT_TOL) -> None:
    """Reject spectral data that no ergodic action can have.

    Checked per spectral irrep: the unit has ``mult 1`` and ``JJ = {1}``; ``#JJ = mult``;
    ``mult <= q-mult <= d``; ``Trace(J_u*J_u) = Trace((J_ubar*J_ubar)^-1)`` when both are spectral;
    and ``Sp(J*J)`` lies in ``[1/D_u, D_u]`` with ``D_u`` the closed-form rate or its depth-`N` bound.

    Raises
    ------
    ActionError
        Naming the first irrep and condition that fails.
    """
    base = action.base
    labels = action.labels() if labels is None else tuple(labels)
    unit = base.fusion.unit
    if not action.is_spectral(unit):
        raise ActionError('the unit representation must be spectral (the invariant state)')
    if action.mult(unit) != 1 or not action.JJ(unit).is_trivial():
        raise ActionError('ergodicity: the unit must have mult 1 and JJ = {1}')
    for u in labels:
        name = base.format_label(u)
        mult, spec = action.mult(u), action.JJ(u)
        if spec.cardinality != mult:
            raise ActionError(f'irrep {name}: JJ has {spec.cardinality} eigenvalues but mult is {mult}')
        qm, d = action.quantum_multiplicity(u), base.qdim_float(u)
        if not mult <= qm * (1 + tol) or not qm <= d * (1 + tol):
            raise ActionError(f'irrep {name}: need mult <= q-mult <= d, got {mult}, {qm:.12g}, {d:.12g}')
        ubar = base.fusion.dual(u)
        if action.is_spectral(ubar) and not close(spec.total(), action.JJ(ubar).inverse_total(), tol):
            raise ActionError(f'irrep {name}: Trace(JJ) = {spec.total():.12g} must equal the inverse '
                              f'trace {action.JJ(ubar).inverse_total():.12g} on the conjugate')
        D = _bound_for(action, u, N)
        if spec.max() > D * (1 + tol) or spec.min() < (1 - tol) / D:
            raise ActionError(f'irrep {name}: Sp(JJ) = [{spec.min():.12g}, {spec.max():.12g}] '
                              f'is not inside [1/D, D] with D = {D:.12g}')


def action_from_dict(doc: Mapping, base: QuantumGroupModel, N: int | None = None) -> SpectralActionModel:
    """Build and validate a custom action from its JSON document.

    ``{"spectrum": [{"irrep": "u1", "mult": 2, "JJ": [...]}, ...], "relaxed_tensor": bool,
    "factorial_assumptions": bool}``; the unit gets ``mult 1, JJ {1}`` if not listed.
    """
    items = doc.get('spectrum')
    if not isinstance(items, list):
        raise ActionError('action needs a "spectrum" list')
    entries: dict[Label, Entry] = {}
    for i, item in enumerate(items):
        where = f'spectrum[{i}]'
        try:
            u = base.parse_label(str(item['irrep']))
            mult, values = item['mult'], item['JJ']
        except (KeyError, TypeError):
            raise ActionError(f'{where}: expected {{"irrep", "mult", "JJ"}}') from None
        except ValueError as err:
            raise ActionError(f'{where}: {err}') from None
        where = f'spectrum[{i}] (irrep {item["irrep"]})'
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise ActionError(f'{where}: "mult" must be a positive integer')
        if u in entries:
            raise ActionError(f'{where}: irrep listed twice')
        try:
            entries[u] = (mult, EigenSpectrum.from_values(values))
        except (SpectrumError, TypeError) as err:
            raise ActionError(f'{where}: {err}') from None
    entries.setdefault(base.fusion.unit, (1, EigenSpectrum.ones(1)))
    action = SpectralActionModel(base, str(doc.get('name', 'custom')), entries=entries,
                                 relaxed_tensor=bool(doc.get('relaxed_tensor', False)),
                                 factorial_assumptions=bool(doc.get('factorial_assumptions', False)))
    try:
        validate_action(action, N=N)
    except (ModelError, SpectrumError) as err:
        raise ActionError(str(err)) from err
    return action


@register
@dataclass(frozen=True)
class KMSReport:
    """Largest discrepancy ``|omega(sigma_{-i}(b) a*) - omega(a* b)|`` over random unit vectors."""

    action: str
    label: str
    trials: int
    seed: int
    basis_change: bool
    tol: float
    max_violation: float
    passed: bool


def _unit_vectors(rng, trials, n):
    v = rng.standard_normal((trials, n)) + 1j * rng.standard_normal((trials, n))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _random_unitary(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    qm, r = np.linalg.qr(z)
    return qm * (np.diagonal(r) / np.abs(np.diagonal(r)))


def kms_check(action: SpectralActionModel, u, trials: int = 1000, tol: float = 1e-10,
              seed: int = DEFAULT_SEED, basis_change: bool = False) -> KMSReport:
    """Evaluate both sides of the KMS identity on `trials` random pairs supported on `u`.

    ``JJ`` and ``j*j`` are diagonal in a fixed basis; with ``basis_change`` both are conjugated
    by random unitaries first, which must not change the outcome. Inner products are antilinear
    in the first argument. Vectors are complex Gaussian, normalized to length one.
    """
    u = action.base.check(u)
    JJ = action.JJ(u).values()
    jj = action.base.jj_spectrum(u).values()
    rng = np.random.default_rng(seed)
    k, k2 = _unit_vectors(rng, trials, JJ.size), _unit_vectors(rng, trials, JJ.size)
    psi, psi2 = _unit_vectors(rng, trials, jj.size), _unit_vectors(rng, trials, jj.size)
    r_norm2, rbar_norm2 = jj.sum(), (1.0 / jj).sum()

    if basis_change:
        U, V = _random_unitary(rng, JJ.size), _random_unitary(rng, jj.size)
        JJm = U.conj().T @ np.diag(JJ) @ U
        jjm = V.conj().T @ np.diag(jj) @ V
        jj_inv = V.conj().T @ np.diag(1.0 / jj) @ V
        JJk, JJk2 = k @ JJm.T, k2 @ JJm.T
        jj_psi2 = psi2 @ jjm.T
        back = jj_psi2 @ jj_inv.T
    else:
        JJk, JJk2 = k * JJ, k2 * JJ
        back = (psi2 * jj) / jj

    def ip(x, y):
        return np.einsum('ti,ti->t', x.conj(), y)

    lhs = ip(k2, JJk) * ip(psi, psi2) / r_norm2
    rhs = ip(JJk2, k) * ip(psi, back) / rbar_norm2
    worst = float(np.max(np.abs(lhs - rhs))) if trials else 0.0
    return KMSReport(action=action.name, label=action.base.format_label(u), trials=trials, seed=seed,
                     basis_change=basis_change, tol=tol, max_violation=worst, passed=worst <= tol)


@register
@dataclass(frozen=True)
class ActionBoundsReport:
    """Check of ``1/D_u <= J_u* J_u <= D_u`` and of its equality case.

    ``bound`` is the certified upper bound ``min_n D_{u,n}^{1/n}`` over the towers of ``u`` and its
    conjugate. ``equality_b`` requires a relaxed tensor functor, multiplicity rate 1 and
    ``max JJ = D_u = 1/min JJ`` with ``D_u`` known in closed form.
    """

    action: str
    label: str
    N: int
    jj_min: float
    jj_max: float
    bound: float
    rate: float | None
    mult_rate: float | None
    bound_holds: bool
    equality_checked: bool
    equality_b: bool


def verify_action_bounds(action: SpectralActionModel, u, N: int | None = None,
                         tol: float = VERDICT_TOL) -> ActionBoundsReport:
    """Certify that ``Sp(J_u* J_u)`` lies in ``[1/D_u, D_u]`` using a depth-`N` bound for ``D_u``."""
    base = action.base
    u = base.check(u)
    spec = action.JJ(u)
    ubar = base.fusion.dual(u)
    rep = growth_sequence(base, u, N, 'quantum_dim')
    B = rep.upper
    if ubar != u:
        B = min(B, growth_sequence(base, ubar, N, 'quantum_dim').upper)
    lo, hi = spec.min(), spec.max()
    holds = hi <= B * (1 + REL_TOL) and lo * B >= 1 - REL_TOL
    rate, mrate = rep.limit, action.mult_rate(u)
    checked = action.relaxed_tensor and mrate is not None and close(mrate, 1.0, tol) and rate is not None
    equal = checked and close(hi, rate, tol) and close(lo * rate, 1.0, tol)
    return ActionBoundsReport(action=action.name, label=rep.label, N=rep.N, jj_min=lo, jj_max=hi, bound=B,
                              rate=rate, mult_rate=mrate, bound_holds=holds, equality_checked=checked,
                              equality_b=equal)
