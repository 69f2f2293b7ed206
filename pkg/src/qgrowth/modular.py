"""Modular theory of the invariant state of an ergodic action.

On the spectral subspace of ``u`` the modular operator acts diagonally with eigenvalues
``mu * nu``, ``mu`` in ``Sp(J_u* J_u)^-1`` and ``nu`` in ``Sp(j_u* j_u)^-1``. From these spectra this
module decides whether the state is a trace, proposes the subgroup of ``R_+`` that the point
spectrum generates, and evaluates the lower bounds for ``lambda`` in a type ``III_lambda``
conclusion.

Factoriality of the algebra and of its centralizer is an assumption the user asserts; it is
recorded in the reports and never verified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .actions import SpectralActionModel
from .growth import VERDICT_TOL, growth_sequence
from .reports import register
from .spectra import REL_TOL, EigenSpectrum

__all__ = ['DEFAULT_DEPTH', 'CONNES_TOL', 'GAP_TOL', 'ModularError', 'ModularSpectrumReport', 'Classification',
           'TraceReport', 'Type3BoundReport', 'KacGrowthReport', 'delta_point_spectrum', 'connes_subgroup',
           'is_tracial', 'type3_lower_bound', 'kac_bound', 'kac_exponential_necessity', 'plot_rows']

DEFAULT_DEPTH = 4
CONNES_TOL = 1e-7
GAP_TOL = 1e-6
MAX_MULTIPLIER = 1000

ASSUMPTIONS_NOTE = ('type conclusions assume the von Neumann algebra and the centralizer of the invariant '
                    'state are factors; this is asserted, not verified')


class ModularError(ValueError):
    """Raised when a modular quantity is undefined for the given action."""


def _subset(action: SpectralActionModel, labels, depth):
    if labels is None:
        return action.labels(depth)
    out = []
    for u in labels:
        u = action.base.check(u)
        if not action.is_spectral(u):
            raise ModularError(f'{action.base.format_label(u)} is not spectral for the {action.name} action')
        out.append(u)
    return tuple(out)


@register
@dataclass(frozen=True)
class Classification:
    """Outcome of the subgroup detection.

    ``kind`` is ``trace``, ``III_lambda_candidate``, ``III_1_candidate`` or ``undetermined``;
    ``lam`` is set for ``III_lambda_candidate``. ``mode`` says whether exponents were exact.
    """

    kind: str
    lam: float | None
    mode: str
    detail: str


@register
@dataclass(frozen=True)
class ModularSpectrumReport:
    """Point spectrum of the modular operator on the spectral subalgebra of the chosen irreps."""

    action: str
    labels: tuple
    per_irrep: tuple
    total: EigenSpectrum
    classification: Classification
    factorial_assumptions: bool
    assumptions_note: str


def _exact_classification(spec: EigenSpectrum) -> Classification:
    (base,) = spec.bases
    g = reduce(math.gcd, (abs(e[0]) for e, _ in spec.terms), 0)
    lam = min(base ** g, base ** -g)
    return Classification('III_lambda_candidate', lam, 'exact',
                          f'exponents of {base!r} generate {g}Z')


def _approx_gcd(logs, eps):
    g = logs[0]
    for x in logs[1:]:
        a, b = max(g, x), min(g, x)
        while b > eps:
            a, b = b, abs(a - round(a / b) * b)
        g = a
    return g


def connes_subgroup(spectrum, tol: float = CONNES_TOL) -> Classification:
    """Find the closed subgroup of ``R_+`` generated by a modular point spectrum.

    With a single exact base the answer is ``base^gcd(exponents)``. Otherwise the positive logs
    are reduced by a tolerant Euclidean algorithm: a generator for which every log is a multiple
    of at most 1000 gives ``III_lambda``; a reduction that collapses below ``sqrt(tol)`` scale gives
    ``III_1``; anything in between is ``undetermined``. ``III_0`` is never returned: under the
    factoriality assumptions it cannot occur.

    Parameters
    ----------
    spectrum : EigenSpectrum or ModularSpectrumReport
    tol : float
    """
    if isinstance(spectrum, ModularSpectrumReport):
        spectrum = spectrum.total
    if not spectrum.cardinality:
        raise ModularError('empty modular spectrum')
    if spectrum.is_trivial(tol):
        return Classification('trace', None, 'exact', 'spectrum is {1}')
    if spectrum.is_single_base():
        return _exact_classification(spectrum)

    values = [v for v, _ in spectrum.distinct()]
    logs = sorted({abs(math.log(v)) for v in values if abs(math.log(v)) > tol})
    eps = tol * max(1.0, logs[-1])
    g = _approx_gcd(logs, eps)
    mults = [x / g for x in logs] if g > eps else [math.inf]
    top = max(mults)
    integral = all(abs(m - round(m)) <= tol * max(1.0, m) * 10 for m in mults)
    if g > eps and integral and top <= MAX_MULTIPLIER:
        lam = math.exp(-g)
        for v in values:
            if abs(abs(math.log(v)) - g) <= eps:
                lam = min(v, 1.0 / v)  # keep the exact eigenvalue when it is a generator
                break
        return Classification('III_lambda_candidate', lam, 'float',
                              f'all log-eigenvalues are multiples (<= {round(top)}) of {g!r}')
    if top > 1.0 / math.sqrt(tol):
        return Classification('III_1_candidate', None, 'float',
                              'log-eigenvalues admit no common generator within tolerance')
    return Classification('undetermined', None, 'float',
                          f'log-lattice reduction is unstable (largest multiplier {top:.6g})')


def delta_point_spectrum(action: SpectralActionModel, labels=None, depth: int = DEFAULT_DEPTH,
                         tol: float = CONNES_TOL) -> ModularSpectrumReport:
    """Eigenvalues of the modular operator on the spectral subspaces of `labels`.

    Parameters
    ----------
    action : SpectralActionModel
    labels : iterable of labels, optional
        Spectral irreps to include; by default those with label depth at most `depth`.
    tol : float
        Tolerance for :func:`connes_subgroup`.
    """
    labels = _subset(action, labels, depth)
    per = []
    total = EigenSpectrum()
    for u in labels:
        spec = action.JJ(u).inverse().tensor(action.base.jj_spectrum(u).inverse())
        per.append((action.base.format_label(u), spec))
        total = total + spec
    if not total.cardinality:
        raise ModularError('no spectral irreps selected')
    return ModularSpectrumReport(action=action.name, labels=tuple(lbl for lbl, _ in per), per_irrep=tuple(per),
                                 total=total, classification=connes_subgroup(total, tol),
                                 factorial_assumptions=action.factorial_assumptions,
                                 assumptions_note=ASSUMPTIONS_NOTE)


def plot_rows(report: ModularSpectrumReport) -> list[tuple[float, int]]:
    """``(log eigenvalue, multiplicity)`` pairs of the global spectrum, increasing."""
    return [(math.log(v), c) for v, c in report.total.distinct()]


@register
@dataclass(frozen=True)
class TraceReport:
    """Whether the invariant state is a trace.

    ``condition`` names the first failure: ``a`` when ``d(u) > dim(u)`` (nontrivial ``j*j``),
    ``b`` when ``J_u`` is not antiunitary (nontrivial ``J*J``).
    """

    action: str
    tracial: bool
    witness: str | None
    condition: str | None
    detail: str


def is_tracial(action: SpectralActionModel, labels=None, depth: int = DEFAULT_DEPTH,
               tol: float = REL_TOL) -> TraceReport:
    """The invariant state is a trace iff every spectral ``u`` has trivial ``j*j`` and ``J*J``."""
    for u in _subset(action, labels, depth):
        name = action.base.format_label(u)
        jj = action.base.jj_spectrum(u)
        if not jj.is_trivial(tol):
            return TraceReport(action.name, False, name, 'a',
                               f'd({name}) = {action.base.qdim_float(u):.12g} > dim = {action.base.intdim(u)}')
        JJ = action.JJ(u)
        if not JJ.is_trivial(tol):
            return TraceReport(action.name, False, name, 'b',
                               f'Sp(J*J) on {name} spans [{JJ.min():.12g}, {JJ.max():.12g}]')
    return TraceReport(action.name, True, None, None, 'all spectral j*j and J*J are trivial')


@register
@dataclass(frozen=True)
class Type3BoundReport:
    """Lower bound for ``lambda`` when the algebra is of type ``III_lambda``.

    ``rows`` holds ``(label, lambda_u, Lambda_u, D, value)`` for every qualifying irrep, where
    ``value = min(lambda_u, 1/Lambda_u) / D``; ``bound`` is their maximum.
    """

    action: str
    bound: float
    forced_III_1: bool
    rows: tuple
    closed_form: bool
    N: int | None
    factorial_assumptions: bool
    assumptions_note: str


def type3_lower_bound(action: SpectralActionModel, labels=None, depth: int = DEFAULT_DEPTH,
                      N: int | None = None, use_closed_form: bool = True,
                      tol: float = VERDICT_TOL) -> Type3BoundReport:
    """``sup_u min(lambda_u, 1/Lambda_u) / D_u`` over spectral ``u`` with ``d(u) > dim(u)``.

    An irrep qualifies when its relative dimension gap exceeds ``1e-6``. ``D_u`` is the
    closed-form rate when known and `use_closed_form` is set; otherwise the depth-`N` bound
    ``min_n D_{u,n}^{1/n} >= D_u``, which keeps the result a valid (weaker) bound.

    Raises
    ------
    ModularError
        When no irrep qualifies; for Kac models use :func:`kac_bound`.
    """
    base = action.base
    rows = []
    closed = True
    for u in _subset(action, labels, depth):
        if base.dimension_gap(u) <= GAP_TOL:
            continue
        lam, Lam = base.lambda_bounds(u)
        D = base.qdim_rate(u) if use_closed_form else None
        if D is None:
            closed = False
            D = growth_sequence(base, u, N, 'quantum_dim').upper
            ubar = base.fusion.dual(u)
            if ubar != u:
                D = min(D, growth_sequence(base, ubar, N, 'quantum_dim').upper)
        rows.append((base.format_label(u), lam, Lam, D, min(lam, 1.0 / Lam) / D))
    if not rows:
        raise ModularError('no spectral irrep has d(u) > dim(u); the bound is vacuous (see kac_bound)')
    bound = max(r[-1] for r in rows)
    return Type3BoundReport(action=action.name, bound=bound, forced_III_1=bound >= 1.0 - tol, rows=tuple(rows),
                            closed_form=closed, N=None if closed else N,
                            factorial_assumptions=action.factorial_assumptions,
                            assumptions_note=ASSUMPTIONS_NOTE)


def _nontrivial(action, labels, depth):
    return [u for u in _subset(action, labels, depth) if not action.JJ(u).is_trivial()]


def kac_bound(action: SpectralActionModel, labels=None, depth: int = DEFAULT_DEPTH) -> float:
    """``1/n`` for the smallest dimension ``n`` of a spectral irrep with nontrivial ``J*J`` (Kac case)."""
    if not action.base.is_kac:
        raise ModularError(f'{action.base.family} model is not of Kac type')
    dims = [action.base.intdim(u) for u in _nontrivial(action, labels, depth)]
    if not dims:
        raise ModularError('action is tracial: every J*J is trivial, the bound is meaningless')
    return 1.0 / min(dims)


@register
@dataclass(frozen=True)
class KacGrowthReport:
    """For a Kac model: a non-tracial action forces exponential integral-dimension growth.

    ``status`` is ``pass`` (tracial, or some spectral irrep certified exponential), ``fail`` (all
    certified subexponential) or ``undetermined``. ``rows`` holds ``(label, verdict)``.
    """

    action: str
    tracial: bool
    status: str
    witness: str | None
    rows: tuple


def kac_exponential_necessity(action: SpectralActionModel, labels=None, depth: int = DEFAULT_DEPTH,
                              N: int | None = None) -> KacGrowthReport:
    base = action.base
    if not base.is_kac:
        raise ModularError(f'{base.family} model is not of Kac type')
    trace = is_tracial(action, labels, depth)
    if trace.tracial:
        return KacGrowthReport(action.name, True, 'pass', None, ())
    rows = []
    for u in _subset(action, labels, depth):
        if u == base.fusion.unit:
            continue
        rows.append((base.format_label(u), growth_sequence(base, u, N, 'integral_dim').verdict))
    witness = next((lbl for lbl, v in rows if v == 'exponential'), None)
    if witness is not None:
        status = 'pass'
    elif any(v == 'undetermined' for _, v in rows):
        status = 'undetermined'
    else:
        status = 'fail'
    return KacGrowthReport(action.name, False, status, witness, tuple(rows))
