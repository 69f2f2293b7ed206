"""Growth of dimensions and multiplicities along tensor powers.

For an irrep ``u`` and ``n >= 1`` let ``D_{u,n}``, ``Dim_{u,n}`` and ``Mult_{u,n}`` be the largest
quantum dimension, integral dimension and action multiplicity among the irreducible summands
of ``u^{(x) n}``. The first two sequences are submultiplicative, so by Fekete's lemma their
``n``-th roots converge to their infimum. The rates ``D_u`` and ``Dim_u`` are therefore bracketed
by a proven lower bound and the smallest root seen so far.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .models import QuantumGroupModel
from .reports import register
from .spectra import close

__all__ = ['KINDS', 'VERDICT_TOL', 'GrowthReport', 'GrowthBoundsReport', 'default_depth', 'log_value',
           'growth_sequence', 'growth_rate_bracket', 'verify_growth_bounds']

KINDS = ('quantum_dim', 'integral_dim', 'multiplicity')
VERDICT_TOL = 1e-6


def default_depth(model: QuantumGroupModel) -> int:
    """Default number of tensor powers: long for exact families, short for tables."""
    return 12 if model.family == 'table' else 24


def log_value(x) -> float:
    """Natural log of a positive int, Fraction or float, without overflowing on huge rationals."""
    if isinstance(x, Fraction):
        return math.log(x.numerator) - math.log(x.denominator)
    return math.log(x)


def _root(value, n: int) -> float:
    if value == 0:
        return 0.0
    return math.exp(log_value(value) / n)


def _verdict(lower, upper, limit, tol=VERDICT_TOL) -> str:
    if limit is not None:
        return 'subexponential' if limit <= 1.0 + tol else 'exponential'
    if upper is not None and upper <= 1.0 + tol:
        return 'subexponential'
    if lower is not None and lower > 1.0 + tol:
        return 'exponential'
    return 'undetermined'


@register
@dataclass(frozen=True)
class GrowthReport:
    """Finite-depth data for one growth sequence.

    Attributes
    ----------
    kind : str
        One of ``quantum_dim``, ``integral_dim``, ``multiplicity``.
    label : str
    N : int
    terms : tuple of (n, value, root)
        ``value`` is exact (int or Fraction) whenever the model is.
    lower, upper : float or None
        Certified bracket of the growth rate. ``upper`` is the smallest root; the multiplicity
        sequence is not submultiplicative and carries no bracket.
    limit : float or None
        The rate in closed form, when the model family provides one.
    estimate : float or None
        Multiplicity only: the smallest root over the last ``ceil(N/2)`` terms.
    verdict : str
        ``subexponential``, ``exponential`` or ``undetermined``.
    """

    kind: str
    label: str
    N: int
    terms: tuple
    lower: float | None
    upper: float | None
    limit: float | None
    estimate: float | None
    verdict: str

    def values(self) -> tuple:
        return tuple(v for _, v, _ in self.terms)

    def roots(self) -> tuple:
        return tuple(r for _, _, r in self.terms)


def growth_sequence(model: QuantumGroupModel, u, N: int | None = None, kind: str = 'quantum_dim',
                    action=None, cap: int | None = None) -> GrowthReport:
    """Compute ``D_{u,n}``, ``Dim_{u,n}`` or ``Mult_{u,n}`` for ``n = 1..N``.

    Parameters
    ----------
    model : QuantumGroupModel
    u : label
    N : int, optional
        Number of tensor powers; :func:`default_depth` if omitted.
    kind : str
        ``quantum_dim``, ``integral_dim`` or ``multiplicity``.
    action : SpectralActionModel, optional
        Required for ``multiplicity``; non-spectral summands count with multiplicity 0.
    cap : int, optional
        Support cap for the decompositions.

    Returns
    -------
    GrowthReport
    """
    u = model.check(u)
    N = default_depth(model) if N is None else N
    if N < 1:
        raise ValueError(f'N must be >= 1, got {N}')
    if kind == 'quantum_dim':
        weight = model.qdim
    elif kind == 'integral_dim':
        weight = model.intdim
    elif kind == 'multiplicity':
        if action is None:
            raise ValueError('the multiplicity sequence needs an action model')
        weight = action.mult
    else:
        raise ValueError(f'unknown growth kind {kind!r}; expected one of {KINDS}')

    cache: dict = {}

    def cached(v):
        if v not in cache:
            cache[v] = weight(v)
        return cache[v]

    terms = []
    for n, vec in enumerate(model.fusion.power_tower(u, N, cap)):
        if n == 0:
            continue
        value = max(cached(v) for v in vec)
        terms.append((n, value, _root(value, n)))
    roots = [r for _, _, r in terms]

    lower = upper = limit = estimate = None
    if kind == 'quantum_dim':
        try:
            lower = model.lambda_bounds(u)[1]
        except ValueError:
            lower = 1.0  # every quantum dimension is >= 1
        upper = min(roots)
        limit = model.qdim_rate(u)
    elif kind == 'integral_dim':
        lower = model.intdim_rate_lower(u)
        upper = min(roots)
        limit = model.intdim_rate(u)
    else:
        tail = roots[-math.ceil(N / 2):]
        estimate = min(tail)
        limit = action.mult_rate(u)
    return GrowthReport(kind=kind, label=model.format_label(u), N=N, terms=tuple(terms),
                        lower=lower, upper=upper, limit=limit, estimate=estimate,
                        verdict=_verdict(lower, upper, limit))


def growth_rate_bracket(model: QuantumGroupModel, u, N: int | None = None) -> tuple[float, float]:
    """``(Lambda_u, min_{n <= N} D_{u,n}^{1/n})``, an interval containing ``D_u``."""
    rep = growth_sequence(model, u, N, 'quantum_dim')
    return rep.lower, rep.upper


@register
@dataclass(frozen=True)
class GrowthBoundsReport:
    """Check of ``1/D_u <= lambda_u <= Lambda_u <= D_u`` for one irrep.

    Attributes
    ----------
    holds : bool
        ``D_{u,n}^{1/n} >= Lambda_u`` and ``D_{ubar,n}^{1/n} >= 1/lambda_u`` for all ``n <= N``.
    equality_detected : bool
        ``Dim_u`` is subexponential and ``D_u`` equals both ``Lambda_u`` and ``1/lambda_u``.
    strict_extremes : bool or None
        ``D_u > Lambda_u``, decided from the closed-form rate (None when unknown).
    inverse_symmetric : bool
        ``lambda_u * Lambda_u = 1``, i.e. the middle inequality is tight in the scale-free sense.
    violations : tuple of (label, n, root, bound)
    """

    label: str
    N: int
    lambda_min: float
    lambda_max: float
    upper: float
    upper_dual: float
    rate: float | None
    dim_verdict: str
    holds: bool
    equality_detected: bool
    strict_extremes: bool | None
    inverse_symmetric: bool
    violations: tuple


def verify_growth_bounds(model: QuantumGroupModel, u, N: int | None = None,
                         tol: float = VERDICT_TOL) -> GrowthBoundsReport:
    """Certify the eigenvalue bounds ``1/D_u <= lambda_u <= Lambda_u <= D_u`` at depth `N`."""
    u = model.check(u)
    ubar = model.fusion.dual(u)
    lam, Lam = model.lambda_bounds(u)
    qd = growth_sequence(model, u, N, 'quantum_dim')
    qd_bar = qd if ubar == u else growth_sequence(model, ubar, N, 'quantum_dim')
    dim = growth_sequence(model, u, N, 'integral_dim')

    violations = []
    for label, rep, bound in ((qd.label, qd, Lam), (qd_bar.label, qd_bar, 1.0 / lam)):
        for n, value, root in rep.terms:
            # compare logs: D_{u,n} >= bound^n
            if log_value(value) < n * math.log(bound) - n * tol:
                violations.append((label, n, root, bound))

    rate = qd.limit
    subexp = dim.verdict == 'subexponential'
    if rate is not None:
        collapsed = close(rate, Lam, tol) and close(rate, 1.0 / lam, tol)
        strict = rate > Lam * (1.0 + tol)
    else:
        # only a collapsed bracket certifies equality; strictness needs the limit itself
        collapsed = qd.upper <= Lam * (1.0 + tol) and qd_bar.upper <= (1.0 / lam) * (1.0 + tol)
        strict = None
    return GrowthBoundsReport(label=qd.label, N=qd.N, lambda_min=lam, lambda_max=Lam, upper=qd.upper,
                              upper_dual=qd_bar.upper, rate=rate, dim_verdict=dim.verdict,
                              holds=not violations, equality_detected=subexp and collapsed,
                              strict_extremes=strict, inverse_symmetric=close(lam * Lam, 1.0, tol),
                              violations=tuple(violations))
