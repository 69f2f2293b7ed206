"""Dimension data of compact quantum groups: quantum and integral dimensions and ``j*j`` spectra.

Four families are available:

* :class:`SqU2` -- the deformation ``S_qU(2)``, ``0 < |q| <= 1``; exact in powers of ``|q|``.
* :class:`AoF` -- free orthogonal ``A_o(F)``, given by the eigenvalues of ``F*F``.
* :class:`AuF` -- free unitary ``A_u(F)``; only the tower of powers of the fundamental
  representation and of its conjugate is modelled.
* :class:`TableModel` -- any finite fusion table with supplied dimensions and spectra.

``j*j`` always means the positive operator attached to a standard solution of the conjugate
equations; its spectrum does not depend on which standard solution is chosen.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from fractions import Fraction

from .fusion import FreePowerFusion, FusionError, FusionSystem, Label, SU2Fusion, TableFusion
from .laurent import LaurentPoly, q_integer
from .spectra import REL_TOL, EigenSpectrum, SpectrumError, close, tensor_jj_spectrum

__all__ = ['ModelError', 'QuantumGroupModel', 'SqU2', 'AoF', 'AuF', 'TableModel', 'qdim', 'intdim',
           'jj_spectrum', 'lambda_bounds', 'tensor_jj_spectrum', 'model_from_dict',
           'q_from_trace']


class ModelError(ValueError):
    """Raised when model parameters violate a normalization or consistency requirement."""


def q_from_trace(trace: float) -> float:
    """The solution ``0 < q <= 1`` of ``q + 1/q = trace``."""
    if trace < 2.0 * (1.0 - REL_TOL):
        raise ModelError(f'q + 1/q = {trace} has no positive solution (need trace >= 2)')
    disc = max(trace * trace - 4.0, 0.0)
    return 2.0 / (trace + math.sqrt(disc))


def _chebyshev_rate(m: float) -> float:
    """Larger root of ``x**2 - m x + 1``: the growth rate of dims under the Clebsch-Gordan recursion."""
    return 1.0 / q_from_trace(m)


def _normalized_eigenvalues(eigs, family: str) -> tuple[float, ...]:
    eigs = tuple(sorted(float(x) for x in eigs))
    if not eigs:
        raise ModelError(f'{family}: F*F needs at least one eigenvalue')
    for x in eigs:
        if not (x > 0.0 and math.isfinite(x)):
            raise ModelError(f'{family}: F*F eigenvalues must be finite and > 0, got {x}')
    tr = math.fsum(eigs)
    tr_inv = math.fsum(1.0 / x for x in eigs)
    if not close(tr, tr_inv):
        raise ModelError(f'{family}: F must be normalized so that Trace(F*F) = Trace((F*F)^-1); '
                         f'measured Trace(F*F) = {tr!r}, Trace((F*F)^-1) = {tr_inv!r}')
    return eigs


class QuantumGroupModel(ABC):
    """Fusion rules plus per-irrep dimension data of a compact quantum group.

    Subclasses supply :meth:`qdim`, :meth:`intdim` and :meth:`_jj`; the closed-form growth
    rates :meth:`qdim_rate` and :meth:`intdim_rate` are ``None`` unless a family knows them.
    """

    family: str = ''

    def __init__(self, fusion: FusionSystem):
        self.fusion = fusion
        self._jj_cache: dict[Label, EigenSpectrum] = {}

    @abstractmethod
    def qdim(self, u: Label) -> Fraction | float:
        """Quantum dimension, exact (a Fraction) whenever the family allows."""

    @abstractmethod
    def intdim(self, u: Label) -> int:
        ...

    @abstractmethod
    def _jj(self, u: Label) -> EigenSpectrum:
        ...

    @property
    @abstractmethod
    def is_kac(self) -> bool:
        """True when every ``j*j`` is trivial, i.e. quantum and integral dimensions agree."""

    @abstractmethod
    def definition(self) -> dict:
        """JSON-ready model definition that :func:`model_from_dict` turns back into a model."""

    def check(self, u) -> Label:
        return self.fusion.check(u)

    def parse_label(self, text) -> Label:
        return self.fusion.parse_label(text)

    def format_label(self, u: Label) -> str:
        return self.fusion.format_label(u)

    def qdim_float(self, u: Label) -> float:
        return float(self.qdim(u))

    def jj_spectrum(self, u: Label) -> EigenSpectrum:
        u = self.check(u)
        spec = self._jj_cache.get(u)
        if spec is None:
            spec = self._jj_cache.setdefault(u, self._jj(u))
        return spec

    def lambda_bounds(self, u: Label) -> tuple[float, float]:
        """Smallest and largest eigenvalue of ``j*j``."""
        spec = self.jj_spectrum(u)
        return spec.min(), spec.max()

    def qdim_rate(self, u: Label) -> float | None:
        """Closed-form growth rate of quantum dimensions along the powers of `u`, if known."""
        return None

    def intdim_rate(self, u: Label) -> float | None:
        """Closed-form growth rate of integral dimensions along the powers of `u`, if known."""
        return None

    def intdim_rate_lower(self, u: Label) -> float:
        """A proven lower bound for the integral-dimension growth rate of `u` (1 if nothing better)."""
        return 1.0

    def dimension_gap(self, u: Label) -> float:
        """Relative excess ``(d(u) - dim(u)) / dim(u)``."""
        return (self.qdim_float(u) - self.intdim(u)) / self.intdim(u)

    def __repr__(self):
        return f'{type(self).__name__}({self.definition()!r})'

    def __eq__(self, other):
        return type(self) is type(other) and self.definition() == other.definition()

    def __hash__(self):
        return hash(repr(self))


class SqU2(QuantumGroupModel):
    """``S_qU(2)`` for real ``0 < |q| <= 1``; ``|q| = 1`` gives the Kac cases ``SU(2)``, ``S_{-1}U(2)``.

    Every quantity depends on ``|q|`` only. Quantum dimensions are the q-integers
    ``d(u_r) = [r+1]_{|q|}`` evaluated exactly, and ``Sp(j*j) = {|q|^r, |q|^(r-2), ..., |q|^-r}``.
    """

    family = 'sq_u2'

    def __init__(self, q: float):
        q = float(q)
        if not (0.0 < abs(q) <= 1.0):
            raise ModelError(f'sq_u2 needs 0 < |q| <= 1, got q = {q}')
        self.q = q
        self.absq = abs(q)
        super().__init__(SU2Fusion())

    @property
    def is_kac(self):
        return self.absq == 1.0

    def qdim(self, u):
        r = self.check(u)
        if self.absq == 1.0:
            return Fraction(r + 1)
        # [n]_q = (q^-n - q^n) / (q^-1 - q), exact in the rational |q|
        x = Fraction(self.absq)
        return (x ** -(r + 1) - x ** (r + 1)) / (1 / x - x)

    def qdim_laurent(self, u) -> LaurentPoly:
        return q_integer(self.check(u) + 1)

    def intdim(self, u):
        return self.check(u) + 1

    def _jj(self, u):
        return EigenSpectrum.from_exponents(range(u, -u - 1, -2), self.absq)

    def qdim_rate(self, u):
        return self.absq ** -self.check(u)

    def intdim_rate(self, u):
        self.check(u)
        return 1.0

    def definition(self):
        return {'family': self.family, 'q': self.q}


class AoF(QuantumGroupModel):
    """Free orthogonal quantum group ``A_o(F)`` from the eigenvalues of ``F*F``.

    The fusion rules are those of SU(2). ``Sp(j*j)`` on the fundamental representation is the
    spectrum of ``F*F``; on ``u_r`` it is the unique multiset compatible with the Clebsch-Gordan
    rule, ``Sp(u_{r+1}) = Sp(u_1) (x) Sp(u_r) - Sp(u_{r-1})``, computed exactly on monomials.
    Quantum dimensions are exact rationals from ``d(u_{r+1}) = T d(u_r) - d(u_{r-1})`` with
    ``T = Trace(F*F)``.

    Parameters
    ----------
    eigenvalues : sequence of float
        Eigenvalues of ``F*F``, normalized so ``Trace(F*F) = Trace((F*F)^-1)``. Because
        ``F conj(F)`` is a scalar the multiset is closed under ``x -> 1/x``; this is checked.
    """

    family = 'ao_f'

    def __init__(self, eigenvalues: Sequence[float]):
        eigs = _normalized_eigenvalues(eigenvalues, self.family)
        if len(eigs) < 2:
            raise ModelError('ao_f needs rank(F) >= 2')
        u1 = EigenSpectrum.from_values(eigs)
        if not u1.is_inversion_symmetric():
            raise ModelError(f'ao_f: eigenvalues of F*F must be closed under x -> 1/x, got {list(eigs)}')
        self.eigenvalues = eigs
        self.rank = len(eigs)
        self.trace = sum((Fraction(x) for x in eigs), Fraction(0))
        self.q = q_from_trace(float(self.trace))
        super().__init__(SU2Fusion())
        self._tower = [EigenSpectrum.ones(1), u1]
        self._qdims = [Fraction(1), self.trace]
        self._dims = [1, self.rank]

    @property
    def is_kac(self):
        return all(x == 1.0 for x in self.eigenvalues)

    def qdim(self, u):
        r = self.check(u)
        while len(self._qdims) <= r:
            self._qdims.append(self.trace * self._qdims[-1] - self._qdims[-2])
        return self._qdims[r]

    def intdim(self, u):
        r = self.check(u)
        while len(self._dims) <= r:
            self._dims.append(self.rank * self._dims[-1] - self._dims[-2])
        return self._dims[r]

    def _jj(self, u):
        while len(self._tower) <= u:
            nxt = self._tower[1].tensor(self._tower[-1])
            try:
                nxt = nxt.subtract(self._tower[-2])
            except SpectrumError as err:
                raise ModelError(f'ao_f: Clebsch-Gordan extension of Sp(F*F) fails at '
                                 f'u{len(self._tower)}: {err}') from err
            self._tower.append(nxt)
        return self._tower[u]

    def qdim_rate(self, u):
        return self.q ** -self.check(u)

    def intdim_rate(self, u):
        return _chebyshev_rate(self.rank) ** self.check(u)

    def intdim_rate_lower(self, u):
        # dim(u_{s+1}) / dim(u_s) = m - dim(u_{s-1}) / dim(u_s) >= m - 1/rho = rho by induction,
        # so the dims along u_r^{(x) n} (top summand u_{rn}) grow at least like rho^(rn).
        return self.intdim_rate(u)

    def equivalent_sq_u2(self) -> SqU2:
        """The deformation of SU(2) with the same tensor category: ``q + 1/q = Trace(F*F)``."""
        return SqU2(self.q)

    def definition(self):
        return {'family': self.family, 'fstarf_eigenvalues': list(self.eigenvalues)}


class AuF(QuantumGroupModel):
    """Free unitary quantum group ``A_u(F)``, restricted to the powers ``g^k`` and ``G^k``.

    ``g`` is the fundamental representation, ``G`` its conjugate. Every power ``g^k`` is
    irreducible, so ``d(g^k) = Trace(F*F)^k``, ``dim(g^k) = rank^k`` and ``Sp(j*j)`` is the
    ``k``-fold tensor power of ``Sp(F*F)`` (inverted for ``G^k``). Mixed words are rejected.
    """

    family = 'au_f'

    def __init__(self, eigenvalues: Sequence[float]):
        eigs = _normalized_eigenvalues(eigenvalues, self.family)
        if len(eigs) < 2:
            raise ModelError('au_f needs rank(F) >= 2')
        self.eigenvalues = eigs
        self.rank = len(eigs)
        self.trace = sum((Fraction(x) for x in eigs), Fraction(0))
        super().__init__(FreePowerFusion())
        self._g = EigenSpectrum.from_values(eigs)

    def _power(self, u) -> tuple[str, int]:
        u = self.check(u)
        if not FreePowerFusion.is_power(u):
            raise FusionError(f'au_f: dimension data is only modelled for powers of g or G, got {u!r}')
        return (u[:1], len(u))

    @property
    def is_kac(self):
        return all(x == 1.0 for x in self.eigenvalues)

    def qdim(self, u):
        _, k = self._power(u)
        return self.trace ** k

    def intdim(self, u):
        _, k = self._power(u)
        return self.rank ** k

    def _jj(self, u):
        letter, k = self._power(u)
        spec = self._g.power(k)
        return spec.inverse() if letter == 'G' else spec

    def qdim_rate(self, u):
        return float(self.trace) ** self._power(u)[1]

    def intdim_rate(self, u):
        return float(self.rank) ** self._power(u)[1]

    def intdim_rate_lower(self, u):
        # every power is irreducible: Dim_{g^k, n} = rank^(k n) exactly
        return self.intdim_rate(u)

    def definition(self):
        return {'family': self.family, 'fstarf_eigenvalues': list(self.eigenvalues)}


class TableModel(QuantumGroupModel):
    """Model over an explicit finite fusion table.

    Parameters
    ----------
    fusion : TableFusion
    dims : mapping
        Integral dimension of each irrep.
    qdims : mapping
        Quantum dimension of each irrep (int, Fraction or float).
    jj : mapping, optional
        ``Sp(j*j)`` per irrep; irreps without one raise on :meth:`jj_spectrum`.
    source : dict, optional
        The JSON document the model came from, returned by :meth:`definition`.
    """

    family = 'table'

    def __init__(self, fusion: TableFusion, dims: Mapping, qdims: Mapping, jj: Mapping | None = None,
                 source: dict | None = None):
        super().__init__(fusion)
        self._dims = dict(dims)
        self._qdims = dict(qdims)
        self._given_jj = dict(jj or {})
        self._source = source
        for k in fusion.keys:
            dim, d = self._dims[k], self._qdims[k]
            if d < dim * (1 - REL_TOL):
                raise ModelError(f'irrep {k!r}: quantum dimension {d} is below the integral dimension {dim}')
            spec = self._given_jj.get(k)
            if spec is None:
                continue
            if spec.cardinality != dim:
                raise ModelError(f'irrep {k!r}: jj_spectrum has {spec.cardinality} entries, dim is {dim}')
            if not (close(spec.total(), float(d)) and close(spec.inverse_total(), float(d))):
                raise ModelError(f'irrep {k!r}: a standard solution needs Trace(j*j) = Trace((j*j)^-1) '
                                 f'= d; got {spec.total()!r}, {spec.inverse_total()!r}, d = {float(d)!r}')

    @property
    def is_kac(self):
        return all(self._qdims[k] == self._dims[k] for k in self.fusion.keys)

    def qdim(self, u):
        return self._qdims[self.check(u)]

    def intdim(self, u):
        return self._dims[self.check(u)]

    def _jj(self, u):
        try:
            return self._given_jj[u]
        except KeyError:
            raise ModelError(f'table irrep {u!r} has no jj_spectrum data') from None

    def definition(self):
        return self._source if self._source is not None else {'family': self.family}


def qdim(model: QuantumGroupModel, u: Label):
    """Quantum dimension ``d(u)`` (exact when available)."""
    return model.qdim(u)


def intdim(model: QuantumGroupModel, u: Label) -> int:
    """Integral dimension ``dim(u)``."""
    return model.intdim(u)


def jj_spectrum(model: QuantumGroupModel, u: Label) -> EigenSpectrum:
    """Spectrum of ``j_u* j_u`` for a standard solution."""
    return model.jj_spectrum(u)


def lambda_bounds(model: QuantumGroupModel, u: Label) -> tuple[float, float]:
    """``(lambda_u, Lambda_u)``: extreme eigenvalues of ``j_u* j_u``."""
    return model.lambda_bounds(u)


def _table_model(doc: Mapping) -> TableModel:
    table = doc.get('table', doc)
    q = doc.get('q', table.get('q'))
    kac = bool(table.get('kac', doc.get('kac', False)))
    irreps = table.get('irreps')
    if not isinstance(irreps, list) or not irreps:
        raise ModelError('table: "irreps" must be a nonempty list')
    keys, duals, dims, qdims, jj = [], {}, {}, {}, {}
    for i, entry in enumerate(irreps):
        where = f'irreps[{i}]'
        if not isinstance(entry, Mapping) or 'key' not in entry:
            raise ModelError(f'{where}: needs a "key"')
        k = entry['key']
        where = f'irreps[{i}] (key={k!r})'
        keys.append(k)
        duals[k] = entry.get('dual', k)
        dim = entry.get('dim')
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise ModelError(f'{where}: "dim" must be a positive integer')
        dims[k] = dim
        if 'qdim_exponents' in entry:
            if q is None:
                raise ModelError(f'{where}: "qdim_exponents" needs a model-level "q"')
            qdims[k] = LaurentPoly.from_exponents(entry['qdim_exponents']).evaluate(Fraction(abs(float(q))))
        elif 'qdim_value' in entry:
            value = entry['qdim_value']
            qdims[k] = value if isinstance(value, int) else float(value)
        elif kac:
            qdims[k] = dim
        else:
            raise ModelError(f'{where}: needs "qdim_exponents" or "qdim_value" (or a table-level "kac": true)')
        try:
            if 'jj_exponents' in entry:
                if q is None:
                    raise ModelError(f'{where}: "jj_exponents" needs a model-level "q"')
                jj[k] = EigenSpectrum.from_exponents(entry['jj_exponents'], abs(float(q)))
            elif 'jj_spectrum' in entry:
                jj[k] = EigenSpectrum.from_values(entry['jj_spectrum'])
            elif kac:
                jj[k] = EigenSpectrum.ones(dim)
        except SpectrumError as err:
            raise ModelError(f'{where}: {err}') from err
    fusion = {}
    for i, entry in enumerate(table.get('fusion', [])):
        try:
            a, b, out = entry['a'], entry['b'], entry['out']
            outs = {}
            for o in out:
                outs[o['c']] = outs.get(o['c'], 0) + o['mult']
        except (KeyError, TypeError):
            raise ModelError(f'fusion[{i}]: expected {{"a", "b", "out": [{{"c", "mult"}}]}}') from None
        if (a, b) in fusion:
            raise ModelError(f'fusion[{i}] (a={a!r}, b={b!r}): duplicate entry')
        fusion[(a, b)] = outs
    try:
        fs = TableFusion(keys, duals, fusion, unit=table.get('unit'), dims=dims, qdims=qdims)
    except FusionError as err:
        raise ModelError(str(err)) from err
    return TableModel(fs, dims, qdims, jj, source=dict(doc))


def model_from_dict(doc: Mapping) -> QuantumGroupModel:
    """Build a model from its JSON definition.

    ``{"family": "sq_u2" | "ao_f" | "au_f" | "table", "q": ..., "fstarf_eigenvalues": [...],
    "table": {...}}``
    """
    family = doc.get('family')
    if family == 'sq_u2':
        if 'q' not in doc:
            raise ModelError('sq_u2 model needs "q"')
        return SqU2(doc['q'])
    if family in ('ao_f', 'au_f'):
        eigs = doc.get('fstarf_eigenvalues')
        if not isinstance(eigs, list):
            raise ModelError(f'{family} model needs a "fstarf_eigenvalues" list')
        return (AoF if family == 'ao_f' else AuF)(eigs)
    if family == 'table':
        return _table_model(doc)
    raise ModelError(f'unknown model family {family!r} (expected sq_u2, ao_f, au_f or table)')
