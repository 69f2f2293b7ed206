"""Strictly positive spectra with an exact monomial representation.

A spectrum is a multiset of monomials ``b_1**e_1 * ... * b_k**e_k`` with integer exponents
over a tuple of bases ``0 < b_i < 1``. Tensor products add exponent vectors, conjugation
negates them, so spectra built from a handful of eigenvalues stay exact no matter how many
tensor steps they go through. With a single base this is the familiar "integer exponents of
``q``" form; numeric values are only formed on request.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

import numpy as np

from .laurent import LaurentPoly

__all__ = ['EigenSpectrum', 'SpectrumError', 'REL_TOL', 'tensor_jj_spectrum', 'close']

REL_TOL = 1e-9
EXPAND_LIMIT = 10**7


class SpectrumError(ValueError):
    """Raised for non-positive entries or a multiset subtraction that goes negative."""


def close(x: float, y: float, rtol: float = REL_TOL) -> bool:
    return abs(x - y) <= rtol * max(abs(x), abs(y))


def _monomial(bases, exps) -> float:
    return math.prod(b ** e for b, e in zip(bases, exps))


def _merge_bases(target: list[float], extra: Sequence[float], rtol: float) -> list[int]:
    """Append the bases of `extra` missing from `target`; return their positions in `target`."""
    where = []
    for b in extra:
        for i, t in enumerate(target):
            if close(b, t, rtol):
                where.append(i)
                break
        else:
            target.append(b)
            where.append(len(target) - 1)
    return where


class EigenSpectrum:
    """Multiset of strictly positive reals stored as exact monomials.

    Parameters
    ----------
    bases : sequence of float
        Distinct numbers in ``(0, 1)``.
    counts : mapping
        ``exponent tuple -> multiplicity``; every tuple has ``len(bases)`` entries.

    Notes
    -----
    The stored form is canonical: unused bases are dropped and the remaining ones sorted, so
    ``==`` is structural equality. Use :meth:`approx_equal` to compare spectra whose bases were
    obtained independently from floating-point data.
    """

    __slots__ = ('bases', 'terms', '_distinct')

    def __init__(self, bases: Sequence[float] = (), counts: Mapping[tuple[int, ...], int] | None = None):
        bases = tuple(float(b) for b in bases)
        for b in bases:
            if not 0.0 < b < 1.0:
                raise SpectrumError(f'monomial bases must lie in (0, 1), got {b}')
        k = len(bases)
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in (counts or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != k:
                raise SpectrumError(f'exponent vector {exps} does not match {k} bases')
            if int(c) != c or c < 0:
                raise SpectrumError(f'multiplicities must be nonnegative integers, got {c}')
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        used = [i for i in range(k) if any(e[i] for e in clean)]
        order = sorted(used, key=lambda i: bases[i])
        self.bases = tuple(bases[i] for i in order)
        merged: dict[tuple[int, ...], int] = {}
        for exps, c in clean.items():
            key = tuple(exps[i] for i in order)
            merged[key] = merged.get(key, 0) + c
        self.terms = tuple(sorted(merged.items(), key=lambda t: (_monomial(self.bases, t[0]), t[0])))
        self._distinct = None

    # -- construction ---------------------------------------------------------------------------

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], base: float) -> EigenSpectrum:
        """Spectrum ``{base**e}`` for an exponent multiset; ``base`` in ``(0, 1]``."""
        if not 0.0 < base <= 1.0:
            raise SpectrumError(f'base must lie in (0, 1], got {base}')
        if base == 1.0:
            return cls((), {(): sum(1 for _ in exponents)})
        counts: dict[tuple[int, ...], int] = {}
        for e in exponents:
            counts[(e,)] = counts.get((e,), 0) + 1
        return cls((base,), counts)

    @classmethod
    def from_laurent(cls, poly: LaurentPoly, base: float) -> EigenSpectrum:
        if not poly.is_nonnegative():
            raise SpectrumError('a spectrum needs nonnegative multiplicities')
        if base == 1.0:
            return cls((), {(): sum(c for _, c in poly.coeffs)})
        return cls((base,), {(e,): c for e, c in poly.coeffs})

    @classmethod
    def from_values(cls, values: Iterable[float], rtol: float = REL_TOL) -> EigenSpectrum:
        """Build a spectrum from raw positive floats.

        Values equal to 1 within `rtol` become the empty monomial; a value ``v < 1`` becomes a
        base, and ``v > 1`` is matched against the inverse of an existing base before a new base
        ``1/v`` is created. Inverse pairs therefore share a base and tensor powers stay exact.
        """
        vals = sorted(float(v) for v in values)
        for v in vals:
            if not (v > 0.0 and math.isfinite(v)):
                raise SpectrumError(f'spectrum entries must be finite and > 0, got {v}')
        bases: list[float] = []
        atoms: list[tuple[int, int] | None] = []
        for v in vals:
            if close(v, 1.0, rtol):
                atoms.append(None)
                continue
            b, sign = (v, 1) if v < 1.0 else (1.0 / v, -1)
            atoms.append((_merge_bases(bases, [b], rtol)[0], sign))
        k = len(bases)
        counts: dict[tuple[int, ...], int] = {}
        for atom in atoms:
            exps = [0] * k
            if atom is not None:
                exps[atom[0]] = atom[1]
            key = tuple(exps)
            counts[key] = counts.get(key, 0) + 1
        return cls(bases, counts)

    @classmethod
    def ones(cls, n: int) -> EigenSpectrum:
        return cls((), {(): n})

    # -- basic queries --------------------------------------------------------------------------

    @property
    def cardinality(self) -> int:
        return sum(c for _, c in self.terms)

    def __len__(self):
        return self.cardinality

    def __bool__(self):
        return bool(self.terms)

    def distinct(self) -> tuple[tuple[float, int], ...]:
        """``(value, multiplicity)`` in increasing value; equal monomial values are merged."""
        if self._distinct is None:
            out: list[list] = []
            for exps, c in self.terms:
                v = _monomial(self.bases, exps)
                if out and out[-1][0] == v:
                    out[-1][1] += c
                else:
                    out.append([v, c])
            self._distinct = tuple((v, c) for v, c in out)
        return self._distinct

    def values(self) -> np.ndarray:
        """All entries with repetition, increasing."""
        if self.cardinality > EXPAND_LIMIT:
            raise SpectrumError(f'refusing to expand a spectrum with {self.cardinality} entries')
        d = self.distinct()
        return np.repeat(np.array([v for v, _ in d], dtype=float), [c for _, c in d])

    def min(self) -> float:
        if not self.terms:
            raise SpectrumError('empty spectrum')
        return float(self.distinct()[0][0])

    def max(self) -> float:
        if not self.terms:
            raise SpectrumError('empty spectrum')
        return float(self.distinct()[-1][0])

    def total(self) -> float:
        """Sum of the entries (a trace)."""
        return math.fsum(c * _monomial(self.bases, e) for e, c in self.terms)

    def inverse_total(self) -> float:
        """Sum of the reciprocals of the entries."""
        return math.fsum(c / _monomial(self.bases, e) for e, c in self.terms)

    def exact_total(self) -> Fraction:
        """Sum of the entries as an exact rational function of the (binary) bases."""
        fb = [Fraction(b) for b in self.bases]
        return sum((c * math.prod((x ** e for x, e in zip(fb, exps)), start=Fraction(1))
                    for exps, c in self.terms), Fraction(0))

    def is_single_base(self) -> bool:
        return len(self.bases) <= 1

    def laurent(self) -> LaurentPoly:
        """The exponent multiset as a Laurent polynomial (single-base spectra only)."""
        if len(self.bases) > 1:
            raise SpectrumError('spectrum has more than one base')
        if not self.bases:
            return LaurentPoly({0: self.cardinality})
        return LaurentPoly({e[0]: c for e, c in self.terms})

    def is_trivial(self, rtol: float = REL_TOL) -> bool:
        """True when every entry equals 1 within `rtol`."""
        return all(close(v, 1.0, rtol) for v, _ in self.distinct())

    def is_inversion_symmetric(self, rtol: float = REL_TOL) -> bool:
        return self.approx_equal(self.inverse(), rtol)

    # -- algebra --------------------------------------------------------------------------------

    def _aligned(self, other: EigenSpectrum, rtol: float = REL_TOL):
        bases = list(self.bases)
        where = _merge_bases(bases, other.bases, rtol)
        k = len(bases)

        def lift(exps, positions):
            out = [0] * k
            for e, i in zip(exps, positions):
                out[i] += e
            return tuple(out)

        mine = {lift(e, range(len(self.bases))): c for e, c in self.terms}
        theirs = {}
        for e, c in other.terms:
            key = lift(e, where)
            theirs[key] = theirs.get(key, 0) + c
        return bases, mine, theirs

    def tensor(self, other: EigenSpectrum) -> EigenSpectrum:
        """Multiset of pairwise products; exponent vectors add."""
        bases, mine, theirs = self._aligned(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in mine.items():
            for e2, c2 in theirs.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return EigenSpectrum(bases, out)

    def __add__(self, other):
        """Multiset union."""
        if not isinstance(other, EigenSpectrum):
            return NotImplemented
        bases, mine, theirs = self._aligned(other)
        for e, c in theirs.items():
            mine[e] = mine.get(e, 0) + c
        return EigenSpectrum(bases, mine)

    def subtract(self, other: EigenSpectrum) -> EigenSpectrum:
        """Multiset difference; raises :class:`SpectrumError` if `other` is not contained."""
        bases, mine, theirs = self._aligned(other)
        for e, c in theirs.items():
            left = mine.get(e, 0) - c
            if left < 0:
                raise SpectrumError(f'multiset subtraction failed: monomial {e} over bases {bases} '
                                    f'would get multiplicity {left}')
            mine[e] = left
        return EigenSpectrum(bases, mine)

    def inverse(self) -> EigenSpectrum:
        """``{1/x}``."""
        return EigenSpectrum(self.bases, {tuple(-e for e in exps): c for exps, c in self.terms})

    def power(self, n: int) -> EigenSpectrum:
        out = EigenSpectrum.ones(1)
        for _ in range(n):
            out = out.tensor(self)
        return out

    # -- comparison -----------------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, EigenSpectrum):
            return NotImplemented
        return self.bases == other.bases and self.terms == other.terms

    def __hash__(self):
        return hash((self.bases, self.terms))

    def approx_equal(self, other: EigenSpectrum, rtol: float = REL_TOL) -> bool:
        """Multiset equality of the numeric values within relative tolerance `rtol`."""
        if self.cardinality != other.cardinality:
            return False
        a, b = _clustered(self.distinct(), rtol), _clustered(other.distinct(), rtol)
        return len(a) == len(b) and all(ca == cb and close(va, vb, rtol)
                                        for (va, ca), (vb, cb) in zip(a, b))

    def __repr__(self):
        inner = ', '.join(f'{v:.12g}: {c}' for v, c in self.distinct())
        return f'EigenSpectrum({{{inner}}})'

    # -- serialization --------------------------------------------------------------------------

    def to_dict(self) -> dict:
        return {'bases': list(self.bases), 'terms': [[list(e), c] for e, c in self.terms]}

    @classmethod
    def from_dict(cls, data: Mapping) -> EigenSpectrum:
        return cls(data['bases'], {tuple(e): c for e, c in data['terms']})


def _clustered(distinct, rtol):
    out: list[list] = []
    for v, c in distinct:
        if out and close(out[-1][0], v, rtol):
            out[-1][1] += c
        else:
            out.append([v, c])
    return out


def tensor_jj_spectrum(s1: EigenSpectrum, s2: EigenSpectrum) -> EigenSpectrum:
    """Spectrum of ``j*j`` for a tensor product of standard solutions: all pairwise products."""
    return s1.tensor(s2)
