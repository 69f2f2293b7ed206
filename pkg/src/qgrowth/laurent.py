"""Integer Laurent polynomials in one variable ``q`` and the q-integers."""

from __future__ import annotations

import math
import threading
from collections.abc import Iterable, Mapping
from fractions import Fraction

__all__ = ['LaurentPoly', 'q_integer']


class LaurentPoly:
    """A finite integer combination ``sum_e c_e q**e`` with ``e`` ranging over the integers.

    Instances are immutable and hashable. A polynomial with nonnegative coefficients is the
    same thing as a finite multiset of exponents, which is how exact spectra are stored.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (coeffs or {}).items():
            if int(c) != c or int(e) != e:
                raise TypeError(f'Laurent coefficients and exponents must be integers, got {e}: {c}')
            if c:
                clean[int(e)] = int(c)
        self._coeffs = tuple(sorted(clean.items()))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> LaurentPoly:
        coeffs: dict[int, int] = {}
        for e in exponents:
            coeffs[e] = coeffs.get(e, 0) + 1
        return cls(coeffs)

    @property
    def coeffs(self) -> tuple[tuple[int, int], ...]:
        """``(exponent, coefficient)`` pairs in increasing exponent order."""
        return self._coeffs

    def as_dict(self) -> dict[int, int]:
        return dict(self._coeffs)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self._coeffs)

    def exponents(self) -> tuple[int, ...]:
        """Expand a nonnegative polynomial into its exponent multiset (increasing)."""
        if not self.is_nonnegative():
            raise ValueError('only polynomials with nonnegative coefficients are multisets')
        return tuple(e for e, c in self._coeffs for _ in range(c))

    def evaluate(self, x):
        """Evaluate at ``x``; a :class:`~fractions.Fraction` or int argument gives an exact result."""
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            return sum((c * x ** e for e, c in self._coeffs), Fraction(0))
        return math.fsum(c * x ** e for e, c in self._coeffs)

    def bar(self) -> LaurentPoly:
        """The substitution ``q -> 1/q``."""
        return LaurentPoly({-e: c for e, c in self._coeffs})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs:
            for e2, c2 in other._coeffs:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        if not self._coeffs:
            return 'LaurentPoly(0)'
        parts = [f'{c}*q^{e}' for e, c in self._coeffs]
        return f"LaurentPoly({' + '.join(parts)})"


_QINT: list[LaurentPoly] = [LaurentPoly(), LaurentPoly.monomial(0)]
_QINT_LOCK = threading.Lock()


def q_integer(n: int) -> LaurentPoly:
    """The q-integer ``[n]_q = (q**n - q**-n) / (q - q**-1)`` as a Laurent polynomial.

    Built from the three-term recursion ``[n+1] = (q + 1/q)[n] - [n-1]`` with ``[0] = 0`` and
    ``[1] = 1``; negative ``n`` uses ``[-n] = -[n]``.
    """
    if n < 0:
        return -q_integer(-n)
    if n < len(_QINT):
        return _QINT[n]
    qsum = LaurentPoly({1: 1, -1: 1})
    with _QINT_LOCK:
        while len(_QINT) <= n:
            _QINT.append(qsum * _QINT[-1] - _QINT[-2])
    return _QINT[n]
