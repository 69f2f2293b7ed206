"""Fusion systems: irreducible labels, conjugation and tensor-product decomposition.

Three kinds of systems are provided:

=================  =================================================================================
Kind               Labels
=================  =================================================================================
``su2_type``       nonnegative integers ``r`` (``u_r``, unit ``0``); Clebsch-Gordan fusion
-----------------  ---------------------------------------------------------------------------------
``free_power``     words over ``g`` and ``G`` (``G`` is the conjugate of ``g``, unit ``''``); only
                   powers of a single letter fuse, every such power is irreducible
-----------------  ---------------------------------------------------------------------------------
``table_driven``   string keys with an explicit, validated fusion table
=================  =================================================================================

All objects are immutable; every operation is a pure function of its arguments.
"""

from __future__ import annotations

import os
import re
from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction

__all__ = ['Label', 'FusionError', 'ResourceLimitError', 'MultiplicityVector', 'FusionSystem',
           'SU2Fusion', 'FreePowerFusion', 'TableFusion', 'fuse', 'decompose_power', 'dual',
           'max_support', 'DEFAULT_MAX_SUPPORT']

Label = int | str
"""Irreducible label: ``int`` for ``su2_type``, ``str`` for ``free_power`` and ``table_driven``."""

DEFAULT_MAX_SUPPORT = 10**6
_REL_TOL = 1e-9


class FusionError(ValueError):
    """Raised for unknown labels, missing table entries or fusions a system does not support."""


class ResourceLimitError(RuntimeError):
    """Raised when a decomposition would exceed the configured support-size cap."""


def max_support() -> int:
    """The decomposition cap: ``$QGROWTH_MAX_SUPPORT`` if set, else :data:`DEFAULT_MAX_SUPPORT`."""
    raw = os.environ.get('QGROWTH_MAX_SUPPORT')
    if raw is None:
        return DEFAULT_MAX_SUPPORT
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f'QGROWTH_MAX_SUPPORT must be a positive integer, got {raw!r}') from None
    if cap < 1:
        raise ValueError(f'QGROWTH_MAX_SUPPORT must be a positive integer, got {raw!r}')
    return cap


class MultiplicityVector(Mapping):
    """Finitely supported map from irreducible labels to positive multiplicities.

    Items are kept in the canonical label order of the system that produced them, so
    iteration and ``repr`` are reproducible. Construct through :meth:`FusionSystem.vector`.
    """

    __slots__ = ('_items', '_index')

    def __init__(self, items: Iterable[tuple[Label, int]]):
        self._items = tuple((a, int(m)) for a, m in items)
        self._index = dict(self._items)
        if len(self._index) != len(self._items):
            raise ValueError('duplicate labels in multiplicity vector')
        if any(m < 1 for _, m in self._items):
            raise ValueError('multiplicities must be positive; zero entries are omitted')

    def __getitem__(self, label):
        return self._index[label]

    def __iter__(self):
        return (a for a, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __eq__(self, other):
        if isinstance(other, MultiplicityVector):
            return self._index == other._index
        if isinstance(other, Mapping):
            return self._index == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._items))

    def __repr__(self):
        inner = ', '.join(f'{a!r}: {m}' for a, m in self._items)
        return f'MultiplicityVector({{{inner}}})'

    @property
    def items_tuple(self) -> tuple[tuple[Label, int], ...]:
        return self._items

    def total(self) -> int:
        """Number of irreducible summands counted with multiplicity."""
        return sum(m for _, m in self._items)

    def weighted_sum(self, weight):
        """``sum_v N_v * weight(v)``; exact when ``weight`` returns ints or Fractions."""
        return sum(m * weight(a) for a, m in self._items)

    def to_dict(self) -> dict:
        return {'items': [[a, m] for a, m in self._items]}

    @classmethod
    def from_dict(cls, data: Mapping) -> MultiplicityVector:
        return cls((a, m) for a, m in data['items'])


class FusionSystem(ABC):
    """Monoidal structure of a representation category, reduced to labels and fusion rules."""

    kind: str = ''
    unit: Label

    @abstractmethod
    def is_valid(self, a) -> bool:
        ...

    @abstractmethod
    def sort_key(self, a):
        """Canonical ordering key for labels of this system."""

    @abstractmethod
    def _fuse(self, a: Label, b: Label) -> Mapping[Label, int]:
        ...

    @abstractmethod
    def _dual(self, a: Label) -> Label:
        ...

    @abstractmethod
    def labels(self, depth: int) -> tuple[Label, ...]:
        """A canonical finite family of labels used for scans (all labels of a finite table)."""

    def parse_label(self, text: str) -> Label:
        return self.check(text)

    def format_label(self, a: Label) -> str:
        return str(a)

    def check(self, a) -> Label:
        if not self.is_valid(a):
            raise FusionError(f'unknown label {a!r} for {self.kind} fusion system')
        return a

    def vector(self, counts: Mapping[Label, int]) -> MultiplicityVector:
        items = sorted(((a, m) for a, m in counts.items() if m), key=lambda am: self.sort_key(am[0]))
        return MultiplicityVector(items)

    def fuse(self, a: Label, b: Label) -> MultiplicityVector:
        return self.vector(self._fuse(self.check(a), self.check(b)))

    def dual(self, a: Label) -> Label:
        return self._dual(self.check(a))

    def dual_vector(self, vec: Mapping[Label, int]) -> MultiplicityVector:
        return self.vector({self._dual(a): m for a, m in vec.items()})

    def tensor(self, left: Mapping[Label, int], right: Mapping[Label, int],
               cap: int | None = None) -> MultiplicityVector:
        """Full decomposition of ``(sum_a N_a a) (x) (sum_b M_b b)``."""
        cap = max_support() if cap is None else cap
        out: dict[Label, int] = {}
        for a, na in left.items():
            for b, nb in right.items():
                for c, nc in self._fuse(a, b).items():
                    out[c] = out.get(c, 0) + na * nb * nc
            if len(out) > cap:
                raise ResourceLimitError(f'decomposition support exceeds cap {cap} '
                                         '(raise QGROWTH_MAX_SUPPORT to allow more)')
        return self.vector(out)

    def power_tower(self, u: Label, N: int, cap: int | None = None) -> Iterator[MultiplicityVector]:
        """Yield the decompositions of ``u^{(x) n}`` for ``n = 0, 1, ..., N``."""
        u = self.check(u)
        if N < 0:
            raise ValueError(f'tensor power must be nonnegative, got {N}')
        vec = self.vector({self.unit: 1})
        yield vec
        step = {u: 1}
        for _ in range(N):
            vec = self.tensor(vec, step, cap)
            yield vec

    def decompose_power(self, u: Label, n: int, cap: int | None = None) -> MultiplicityVector:
        for vec in self.power_tower(u, n, cap):
            pass
        return vec


class SU2Fusion(FusionSystem):
    """Clebsch-Gordan fusion ``u_a (x) u_b = u_{|a-b|} + u_{|a-b|+2} + ... + u_{a+b}``.

    Shared by the classical group SU(2), its deformations and the free orthogonal quantum groups.
    """

    kind = 'su2_type'
    unit = 0

    def is_valid(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and a >= 0

    def sort_key(self, a):
        return a

    def _fuse(self, a, b):
        return {c: 1 for c in range(abs(a - b), a + b + 1, 2)}

    def _dual(self, a):
        return a

    def labels(self, depth):
        return tuple(range(depth + 1))

    def parse_label(self, text) -> int:
        if isinstance(text, int):
            return self.check(text)
        m = re.fullmatch(r'u?_?(\d+)', str(text).strip())
        if not m:
            raise FusionError(f'cannot parse {text!r} as an su2_type label (expected e.g. "u3")')
        return int(m.group(1))

    def format_label(self, a):
        return f'u{a}'

    def __eq__(self, other):
        return isinstance(other, SU2Fusion)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return 'SU2Fusion()'


class FreePowerFusion(FusionSystem):
    """Tensor powers of one generator ``g`` and of its conjugate ``G``, all irreducible.

    Words mixing ``g`` and ``G`` are valid labels (they can be conjugated) but their fusion is
    not implemented and raises :class:`FusionError`.
    """

    kind = 'free_power'
    unit = ''

    def is_valid(self, a) -> bool:
        return isinstance(a, str) and set(a) <= {'g', 'G'}

    def sort_key(self, a):
        return (len(a), a)

    @staticmethod
    def is_power(a: str) -> bool:
        return len(set(a)) <= 1

    def _fuse(self, a, b):
        if not a or not b:
            return {a + b: 1}
        if not (self.is_power(a) and self.is_power(b) and a[0] == b[0]):
            raise FusionError(f'fusion of {a!r} and {b!r} mixes g with its conjugate; only powers '
                              'of a single generator are supported')
        return {a + b: 1}

    def _dual(self, a):
        return a[::-1].translate(str.maketrans('gG', 'Gg'))

    def labels(self, depth):
        return ('',) + tuple(x * k for k in range(1, depth + 1) for x in ('G', 'g'))

    def parse_label(self, text) -> str:
        s = str(text).strip().replace('ḡ', 'G').replace('gbar', 'G')
        if s in ('1', 'e', 'unit'):
            return ''
        m = re.fullmatch(r'([gG])\^(\d+)', s)
        if m:
            return m.group(1) * int(m.group(2))
        return self.check(s)

    def format_label(self, a):
        if not a:
            return '1'
        if len(a) > 1 and self.is_power(a):
            return f'{a[0]}^{len(a)}'
        return a

    def __eq__(self, other):
        return isinstance(other, FreePowerFusion)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return 'FreePowerFusion()'


class TableFusion(FusionSystem):
    """Fusion rules given as an explicit table ``N_{ab}^c`` over string keys.

    Parameters
    ----------
    keys : sequence of str
        Irreducible labels; ``keys[0]`` is the unit unless `unit` is given.
    duals : mapping
        Conjugate label of every key.
    fusion : mapping
        ``(a, b) -> {c: N_ab^c}``. Pairs involving the unit may be omitted.
    unit : str, optional
    dims : mapping, optional
        Integral dimensions; when given the table must be a ring homomorphism for them.
    qdims : mapping, optional
        Quantum dimensions (ints, Fractions or floats); checked the same way, exactly for
        exact values and to relative tolerance ``1e-9`` otherwise.

    Raises
    ------
    FusionError
        Naming the offending entry, when the unit law, the dual involution or a dimension
        homomorphism law fails.
    """

    kind = 'table_driven'

    def __init__(self, keys, duals, fusion, unit=None, dims=None, qdims=None):
        keys = tuple(keys)
        if not keys:
            raise FusionError('fusion table has no irreps')
        if len(set(keys)) != len(keys):
            raise FusionError('fusion table repeats an irrep key')
        for k in keys:
            if not isinstance(k, str):
                raise FusionError(f'irrep keys must be strings, got {k!r}')
        self._keys = keys
        self._keyset = frozenset(keys)
        self._order = {k: i for i, k in enumerate(keys)}
        self.unit = keys[0] if unit is None else unit
        if self.unit not in self._keyset:
            raise FusionError(f'unit {self.unit!r} is not an irrep key')
        self._duals = dict(duals)
        for k in keys:
            if k not in self._duals:
                raise FusionError(f'irrep {k!r}: missing dual')
            d = self._duals[k]
            if d not in self._keyset:
                raise FusionError(f'irrep {k!r}: dual {d!r} is not an irrep key')
        for k in keys:
            if self._duals[self._duals[k]] != k:
                raise FusionError(f'irrep {k!r}: dual is not involutive '
                                  f'({k!r} -> {self._duals[k]!r} -> {self._duals[self._duals[k]]!r})')
        if self._duals[self.unit] != self.unit:
            raise FusionError(f'unit {self.unit!r} must be self-dual')
        table: dict[tuple[str, str], dict[str, int]] = {}
        for (a, b), out in fusion.items():
            where = f'fusion entry (a={a!r}, b={b!r})'
            if a not in self._keyset or b not in self._keyset:
                raise FusionError(f'{where}: unknown irrep')
            if (a, b) in table:
                raise FusionError(f'{where}: duplicate entry')
            clean = {}
            for c, n in out.items():
                if c not in self._keyset:
                    raise FusionError(f'{where}: unknown output irrep {c!r}')
                if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                    raise FusionError(f'{where}: multiplicity of {c!r} must be a nonnegative integer')
                if n:
                    clean[c] = clean.get(c, 0) + n
            if not clean:
                raise FusionError(f'{where}: empty decomposition')
            if self.unit in (a, b):
                other = b if a == self.unit else a
                if clean != {other: 1}:
                    raise FusionError(f'{where}: violates the unit law')
            table[(a, b)] = clean
        for k in keys:
            table.setdefault((self.unit, k), {k: 1})
            table.setdefault((k, self.unit), {k: 1})
        self._table = table
        for name, fn in (('dim', dims), ('qdim', qdims)):
            if fn is not None:
                self._check_homomorphism(name, fn)

    def _check_homomorphism(self, name, values):
        for k in self._keys:
            if k not in values:
                raise FusionError(f'irrep {k!r}: missing {name}')
        for (a, b), out in self._table.items():
            lhs = values[a] * values[b]
            rhs = sum(n * values[c] for c, n in out.items())
            exact = all(isinstance(values[x], (int, Fraction)) for x in (a, b, *out))
            ok = lhs == rhs if exact else abs(lhs - rhs) <= _REL_TOL * max(abs(lhs), abs(rhs))
            if not ok:
                raise FusionError(f'fusion entry (a={a!r}, b={b!r}): {name} is not multiplicative '
                                  f'({name}(a){name}(b) = {lhs} but the decomposition has {rhs})')

    @property
    def keys(self) -> tuple[str, ...]:
        return self._keys

    def is_valid(self, a) -> bool:
        return isinstance(a, str) and a in self._keyset

    def sort_key(self, a):
        return self._order[a]

    def _fuse(self, a, b):
        try:
            return self._table[(a, b)]
        except KeyError:
            raise FusionError(f'fusion table has no entry for ({a!r}, {b!r})') from None

    def _dual(self, a):
        return self._duals[a]

    def labels(self, depth=0):
        return self._keys

    def table_items(self):
        return tuple(sorted(self._table.items()))

    def __eq__(self, other):
        return (isinstance(other, TableFusion) and self.unit == other.unit
                and self._duals == other._duals and self._table == other._table)

    def __hash__(self):
        return hash((self.kind, self._keys))

    def __repr__(self):
        return f'TableFusion(keys={list(self._keys)!r})'


def fuse(sys: FusionSystem, a: Label, b: Label) -> MultiplicityVector:
    """Decompose ``a (x) b`` into irreducibles."""
    return sys.fuse(a, b)


def decompose_power(sys: FusionSystem, u: Label, n: int, cap: int | None = None) -> MultiplicityVector:
    """Decompose ``u^{(x) n}``; ``n = 0`` gives the unit.

    Raises :class:`ResourceLimitError` when the support would exceed `cap`
    (default :func:`max_support`).
    """
    return sys.decompose_power(u, n, cap)


def dual(sys: FusionSystem, a: Label) -> Label:
    """Conjugate label of `a`."""
    return sys.dual(a)
