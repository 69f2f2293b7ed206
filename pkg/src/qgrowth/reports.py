"""JSON encoding of report dataclasses.

Every report type is a frozen dataclass registered with :func:`register`. :func:`encode`
turns a report into plain JSON data tagged with ``"type"``; :func:`decode` rebuilds an equal
object. Fractions become ``{"fraction": "p/q"}``, tuples become lists (and come back as tuples),
spectra and multiplicity vectors use their own ``to_dict``.
"""

from __future__ import annotations

import dataclasses
import json
import math
from fractions import Fraction

from .fusion import MultiplicityVector
from .spectra import EigenSpectrum

__all__ = ['register', 'encode', 'decode', 'dumps', 'loads']

_REGISTRY: dict[str, type] = {}


def register(cls):
    """Class decorator adding a dataclass to the decodable report types."""
    if not dataclasses.is_dataclass(cls):
        raise TypeError(f'{cls.__name__} is not a dataclass')
    _REGISTRY[cls.__name__] = cls
    return cls


def encode(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return {'float': 'inf' if obj > 0 else '-inf'}
        if math.isnan(obj):
            return {'float': 'nan'}
        return obj
    if isinstance(obj, Fraction):
        return {'fraction': f'{obj.numerator}/{obj.denominator}'}
    if isinstance(obj, EigenSpectrum):
        return {'spectrum': obj.to_dict()}
    if isinstance(obj, MultiplicityVector):
        return {'multiplicities': obj.to_dict()}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        name = type(obj).__name__
        if _REGISTRY.get(name) is not type(obj):
            raise TypeError(f'{name} is not a registered report type')
        out = {'type': name}
        for f in dataclasses.fields(obj):
            out[f.name] = encode(getattr(obj, f.name))
        return out
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, dict):
        if not all(isinstance(k, str) for k in obj):
            raise TypeError('report dicts must have string keys')
        return {'map': {k: encode(v) for k, v in obj.items()}}
    raise TypeError(f'cannot encode {type(obj).__name__}')


def decode(data):
    if data is None or isinstance(data, (bool, int, float, str)):
        return data
    if isinstance(data, list):
        return tuple(decode(x) for x in data)
    if not isinstance(data, dict):
        raise TypeError(f'cannot decode {type(data).__name__}')
    if 'type' in data:
        _ensure_loaded()
        try:
            cls = _REGISTRY[data['type']]
        except KeyError:
            raise ValueError(f'unknown report type {data["type"]!r}') from None
        return cls(**{k: decode(v) for k, v in data.items() if k != 'type'})
    (key, value), = data.items()
    if key == 'fraction':
        return Fraction(value)
    if key == 'float':
        return float(value)
    if key == 'spectrum':
        return EigenSpectrum.from_dict(value)
    if key == 'multiplicities':
        return MultiplicityVector.from_dict(value)
    if key == 'map':
        return {k: decode(v) for k, v in value.items()}
    raise ValueError(f'unknown tagged value {key!r}')


def dumps(report, indent: int | None = 2) -> str:
    """Deterministic JSON text for a report."""
    return json.dumps(encode(report), indent=indent, sort_keys=False)


def loads(text: str):
    return decode(json.loads(text))


def _ensure_loaded():
    # the report classes register themselves on import
    from . import actions, corpus, formats, growth, modular  # noqa: F401
