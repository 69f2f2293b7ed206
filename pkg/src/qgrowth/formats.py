"""Loading model and action files, and rendering reports as JSON, CSV or aligned text."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .actions import ActionError, SpectralActionModel, action_from_dict
from .fusion import MultiplicityVector
from .growth import GrowthReport
from .models import ModelError, QuantumGroupModel, model_from_dict
from .reports import dumps, register
from .spectra import EigenSpectrum

__all__ = ['LoadError', 'DecompositionReport', 'load_json', 'load_model', 'load_action', 'bundled_model',
           'SuiteReport', 'decomposition_report', 'to_json', 'to_csv', 'to_table', 'render', 'growth_csv', 'plot_csv']


class LoadError(ValueError):
    """A model or action file cannot be read or fails validation; the message names the file."""


@register
@dataclasses.dataclass(frozen=True)
class DecompositionReport:
    """Irreducible decomposition of ``left (x) right`` or of ``left^{(x) power}``."""

    expression: str
    terms: tuple
    irreducible: bool

    def text(self) -> str:
        return ' + '.join(lbl if m == 1 else f'{m}*{lbl}' for lbl, m in self.terms)


@register
@dataclasses.dataclass(frozen=True)
class SuiteReport:
    """Reports of one verification suite run over several irreps."""

    suite: str
    passed: bool
    reports: tuple


def decomposition_report(model: QuantumGroupModel, expression: str, vec: MultiplicityVector) -> DecompositionReport:
    terms = tuple((model.format_label(a), m) for a, m in vec.items())
    return DecompositionReport(expression, terms, vec.total() == 1)


def load_json(path) -> dict:
    path = Path(path)
    try:
        with path.open(encoding='utf-8') as fh:
            doc = json.load(fh)
    except OSError as err:
        raise LoadError(f'{path}: {err.strerror}') from None
    except json.JSONDecodeError as err:
        raise LoadError(f'{path}: invalid JSON at line {err.lineno}: {err.msg}') from None
    if not isinstance(doc, dict):
        raise LoadError(f'{path}: top level must be a JSON object')
    return doc


def load_model(path) -> QuantumGroupModel:
    """Read a model definition (see :func:`~qgrowth.models.model_from_dict`)."""
    doc = load_json(path)
    try:
        return model_from_dict(doc)
    except ValueError as err:
        raise LoadError(f'{path}: {err}') from None


def bundled_model(name: str) -> QuantumGroupModel:
    """A model shipped in the package data directory, e.g. ``'s3'``."""
    ref = resources.files('qgrowth') / 'data' / f'{name}.json'
    return model_from_dict(json.loads(ref.read_text(encoding='utf-8')))


def load_action(path, model: QuantumGroupModel | None = None, N: int | None = None) -> SpectralActionModel:
    """Read and validate a custom action.

    The ``"base"`` entry is an inline model definition or a path relative to the action file;
    without it `model` is used.
    """
    path = Path(path)
    doc = load_json(path)
    base = doc.get('base')
    try:
        if isinstance(base, str):
            model = load_model(path.parent / base)
        elif isinstance(base, dict):
            model = model_from_dict(base)
        elif model is None:
            raise LoadError(f'{path}: action needs a "base" model')
        return action_from_dict(doc, model, N)
    except (ActionError, ModelError) as err:
        raise LoadError(f'{path}: {err}') from None


def _plain(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return float(value)
    if isinstance(value, float):
        return value
    return str(value)


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        return f'{value:.12g}'
    if value is None:
        return '-'
    if isinstance(value, EigenSpectrum):
        return '{' + ', '.join(f'{v:.6g}^{c}' if c > 1 else f'{v:.6g}' for v, c in value.distinct()) + '}'
    if dataclasses.is_dataclass(value):
        return ', '.join(f'{f.name}={_fmt(getattr(value, f.name))}' for f in dataclasses.fields(value)
                         if f.name != 'detail')
    if isinstance(value, tuple):
        return '[' + ', '.join(_fmt(x) for x in value) + ']'
    return str(value)


def to_json(report) -> str:
    return dumps(report) + '\n'


def growth_csv(report: GrowthReport) -> str:
    """Columns ``n, value, root, lower, upper``; the bracket is repeated on every row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(['n', 'value', 'root', 'lower', 'upper'])
    for n, value, root in report.terms:
        w.writerow([n, repr(_plain(value)), repr(root), _fmt(report.lower), _fmt(report.upper)])
    return buf.getvalue()


def plot_csv(rows) -> str:
    """Plot data with columns ``log_eigenvalue, multiplicity``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(['log_eigenvalue', 'multiplicity'])
    for x, c in rows:
        w.writerow([repr(x), c])
    return buf.getvalue()


def to_csv(report) -> str:
    if isinstance(report, GrowthReport):
        return growth_csv(report)
    if isinstance(report, SuiteReport):
        return ''.join(to_csv(r) for r in report.reports)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(['field', 'value'])
    for f in dataclasses.fields(report):
        w.writerow([f.name, _fmt(getattr(report, f.name))])
    return buf.getvalue()


def _aligned(rows) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return '\n'.join('  '.join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + '\n'


def to_table(report) -> str:
    """Human-readable aligned text."""
    if isinstance(report, DecompositionReport):
        return f'{report.expression} = {report.text()}\n'
    if isinstance(report, SuiteReport):
        head = f'suite {report.suite}: {"PASS" if report.passed else "FAIL"}\n'
        return head + ''.join('\n' + to_table(r) for r in report.reports)
    lines = [(f.name, _fmt(getattr(report, f.name))) for f in dataclasses.fields(report)
             if f.name not in ('terms', 'rows', 'per_irrep')]
    out = _aligned(lines)
    if isinstance(report, GrowthReport):
        out += '\n' + _aligned([('n', 'value', 'root')]
                               + [(str(n), _fmt(v), _fmt(r)) for n, v, r in report.terms])
    elif hasattr(report, 'rows') and report.rows:
        out += '\n' + _aligned([tuple(_fmt(x) for x in row) for row in report.rows])
    elif hasattr(report, 'per_irrep'):
        out += '\n' + _aligned([(lbl, _fmt(spec)) for lbl, spec in report.per_irrep])
    return out


def render(report, fmt: str = 'table') -> str:
    if fmt == 'json':
        return to_json(report)
    if fmt == 'csv':
        return to_csv(report)
    if fmt == 'table':
        return to_table(report)
    raise ValueError(f'unknown format {fmt!r}')
