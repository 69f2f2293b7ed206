"""Command-line front end.

Examples
--------
::

    qgrowth fuse --family sq_u2 --q 0.5 u1 u1
    qgrowth power --family au_f --eigs 1,1,1 g 4
    qgrowth growth --family sq_u2 --q 0.5 --irrep u2 -N 24 --format csv
    qgrowth verify dimension-bounds --family sq_u2 --q 0.5 --irrep u3 -N 16
    qgrowth verify action-bounds --action bdv:ao_f --eigs 0.5,1,2 --irrep u2
    qgrowth spectrum --action translation --family ao_f --eigs 0.5,1,2 --irreps u1
    qgrowth bound type3 --action wang --family au_f --eigs 1,1
    qgrowth paper-examples

Exit status is 0 when every certified check passes, 1 on a verification failure and 2 on
usage or load errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .actions import (DEFAULT_SEED, ActionError, bdv_action, kms_check, translation_action, verify_action_bounds,
                      wang_action)
from .corpus import run_corpus
from .formats import LoadError, SuiteReport, decomposition_report, load_action, load_model, plot_csv, render
from .fusion import FusionError, ResourceLimitError
from .growth import KINDS, growth_sequence, verify_growth_bounds
from .models import AuF, ModelError, model_from_dict
from .modular import (CONNES_TOL, ModularError, delta_point_spectrum, is_tracial, kac_bound,
                      kac_exponential_necessity, plot_rows, type3_lower_bound)
from .spectra import SpectrumError

__all__ = ['main', 'build_parser']

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FAMILIES = ('sq_u2', 'ao_f', 'au_f', 'table')
VERIFY_SUITES = ('dimension-bounds', 'action-bounds', 'kms', 'trace', 'kac-growth')


class UsageError(Exception):
    pass


def _positive_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f'must be >= 1, got {n}')
    return n


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f'must be > 0, got {x}')
    return x


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group('model and action')
    g.add_argument('--family', choices=FAMILIES, help='built-in model family (default sq_u2)')
    g.add_argument('--q', type=float, help='deformation parameter for sq_u2 (default 1)')
    g.add_argument('--eigs', help='comma-separated eigenvalues of F*F for ao_f / au_f')
    g.add_argument('--model', metavar='FILE', help='model definition JSON')
    g.add_argument('--action', metavar='SPEC',
                   help='translation | bdv | bdv:ao_f | wang | action JSON file (default translation)')
    n = p.add_argument_group('numeric policy')
    n.add_argument('-N', type=_positive_int, help='number of tensor powers (default 24, 12 for tables)')
    n.add_argument('--seed', type=lambda s: int(s, 0), default=DEFAULT_SEED, help='random seed (default 0x5EED)')
    n.add_argument('--tol', type=_positive_float, help='tolerance override for the command')
    n.add_argument('--depth', type=_positive_int, default=4, help='label depth for spectral scans (default 4)')
    o = p.add_argument_group('output')
    o.add_argument('--format', choices=('json', 'csv', 'table'), default='table')
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog='qgrowth', description='Dimension growth and modular data of '
                                     'compact quantum groups and their ergodic actions.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('fuse', parents=[common], help='decompose a (x) b')
    p.add_argument('left')
    p.add_argument('right')

    p = sub.add_parser('power', parents=[common], help='decompose u^(x)n')
    p.add_argument('irrep')
    p.add_argument('n', type=int)

    p = sub.add_parser('growth', parents=[common], help='growth sequence and rate bracket')
    p.add_argument('--irrep', required=True)
    p.add_argument('--kind', choices=KINDS, default='quantum_dim')

    p = sub.add_parser('verify', parents=[common], help='run a verification suite')
    p.add_argument('suite', choices=VERIFY_SUITES)
    p.add_argument('--irrep', help='irrep to check (default: all spectral irreps up to --depth)')
    p.add_argument('--trials', type=_positive_int, default=1000, help='KMS trials (default 1000)')
    p.add_argument('--basis-change', action='store_true', help='KMS: conjugate by random unitaries first')

    p = sub.add_parser('bound', parents=[common], help='lower bound for lambda in type III_lambda')
    p.add_argument('which', choices=('type3', 'kac'))

    p = sub.add_parser('spectrum', parents=[common], help='modular point spectrum and its subgroup')
    p.add_argument('--irreps', help='comma-separated spectral irreps (default: up to --depth)')
    p.add_argument('--plot-data', metavar='FILE', help='write log-eigenvalue/multiplicity CSV')

    sub.add_parser('paper-examples', parents=[common], help='run the worked-example regression matrix')
    return parser


def _parse_eigs(text):
    try:
        return [float(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise UsageError(f'--eigs must be comma-separated numbers, got {text!r}') from None


def make_model(args, family_override=None):
    if args.model:
        return load_model(args.model)
    family = family_override or args.family or 'sq_u2'
    if family == 'sq_u2':
        return model_from_dict({'family': 'sq_u2', 'q': 1.0 if args.q is None else args.q})
    if family in ('ao_f', 'au_f'):
        if not args.eigs:
            raise UsageError(f'--family {family} needs --eigs')
        return model_from_dict({'family': family, 'fstarf_eigenvalues': _parse_eigs(args.eigs)})
    raise UsageError('--family table needs --model FILE')


def make_action(args, model=None):
    spec = args.action or 'translation'
    name, _, family = spec.partition(':')
    if name in ('translation', 'bdv', 'wang'):
        model = make_model(args, family or None) if family or model is None else model
        if name == 'translation':
            return translation_action(model)
        if name == 'bdv':
            return bdv_action(model)
        if not (isinstance(model, AuF) and model.is_kac):
            raise UsageError('the wang action needs --family au_f with all eigenvalues 1')
        return wang_action(model.rank)
    if not Path(spec).is_file():
        raise UsageError(f'--action {spec!r} is neither a built-in action nor a file')
    base = None
    if args.model or args.family:
        base = make_model(args)
    return load_action(spec, base, args.N)


def _emit(report, args) -> None:
    sys.stdout.write(render(report, args.format))


def _labels(model, text):
    if text is None:
        return None
    return [model.parse_label(t.strip()) for t in text.split(',') if t.strip()]


def cmd_fuse(args) -> int:
    model = make_model(args)
    a, b = model.parse_label(args.left), model.parse_label(args.right)
    vec = model.fusion.fuse(a, b)
    _emit(decomposition_report(model, f'{model.format_label(a)} (x) {model.format_label(b)}', vec), args)
    return EXIT_PASS


def cmd_power(args) -> int:
    model = make_model(args)
    u = model.parse_label(args.irrep)
    if args.n < 0:
        raise UsageError('the tensor power must be >= 0')
    vec = model.fusion.decompose_power(u, args.n)
    _emit(decomposition_report(model, f'{model.format_label(u)}^(x){args.n}', vec), args)
    return EXIT_PASS


def cmd_growth(args) -> int:
    action = make_action(args) if args.kind == 'multiplicity' else None
    model = action.base if action is not None else make_model(args)
    _emit(growth_sequence(model, model.parse_label(args.irrep), args.N, args.kind, action), args)
    return EXIT_PASS


def cmd_verify(args) -> int:
    kw = {} if args.tol is None else {'tol': args.tol}
    reports = []
    if args.suite == 'dimension-bounds':
        model = make_model(args)
        labels = [model.parse_label(args.irrep)] if args.irrep else model.fusion.labels(args.depth)
        reports = [verify_growth_bounds(model, u, args.N, **kw) for u in labels]
        ok = all(r.holds for r in reports)
    else:
        action = make_action(args)
        labels = [action.base.parse_label(args.irrep)] if args.irrep else action.labels(args.depth)
        if args.suite == 'action-bounds':
            reports = [verify_action_bounds(action, u, args.N, **kw) for u in labels]
            ok = all(r.bound_holds for r in reports)
        elif args.suite == 'kms':
            reports = [kms_check(action, u, args.trials, seed=args.seed, basis_change=args.basis_change, **kw)
                       for u in labels]
            ok = all(r.passed for r in reports)
        elif args.suite == 'trace':
            reports = [is_tracial(action, labels)]
            ok = True  # a non-tracial state is an answer, not a failure
        else:
            reports = [kac_exponential_necessity(action, labels, N=args.N)]
            ok = reports[0].status != 'fail'
    _emit(SuiteReport(args.suite, ok, tuple(reports)), args)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_bound(args) -> int:
    action = make_action(args)
    if args.which == 'kac' or action.base.is_kac:
        value = kac_bound(action, depth=args.depth)
        sys.stdout.write(f'{value!r}\n' if args.format != 'json' else f'{{"kac_bound": {value!r}}}\n')
        return EXIT_PASS
    kw = {} if args.tol is None else {'tol': args.tol}
    _emit(type3_lower_bound(action, depth=args.depth, N=args.N, **kw), args)
    return EXIT_PASS


def cmd_spectrum(args) -> int:
    action = make_action(args)
    tol = CONNES_TOL if args.tol is None else args.tol
    report = delta_point_spectrum(action, _labels(action.base, args.irreps), args.depth, tol)
    if args.plot_data:
        Path(args.plot_data).write_text(plot_csv(plot_rows(report)), encoding='utf-8')
    _emit(report, args)
    return EXIT_PASS


def cmd_paper_examples(args) -> int:
    report = run_corpus()
    if args.format == 'table':
        width = max(len(name) for name, _, _ in report.rows)
        for name, status, detail in report.rows:
            sys.stdout.write(f'{name.ljust(width)}  {status}  {detail}\n')
    else:
        _emit(report, args)
    return EXIT_PASS if report.passed else EXIT_FAIL


COMMANDS = {'fuse': cmd_fuse, 'power': cmd_power, 'growth': cmd_growth, 'verify': cmd_verify,
            'bound': cmd_bound, 'spectrum': cmd_spectrum, 'paper-examples': cmd_paper_examples}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, LoadError, ModelError, ActionError, FusionError, SpectrumError, ModularError,
            ResourceLimitError) as err:
        print(f'qgrowth {args.command}: error: {err}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
