"""Dimension growth along tensor powers.

Builds the quantum dimension and integral dimension sequences of a fundamental
representation for a few models and prints the rate bracket next to the
closed-form rate. For S_qU(2) the largest quantum dimension in u_1^(x)n grows like
q^-n while the largest integral dimension only grows linearly.
"""

from __future__ import annotations

from qgrowth import AoF, AuF, SqU2, growth_sequence, verify_growth_bounds


def tag(model):
    d = model.definition()
    params = d.get('q', d.get('fstarf_eigenvalues'))
    return f'{model.family} {params}'


def show(model, u, kind, N=16):
    rep = growth_sequence(model, u, N, kind)
    limit = 'n/a' if rep.limit is None else f'{rep.limit:.6g}'
    print(f'{tag(model):22} {rep.label:>4} {kind:13} bracket [{rep.lower:.6g}, {rep.upper:.6g}]'
          f'  limit {limit:>8}  {rep.verdict}')


def main():
    for model, u in ((SqU2(1.0), 1), (SqU2(0.5), 1), (SqU2(0.5), 3), (AoF([0.5, 1.0, 2.0]), 1), (AuF([1.0] * 3), 'g')):
        for kind in ('quantum_dim', 'integral_dim'):
            show(model, u, kind)

    # lambda and Lambda squeeze D between 1/lambda and the full rate
    rep = verify_growth_bounds(SqU2(0.5), 2, 24)
    print(f'\nS_qU(2) q=0.5, u2: lambda={rep.lambda_min}, Lambda={rep.lambda_max}, '
          f'D in [{rep.lambda_max}, {rep.upper:.4f}], equality={rep.equality_detected}')


if __name__ == '__main__':
    main()
