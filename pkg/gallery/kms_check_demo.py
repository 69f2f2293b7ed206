"""Numerical check of the KMS identity on random vectors.

Each check draws seeded random vectors in the multiplicity space and the
representation space, evaluates both sides of the twisted inner-product
identity and reports the worst discrepancy. Passing ``basis_change=True``
first conjugates by random unitaries, which must leave the answer unchanged.
"""

from __future__ import annotations

from qgrowth import AoF, SqU2, builtin_actions, kms_check


def tag(model):
    d = model.definition()
    params = d.get('q', d.get('fstarf_eigenvalues'))
    return f'{model.family} {params}'


def main():
    for model in (SqU2(0.25), AoF([0.5, 1.0, 2.0])):
        for name, act in builtin_actions(model).items():
            for u in act.labels(3):
                for basis_change in (False, True):
                    rep = kms_check(act, u, trials=500, basis_change=basis_change)
                    print(f'{tag(model):22} {name:12} {rep.label:>3} basis_change={basis_change!s:5} '
                          f'max violation {rep.max_violation:.2e}  {"ok" if rep.passed else "FAIL"}')


if __name__ == '__main__':
    main()
