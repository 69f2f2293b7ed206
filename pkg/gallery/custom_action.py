"""Loading and validating a hand-written action.

An action is given by the multiplicity of each spectral irrep and the
eigenvalues of J*J on its multiplicity space. Loading validates
mult <= q-mult <= d; an inconsistent spectrum is rejected with a reason.
"""

from __future__ import annotations

from qgrowth import AuF
from qgrowth.actions import ActionError, action_from_dict, verify_action_bounds


def main():
    base = AuF([1.0, 1.0, 1.0])
    good = {'name': 'graded', 'spectrum': [
        {'irrep': 'g', 'mult': 1, 'JJ': [3.0]},
        {'irrep': 'G', 'mult': 1, 'JJ': [1 / 3]},
    ]}
    act = action_from_dict(good, base)
    for u in ('g', 'G'):
        rep = verify_action_bounds(act, u, 8)
        print(f'{u}: JJ range [{rep.jj_min:.4g}, {rep.jj_max:.4g}], bound {rep.bound:.4g}, holds {rep.bound_holds}')

    bad = {'spectrum': [{'irrep': 'g', 'mult': 2, 'JJ': [40.0, 1.0]}]}
    try:
        action_from_dict(bad, base)
    except ActionError as err:
        print(f'rejected: {err}')


if __name__ == '__main__':
    main()
