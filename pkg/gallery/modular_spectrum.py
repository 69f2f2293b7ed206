"""Modular point spectra of ergodic actions.

For each built-in action the script collects the eigenvalues of the modular
operator on a few spectral irreps and classifies the subgroup of R_+^* they
generate. The translation action of A_o(F) with F*F = diag(0.5, 1, 2) lands on
the lattice generated by 0.5; the Cuntz gauge action of A_u(n) on 1/n.
"""

from __future__ import annotations

from qgrowth import AoF, AuF, SqU2, builtin_actions, delta_point_spectrum, type3_lower_bound
from qgrowth.modular import ModularError, kac_bound


def main():
    models = {'S_qU(2) q=0.5': SqU2(0.5), 'S_qU(2) q=-1': SqU2(-1.0),
              'A_o(0.5,1,2)': AoF([0.5, 1.0, 2.0]), 'A_u(3)': AuF([1.0] * 3)}
    for title, model in models.items():
        for name, act in builtin_actions(model).items():
            rep = delta_point_spectrum(act, depth=3)
            cls = rep.classification
            lam = '' if cls.lam is None else f' lambda={cls.lam:.6g}'
            try:
                bound = kac_bound(act) if model.is_kac else type3_lower_bound(act).bound
                note = f'bound {bound:.6g}'
            except ModularError as err:
                note = str(err)
            print(f'{title:14} {name:12} {cls.kind}{lam}  ({len(rep.total)} eigenvalues); {note}')


if __name__ == '__main__':
    main()
