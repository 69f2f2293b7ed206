"""Dimension growth, conjugate-equation spectra and modular data of compact quantum groups.

The package works purely with representation-theoretic data: fusion rules, quantum and
integral dimensions, and spectra of ``j*j`` for standard solutions of the conjugate equations.
From these it computes growth rates along tensor powers, checks spectral data of ergodic
actions against the bounds those rates impose, and analyses the modular operator of the
invariant state.
"""

from .actions import (SpectralActionModel, action_from_dict, bdv_action, builtin_actions, kms_check,
                      translation_action, validate_action, verify_action_bounds, wang_action)
from .fusion import (FreePowerFusion, FusionError, FusionSystem, MultiplicityVector, ResourceLimitError,
                     SU2Fusion, TableFusion, decompose_power, dual, fuse)
from .growth import growth_rate_bracket, growth_sequence, verify_growth_bounds
from .laurent import LaurentPoly, q_integer
from .models import (AoF, AuF, ModelError, QuantumGroupModel, SqU2, TableModel, intdim, jj_spectrum,
                     lambda_bounds, model_from_dict, qdim, tensor_jj_spectrum)
from .modular import (connes_subgroup, delta_point_spectrum, is_tracial, kac_bound, kac_exponential_necessity,
                      type3_lower_bound)
from .spectra import EigenSpectrum

__version__ = '0.1.0'

__all__ = [
    'LaurentPoly', 'q_integer', 'EigenSpectrum',
    'FusionSystem', 'SU2Fusion', 'FreePowerFusion', 'TableFusion', 'MultiplicityVector', 'FusionError',
    'ResourceLimitError', 'fuse', 'decompose_power', 'dual',
    'QuantumGroupModel', 'SqU2', 'AoF', 'AuF', 'TableModel', 'ModelError', 'model_from_dict', 'qdim', 'intdim',
    'jj_spectrum', 'lambda_bounds', 'tensor_jj_spectrum',
    'growth_sequence', 'growth_rate_bracket', 'verify_growth_bounds',
    'SpectralActionModel', 'translation_action', 'bdv_action', 'wang_action', 'builtin_actions',
    'action_from_dict', 'validate_action', 'kms_check', 'verify_action_bounds',
    'delta_point_spectrum', 'connes_subgroup', 'is_tracial', 'type3_lower_bound', 'kac_bound',
    'kac_exponential_necessity',
]
