"""
Rabi model solutions built on confluent Heun functions
"""

from .params import ParameterSet, ModelParams, heun_params, heun_params_by_index, ratio
from .solutions import (
    Branch,
    Component,
    Family,
    SolutionKind,
    BranchId,
    SolutionValue,
    TYPE_I_F1,
    TYPE_I_F2,
    TYPE_II_F1,
    TYPE_II_F2,
    hc_at,
    eval_f,
    eval_f_derivatives,
    eval_symmetric_pair,
    coupled_residual,
    ode_terms,
    ode_residual,
    eval_F,
    eval_F_all,
    eval_G,
    eval_K,
    condition_values,
    wronskian,
)
from .states import FockState, fock_amplitudes, pair_power_coefficients, state_coefficients

__all__ = [
    'ParameterSet',
    'ModelParams',
    'heun_params',
    'heun_params_by_index',
    'ratio',
    'Branch',
    'Component',
    'Family',
    'SolutionKind',
    'BranchId',
    'SolutionValue',
    'TYPE_I_F1',
    'TYPE_I_F2',
    'TYPE_II_F1',
    'TYPE_II_F2',
    'hc_at',
    'eval_f',
    'eval_f_derivatives',
    'eval_symmetric_pair',
    'coupled_residual',
    'ode_terms',
    'ode_residual',
    'eval_F',
    'eval_F_all',
    'eval_G',
    'eval_K',
    'condition_values',
    'wronskian',
    'FockState',
    'fock_amplitudes',
    'pair_power_coefficients',
    'state_coefficients',
]
