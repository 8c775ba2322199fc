"""
Confluent Heun function evaluation
"""

from .series import (
    HeunParams,
    HeunEval,
    recurrence_coefficients,
    iter_coefficients,
    hc_coefficients,
    hc_eval,
    delta_condition_residual,
    hc_truncated_coefficients,
    hc_truncation_residual,
)

__all__ = [
    'HeunParams',
    'HeunEval',
    'recurrence_coefficients',
    'iter_coefficients',
    'hc_coefficients',
    'hc_eval',
    'delta_condition_residual',
    'hc_truncated_coefficients',
    'hc_truncation_residual',
]
