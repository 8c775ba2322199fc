"""
Exceptional (Judd) spectrum
"""

from .exceptional import (
    JuddPoint,
    JuddState,
    truncation_energy,
    constraint_value,
    constraint_pair,
    solve_judd_delta,
    judd_points,
    judd_state,
    judd_parity_states,
)

__all__ = [
    'JuddPoint',
    'JuddState',
    'truncation_energy',
    'constraint_value',
    'constraint_pair',
    'solve_judd_delta',
    'judd_points',
    'judd_state',
    'judd_parity_states',
]
