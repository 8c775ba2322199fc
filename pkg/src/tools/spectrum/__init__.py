"""
Eigenvalue search over the analytic condition functions
"""

from .scan import (
    ConditionSource,
    SOURCE_ORDER,
    DEFAULT_SOURCES,
    condition_function,
    pole_baselines,
    pole_windows,
    scan_brackets,
    refine_root,
    cross_validate,
    scan_roots,
)
from .assemble import (
    Parity,
    Classification,
    RootRecord,
    SpectrumResult,
    SpectrumOptions,
    default_z_values,
    compute_spectrum,
    labelling_oracle,
)
from .compare import compare_with_oracle, regular_state, unmatched_oracle_levels

__all__ = [
    'ConditionSource',
    'SOURCE_ORDER',
    'DEFAULT_SOURCES',
    'condition_function',
    'pole_baselines',
    'pole_windows',
    'scan_brackets',
    'refine_root',
    'cross_validate',
    'scan_roots',
    'Parity',
    'Classification',
    'RootRecord',
    'SpectrumResult',
    'SpectrumOptions',
    'default_z_values',
    'compute_spectrum',
    'labelling_oracle',
    'compare_with_oracle',
    'regular_state',
    'unmatched_oracle_levels',
]
