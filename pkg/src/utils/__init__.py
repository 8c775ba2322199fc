"""
Utility Module

Contains logging, error handling, validators and response helpers
"""

from .error_handler import (
    ErrorHandler,
    ErrorCategory,
    ErrorSeverity,
    RabiHeunError,
)
from .logging_config import get_logger, setup_logging, PerformanceMonitor

from .validators import (
    validate_model_params,
    validate_energy_window,
    validate_z_samples,
    validate_tolerance,
    validate_truncation_order
)

__all__ = [
    'ErrorHandler',
    'ErrorCategory',
    'ErrorSeverity',
    'RabiHeunError',
    'get_logger',
    'setup_logging',
    'PerformanceMonitor',
    'validate_model_params',
    'validate_energy_window',
    'validate_z_samples',
    'validate_tolerance',
    'validate_truncation_order'
]
