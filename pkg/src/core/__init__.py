"""
Rabi Heun Spectrum Core Module

Contains configuration management
"""

from .config import (
    HEUN_DEFAULTS,
    MODEL_DEFAULTS,
    SCAN_DEFAULTS,
    JUDD_DEFAULTS,
    ORACLE_DEFAULTS,
    STATE_DEFAULTS,
    OUTPUT_CONFIG,
    LOG_CONFIG,
    EXIT_CODES,
    get_config_summary,
)

__all__ = [
    'HEUN_DEFAULTS',
    'MODEL_DEFAULTS',
    'SCAN_DEFAULTS',
    'JUDD_DEFAULTS',
    'ORACLE_DEFAULTS',
    'STATE_DEFAULTS',
    'OUTPUT_CONFIG',
    'LOG_CONFIG',
    'EXIT_CODES',
    'get_config_summary',
]
