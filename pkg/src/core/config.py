#!/usr/bin/env python3
"""
Rabi Heun Spectrum Configuration Module

Contains numerical defaults per module, output and logging configuration
and the exit codes of the command line
"""

import os
import sys
from typing import Dict, Any

from dotenv import load_dotenv

from utils.logging_config import get_logger

# Optional .env in the working directory; nothing numerical is read from it
load_dotenv()

logger = get_logger("config")

PACKAGE_CONFIG = {
    "name": "rabi-heun-spectrum",
    "version": "0.3.0",
    "description": "Quantum Rabi model spectrum from confluent Heun function solutions",
}

# Confluent Heun series evaluation
HEUN_DEFAULTS = {
    "tol": 1e-12,
    "n_max": 500,
    "pole_tol": 1e-12,          # |A_n| below this is a pole or a truncation
    "truncation_tol": 1e-9,     # numerator tolerance of the truncation case
    "tail_monotone_run": 10,    # decreasing terms before the geometric tail applies
    "small_term_run": 3,
}

# Model level evaluation (solutions and condition functions)
MODEL_DEFAULTS = {
    "ratio_pole_tol": 1e-12,
    "consistency_rtol": 1e-10,  # agreement of the two forms of K
    "symmetry_rtol": 1e-12,     # W1(E, -z) against W2(E, z)
    "z_fraction": 0.375,        # second validation point is z_fraction * g
}

# Energy scans and root refinement
SCAN_DEFAULTS = {
    "e_min": -1.0,
    "e_max": 6.0,
    "e_step": 0.01,
    "eps_pole": 1e-4,
    "refine_tol": 1e-10,
    "merge_tol": 1e-7,
    "cross_tol": 1e-7,
    "label_tol": 1e-4,          # distance to the oracle level that lends its parity
    "max_workers": 4,
}

# Exceptional spectrum
JUDD_DEFAULTS = {
    "residual_tol": 1e-9,
    "delta2_max": 16.0,
    "delta2_step": 1e-3,
    "delta2_tol": 1e-12,
}

# Truncated Fock space diagonalization
ORACLE_DEFAULTS = {
    "n_max": 80,
    "tol": 1e-8,
    "min_converged": 5,
    "degeneracy_rtol": 1e-8,
    "parity_threshold": 0.99,
}

# Fock expansion of analytic states
STATE_DEFAULTS = {
    "n_max": 80,
    "tail_tol": 1e-10,
    "noise_tol": 1e-3,          # largest relative amplitude accepted as the noise floor
}

OUTPUT_CONFIG = {
    "significant_digits": 15,
    "float_format": "%.15g",
    "formats": ("csv", "json"),
}

LOG_CONFIG = {
    "console_level": os.getenv("RABI_HEUN_LOG_LEVEL", "WARNING"),
    "file_level": "DEBUG",
    "log_directory": os.getenv("RABI_HEUN_LOG_DIR") or None,
    "enable_json_format": True,
    "max_file_size_mb": 10,
    "backup_count": 5,
}

EXIT_CODES = {
    "success": 0,
    "usage": 2,
    "numerical_domain": 3,
    "convergence": 4,
}

def get_platform_info() -> Dict[str, Any]:
    """Get platform information"""
    return {
        "platform": sys.platform,
        "python_version": sys.version.split()[0],
        "float_digits": sys.float_info.dig,
        "package_version": PACKAGE_CONFIG["version"],
    }

def get_config_summary() -> Dict[str, Any]:
    """Get configuration summary"""
    return {
        "package": PACKAGE_CONFIG,
        "platform": get_platform_info(),
        "heun": dict(HEUN_DEFAULTS),
        "model": dict(MODEL_DEFAULTS),
        "scan": dict(SCAN_DEFAULTS),
        "judd": dict(JUDD_DEFAULTS),
        "oracle": dict(ORACLE_DEFAULTS),
        "state": dict(STATE_DEFAULTS),
        "output": {k: (list(v) if isinstance(v, tuple) else v) for k, v in OUTPUT_CONFIG.items()},
        "log_config": dict(LOG_CONFIG),
    }

logger.debug(f"Configuration loaded, version {PACKAGE_CONFIG['version']}")
