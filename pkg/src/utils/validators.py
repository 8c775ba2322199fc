#!/usr/bin/env python3
"""
Parameter Validator Module

Contains validation functions for model parameters, energy windows,
evaluation points, tolerances and truncation orders
"""

import math
from typing import Any, Iterable, Tuple

def _is_real(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)

def validate_model_params(delta: Any, g: Any, allow_zero: bool = False) -> Tuple[bool, str]:
    """Validate model parameters

    Args:
        delta: Half level splitting in units of the mode frequency
        g: Coupling in units of the mode frequency
        allow_zero: Accept delta = 0 or g = 0 (diagonalization only)

    Returns:
        Tuple[bool, str]: (is valid, error message)
    """
    for name, value in (("delta", delta), ("g", g)):
        if not _is_real(value):
            return False, f"Parameter {name} must be a number"
        if not math.isfinite(value):
            return False, f"Parameter {name} must be finite"
        if allow_zero:
            if value < 0:
                return False, f"Parameter {name} must be >= 0"
        elif value <= 0:
            return False, f"Parameter {name} must be > 0"

    return True, ""

def validate_energy_window(e_min: Any, e_max: Any, e_step: Any = None) -> Tuple[bool, str]:
    """Validate energy window and scan step

    Returns:
        Tuple[bool, str]: (is valid, error message)
    """
    for name, value in (("e_min", e_min), ("e_max", e_max)):
        if not _is_real(value) or not math.isfinite(value):
            return False, f"Parameter {name} must be a finite number"

    if e_min >= e_max:
        return False, f"Energy window must satisfy e_min < e_max, got [{e_min}, {e_max}]"

    if e_step is not None:
        if not _is_real(e_step) or not math.isfinite(e_step) or e_step <= 0:
            return False, "Parameter e_step must be a positive number"

    return True, ""

def validate_z_samples(z_values: Iterable[Any], g: float) -> Tuple[bool, str]:
    """Validate evaluation points, all strictly inside (-g, g)"""
    z_list = list(z_values)
    if not z_list:
        return False, "At least one z value is required"

    for z in z_list:
        if not _is_real(z) or not math.isfinite(z):
            return False, f"z value {z!r} must be a finite number"
        if abs(z) >= g:
            return False, f"z value {z} must lie inside (-g, g) = ({-g}, {g})"

    return True, ""

def validate_tolerance(tol: Any, name: str = "tol") -> Tuple[bool, str]:
    if not _is_real(tol) or not math.isfinite(tol) or tol <= 0:
        return False, f"Parameter {name} must be a positive number"
    return True, ""

def validate_truncation_order(order: Any, minimum: int = 0, name: str = "n_max") -> Tuple[bool, str]:
    """Validate an integer order (series length, photon cutoff, Judd order)"""
    if not isinstance(order, int) or isinstance(order, bool):
        return False, f"Parameter {name} must be an integer"
    if order < minimum:
        return False, f"Parameter {name} must be >= {minimum}"
    return True, ""
