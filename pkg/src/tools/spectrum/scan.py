"""
Root Scanning

Sign-change bracketing of condition functions over an energy grid, bisection
refinement and cross-validation of root sets between evaluation points.
Grid points inside the exclusion windows around the pole baselines
E = m - g^2 (m = 0, 1, ...) are never evaluated, and brackets never span a
window.
"""

import math
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import bisect

from core.config import SCAN_DEFAULTS
from tools.rabi.params import ModelParams
from tools.rabi.solutions import Family, eval_G, eval_K, wronskian
from utils.error_handler import LostBracket, RabiHeunError, ValidationError
from utils.logging_config import get_logger

logger = get_logger("spectrum.scan")

Condition = Callable[[float, float], float]
Bracket = Tuple[float, float]

class ConditionSource(Enum):
    G12PLUS = "G12plus"
    G34PLUS = "G34plus"
    G12MINUS = "G12minus"
    G34MINUS = "G34minus"
    W1 = "W1"
    KPLUS = "Kplus"
    KMINUS = "Kminus"
    JUDD = "Judd"

# Canonical order; also the tie-break when merged roots come from several sources
SOURCE_ORDER = (
    ConditionSource.G12PLUS,
    ConditionSource.G34PLUS,
    ConditionSource.G12MINUS,
    ConditionSource.G34MINUS,
    ConditionSource.W1,
    ConditionSource.KPLUS,
    ConditionSource.KMINUS,
    ConditionSource.JUDD,
)

DEFAULT_SOURCES = SOURCE_ORDER[:5]

def condition_function(source: ConditionSource, m: ModelParams) -> Condition:
    """cond(E, z) for a scan source

    G12 sources use G1 and G34 sources use G3; G2 and G4 share their roots.
    """
    source = ConditionSource(source)
    if source is ConditionSource.G12PLUS:
        return lambda E, z: eval_G(Family.PLUS, 1, E, z, m)
    if source is ConditionSource.G34PLUS:
        return lambda E, z: eval_G(Family.PLUS, 3, E, z, m)
    if source is ConditionSource.G12MINUS:
        return lambda E, z: eval_G(Family.MINUS, 1, E, z, m)
    if source is ConditionSource.G34MINUS:
        return lambda E, z: eval_G(Family.MINUS, 3, E, z, m)
    if source is ConditionSource.W1:
        return lambda E, z: wronskian(1, E, z, m)
    if source is ConditionSource.KPLUS:
        return lambda E, z: eval_K(Family.PLUS, E, z, m)
    if source is ConditionSource.KMINUS:
        return lambda E, z: eval_K(Family.MINUS, E, z, m)
    raise ValidationError(f"{source.value} is not a scannable condition")

def pole_baselines(e_window: Tuple[float, float], m: ModelParams, eps_pole: float) -> List[float]:
    """Baselines m - g^2 whose exclusion window meets e_window"""
    e_min, e_max = e_window
    g2 = m.g2
    first = max(0, math.ceil(e_min - eps_pole + g2))
    last = math.floor(e_max + eps_pole + g2)
    return [k - g2 for k in range(first, last + 1)]

def pole_windows(e_window: Tuple[float, float], m: ModelParams,
                 eps_pole: float = SCAN_DEFAULTS["eps_pole"]) -> List[Bracket]:
    """Exclusion windows clipped to e_window"""
    e_min, e_max = e_window
    return [(max(e_min, b - eps_pole), min(e_max, b + eps_pole))
            for b in pole_baselines(e_window, m, eps_pole)]

def _segments(e_window: Tuple[float, float], windows: Sequence[Bracket]) -> List[Bracket]:
    segments: List[Bracket] = []
    lo = e_window[0]
    for w_lo, w_hi in windows:
        if w_lo > lo:
            segments.append((lo, w_lo))
        lo = max(lo, w_hi)
    if lo < e_window[1]:
        segments.append((lo, e_window[1]))
    return segments

def _grid(lo: float, hi: float, step: float) -> np.ndarray:
    count = max(1, int(math.ceil((hi - lo) / step - 1e-9)))
    return np.linspace(lo, hi, count + 1)

def _safe_value(cond: Condition, E: float, z: float) -> Optional[float]:
    try:
        value = float(cond(E, z))
    except (RabiHeunError, ArithmeticError) as e:
        logger.debug(f"Condition skipped at E={E}, z={z}: {e}")
        return None
    return value if math.isfinite(value) else None

def scan_brackets(cond: Condition, e_window: Tuple[float, float], z: float,
                  step: float = SCAN_DEFAULTS["e_step"],
                  m: Optional[ModelParams] = None,
                  eps_pole: float = SCAN_DEFAULTS["eps_pole"]) -> List[Bracket]:
    """Sign-change brackets of cond(., z) over e_window

    Without model parameters no exclusion windows apply. A grid point where
    the condition is exactly zero yields the degenerate bracket (E, E).
    """
    e_min, e_max = float(e_window[0]), float(e_window[1])
    if not (math.isfinite(e_min) and math.isfinite(e_max)) or e_min >= e_max:
        raise ValidationError(f"Invalid energy window ({e_min}, {e_max})")
    if not step > 0:
        raise ValidationError(f"Scan step must be > 0, got {step}")

    windows = pole_windows((e_min, e_max), m, eps_pole) if m is not None else []
    if windows:
        logger.debug(f"Skipping {len(windows)} pole windows at z={z}")

    brackets: List[Bracket] = []
    for lo, hi in _segments((e_min, e_max), windows):
        previous: Optional[Tuple[float, float]] = None
        for E in _grid(lo, hi, step):
            E = float(E)
            value = _safe_value(cond, E, z)
            if value is None:
                previous = None
                continue
            if value == 0.0:
                brackets.append((E, E))
            elif previous is not None and previous[1] != 0.0 and previous[1] * value < 0.0:
                brackets.append((previous[0], E))
            previous = (E, value)
    return brackets

def refine_root(cond: Condition, bracket: Bracket, z: float,
                tol: float = SCAN_DEFAULTS["refine_tol"]) -> float:
    """Bisect a sign-change bracket to width tol

    Raises:
        LostBracket: the signs do not differ, the condition fails inside the
            bracket, or the end value exceeds both bracket values (a pole)
    """
    a, b = bracket
    if a == b:
        return float(a)

    def f(E: float) -> float:
        return float(cond(E, z))

    try:
        fa, fb = f(a), f(b)
        root = bisect(f, a, b, xtol=tol)
        f_root = f(root)
    except (ValueError, RabiHeunError, ArithmeticError) as e:
        raise LostBracket(f"Bracket [{a}, {b}] lost at z={z}: {e}", {"bracket": [a, b], "z": z}) from e

    if abs(f_root) > max(abs(fa), abs(fb)):
        raise LostBracket(
            f"Bracket [{a}, {b}] at z={z} converged onto a pole, |f|={abs(f_root):.3e}",
            {"bracket": [a, b], "z": z, "value": f_root}
        )
    return float(root)

def cross_validate(roots_by_z: Dict[float, List[float]],
                   tol: float = SCAN_DEFAULTS["cross_tol"]) -> List[float]:
    """Roots of the first evaluation point confirmed at every other one

    Raises:
        ValidationError: fewer than two evaluation points
    """
    if len(roots_by_z) < 2:
        raise ValidationError("Cross-validation needs root sets at two or more z values")

    z_values = sorted(roots_by_z)
    reference = sorted(roots_by_z[z_values[0]])
    others = [np.sort(np.asarray(roots_by_z[z], dtype=float)) for z in z_values[1:]]

    def confirmed(E: float, roots: np.ndarray) -> bool:
        return roots.size > 0 and bool(np.min(np.abs(roots - E)) <= tol)

    survivors = [E for E in reference if all(confirmed(E, roots) for roots in others)]

    survivor_array = np.asarray(survivors)
    for z in z_values:
        discarded = [E for E in roots_by_z[z]
                     if survivor_array.size == 0 or np.min(np.abs(survivor_array - E)) > tol]
        if discarded:
            logger.info(f"Discarded {len(discarded)} unconfirmed roots at z={z}",
                        extra={"z": z, "discarded": discarded})
    return survivors

def scan_roots(cond: Condition, e_window: Tuple[float, float], z: float,
               step: float = SCAN_DEFAULTS["e_step"],
               m: Optional[ModelParams] = None,
               eps_pole: float = SCAN_DEFAULTS["eps_pole"],
               tol: float = SCAN_DEFAULTS["refine_tol"]) -> List[float]:
    """Scan and refine; brackets that are lost are logged and dropped"""
    roots: List[float] = []
    for bracket in scan_brackets(cond, e_window, z, step, m, eps_pole):
        try:
            roots.append(refine_root(cond, bracket, z, tol))
        except LostBracket as e:
            logger.warning(e.message)
    return roots
