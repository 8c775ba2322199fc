"""
Exceptional Spectrum

Truncation energies, the (delta, g) constraint curves on which the Heun
series of both parameter sets terminate, and the polynomial eigenstates
living on them. On the N1-th curve the energy is N1 - g^2, Set A truncates
at order N1 and Set B at order N1 - 1.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np
from scipy.optimize import bisect

from core.config import JUDD_DEFAULTS, STATE_DEFAULTS
from tools.heun import HeunParams, hc_truncated_coefficients, hc_truncation_residual, recurrence_coefficients
from tools.rabi.params import ModelParams, ParameterSet, heun_params
from tools.rabi.solutions import SolutionKind, wronskian
from tools.rabi.states import FockState, state_coefficients
from utils.error_handler import OffCurve, ValidationError
from utils.logging_config import get_logger

logger = get_logger("judd")

@dataclass(frozen=True)
class JuddPoint:
    N1: int
    g: float
    delta: float
    energy: float
    constraint_residual: float

    @property
    def N2(self) -> int:
        return self.N1 - 1

@dataclass
class JuddState:
    """Degenerate pair of polynomial solutions at an exceptional point"""
    point: JuddPoint
    asym1: FockState
    asym2: FockState
    coefficients_a: List[float]
    coefficients_b: List[float]
    wronskian: float
    multiplicity: int = 2
    details: Dict[str, float] = field(default_factory=dict)

def _check_order(N1: int):
    if int(N1) != N1 or N1 < 1:
        raise ValidationError(f"N1 must be an integer >= 1, got {N1}")

def truncation_energy(parameter_set: ParameterSet, N: int, g: float) -> float:
    """Energy at which the delta-condition of a parameter set holds for order N"""
    if int(N) != N or N < 0:
        raise ValidationError(f"Truncation order must be an integer >= 0, got {N}")
    if not g > 0:
        raise ValidationError(f"g must be > 0, got {g}")
    shift = 0 if ParameterSet(parameter_set) is ParameterSet.A else 1
    return N + shift - g * g

def _normalization(params: HeunParams, N: int) -> float:
    product = 1.0
    for n in range(1, N + 1):
        A, _, _ = recurrence_coefficients(params, n)
        product *= 1.0 + abs(A)
    return product

def _normalized_residual(parameter_set: ParameterSet, N: int, E: float, m: ModelParams) -> float:
    params = heun_params(parameter_set, E, m)
    return hc_truncation_residual(params, N) / _normalization(params, N)

def constraint_value(N1: int, m: ModelParams) -> float:
    """Normalized closing residual of the Set B truncation at order N1 - 1

    Zero exactly on the N1-th exceptional curve. For N1 = 1 it reduces to
    1 - delta^2 - 4 g^2.
    """
    _check_order(N1)
    m.require_analytic()
    E = truncation_energy(ParameterSet.A, N1, m.g)
    return _normalized_residual(ParameterSet.B, N1 - 1, E, m)

def constraint_pair(N1: int, m: ModelParams) -> Tuple[float, float]:
    """(Set A residual at order N1, Set B residual at order N1 - 1), both normalized"""
    _check_order(N1)
    m.require_analytic()
    E = truncation_energy(ParameterSet.A, N1, m.g)
    return (_normalized_residual(ParameterSet.A, N1, E, m),
            _normalized_residual(ParameterSet.B, N1 - 1, E, m))

def solve_judd_delta(N1: int, g: float,
                     delta2_max: float = JUDD_DEFAULTS["delta2_max"],
                     delta2_step: float = JUDD_DEFAULTS["delta2_step"],
                     delta2_tol: float = JUDD_DEFAULTS["delta2_tol"]) -> List[float]:
    """All delta > 0 on the N1-th curve at coupling g, ascending"""
    _check_order(N1)
    if not g > 0:
        raise ValidationError(f"g must be > 0, got {g}")

    def residual(delta2: float) -> float:
        return constraint_value(N1, ModelParams(math.sqrt(delta2), g))

    # left endpoint just above zero so roots with delta^2 < delta2_step are bracketed
    grid = np.concatenate((
        [delta2_step * 1e-6],
        np.arange(1, int(round(delta2_max / delta2_step)) + 1) * delta2_step,
    ))
    values = [residual(d2) for d2 in grid]

    roots: List[float] = []
    for k, value in enumerate(values):
        if value == 0.0:
            roots.append(float(grid[k]))
        elif k + 1 < len(values) and value * values[k + 1] < 0.0:
            roots.append(bisect(residual, grid[k], grid[k + 1], xtol=delta2_tol))

    deltas = [math.sqrt(d2) for d2 in roots]
    logger.debug(f"N1={N1}, g={g}: {len(deltas)} exceptional delta values")
    return deltas

def judd_points(N1: int, g_values: Iterable[float]) -> List[JuddPoint]:
    """Trace the N1-th curve over a set of couplings"""
    points: List[JuddPoint] = []
    for g in g_values:
        for delta in solve_judd_delta(N1, g):
            m = ModelParams(delta, g)
            points.append(JuddPoint(N1, g, delta, N1 - g * g, constraint_value(N1, m)))
    return points

def _require_on_curve(N1: int, m: ModelParams, residual_tol: float) -> float:
    residual = constraint_value(N1, m)
    if abs(residual) >= residual_tol:
        raise OffCurve(
            f"(delta={m.delta}, g={m.g}) is not on exceptional curve N1={N1}: residual {residual:.3e}",
            {"N1": N1, "delta": m.delta, "g": m.g, "residual": residual}
        )
    return residual

def judd_state(N1: int, m: ModelParams,
               n_max: int = STATE_DEFAULTS["n_max"],
               residual_tol: float = JUDD_DEFAULTS["residual_tol"]) -> JuddState:
    """The two degenerate asymmetric solutions at E = N1 - g^2

    Raises:
        OffCurve: the constraint residual is not below residual_tol
    """
    _check_order(N1)
    residual = _require_on_curve(N1, m, residual_tol)
    E = truncation_energy(ParameterSet.A, N1, m.g)

    coefficients_a = hc_truncated_coefficients(heun_params(ParameterSet.A, E, m), N1)
    coefficients_b = hc_truncated_coefficients(heun_params(ParameterSet.B, E, m), N1 - 1)
    w = wronskian(1, E, 0.0, m)
    residual_a, _ = constraint_pair(N1, m)

    logger.info(f"Exceptional state N1={N1} at E={E:.12g}, Wronskian {w:.6e}")
    return JuddState(
        point=JuddPoint(N1, m.g, m.delta, E, residual),
        asym1=state_coefficients(SolutionKind.ASYM1, E, m, n_max),
        asym2=state_coefficients(SolutionKind.ASYM2, E, m, n_max),
        coefficients_a=[float(h) for h in coefficients_a],
        coefficients_b=[float(h) for h in coefficients_b],
        wronskian=w,
        details={"set_a_residual": residual_a},
    )

def judd_parity_states(N1: int, m: ModelParams,
                       n_max: int = STATE_DEFAULTS["n_max"],
                       residual_tol: float = JUDD_DEFAULTS["residual_tol"]) -> Tuple[FockState, FockState]:
    """Symmetric and antisymmetric combinations of the degenerate pair"""
    _check_order(N1)
    _require_on_curve(N1, m, residual_tol)
    E = truncation_energy(ParameterSet.A, N1, m.g)
    return (state_coefficients(SolutionKind.SYMMETRIC, E, m, n_max),
            state_coefficients(SolutionKind.ANTISYMMETRIC, E, m, n_max))
