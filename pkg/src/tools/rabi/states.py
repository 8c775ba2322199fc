"""
Fock States

Expansion of analytic solutions psi(a^dagger)|0> into photon-number
amplitudes. A power z^k acting on the vacuum contributes sqrt(k!) |k>.
"""

import math
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np
from scipy.special import gammaln

from core.config import HEUN_DEFAULTS, STATE_DEFAULTS
from tools.heun import hc_coefficients
from tools.rabi.params import ModelParams, ParameterSet, heun_params, ratio
from tools.rabi.solutions import SolutionKind
from utils.error_handler import DomainError, TruncationError, ValidationError
from utils.logging_config import get_logger

logger = get_logger("rabi.states")

@dataclass
class FockState:
    """Amplitudes on |n>|up> and |n>|down>, n = 0..n_max"""
    up: np.ndarray
    down: np.ndarray

    def __post_init__(self):
        self.up = np.asarray(self.up, dtype=float)
        self.down = np.asarray(self.down, dtype=float)
        if self.up.shape != self.down.shape or self.up.ndim != 1:
            raise ValidationError("FockState spin components must be 1-d arrays of equal length")

    @property
    def n_max(self) -> int:
        return len(self.up) - 1

    def norm(self) -> float:
        return float(math.sqrt(np.dot(self.up, self.up) + np.dot(self.down, self.down)))

    def normalized(self) -> "FockState":
        norm = self.norm()
        if norm == 0.0:
            raise DomainError("Cannot normalize the zero state")
        return FockState(self.up / norm, self.down / norm)

    def padded(self, n_max: int) -> "FockState":
        extra = n_max - self.n_max
        if extra <= 0:
            return self
        return FockState(np.pad(self.up, (0, extra)), np.pad(self.down, (0, extra)))

    def as_vector(self) -> np.ndarray:
        """Interleaved vector, index 2n + spin with up = 0"""
        vector = np.empty(2 * len(self.up))
        vector[0::2] = self.up
        vector[1::2] = self.down
        return vector

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "FockState":
        vector = np.asarray(vector, dtype=float)
        return cls(vector[0::2].copy(), vector[1::2].copy())

def fock_amplitudes(power_coefficients: np.ndarray) -> np.ndarray:
    """c_k z^k |0> -> c_k sqrt(k!) |k>"""
    coefficients = np.asarray(power_coefficients, dtype=float)
    k = np.arange(len(coefficients))
    with np.errstate(over="ignore", invalid="ignore"):
        return coefficients * np.exp(0.5 * gammaln(k + 1))

def _taylor_about_half(h: np.ndarray, kappa: float, n_max: int) -> np.ndarray:
    """z-power coefficients of sum_n h_n (1/2 + kappa z)^n up to z^n_max"""
    n = np.arange(len(h))
    log_kappa = math.log(abs(kappa))
    sign_kappa = 1.0 if kappa > 0 else -1.0
    out = np.zeros(n_max + 1)
    for j in range(min(n_max, len(h) - 1) + 1):
        nj = n[j:]
        log_w = (gammaln(nj + 1) - gammaln(j + 1) - gammaln(nj - j + 1)
                 - (nj - j) * math.log(2.0) + j * log_kappa)
        with np.errstate(over="ignore", invalid="ignore"):
            out[j] = (sign_kappa ** j) * float(np.dot(h[j:], np.exp(log_w)))
    return out

def _component_power_series(parameter_set: ParameterSet, s: int, constant: float, E: float,
                            m: ModelParams, n_max: int, n_series: int) -> np.ndarray:
    """z-power coefficients of constant * exp(s g z) HC((g + s z)/2g)"""
    g = m.g
    h = hc_coefficients(heun_params(parameter_set, E, m), n_series)
    series = _taylor_about_half(h, s / (2.0 * g), n_max)
    k = np.arange(n_max + 1)
    exponential = np.exp(k * math.log(g) - gammaln(k + 1)) * (float(s) ** k)
    return constant * np.convolve(series, exponential)[:n_max + 1]

# (parameter set, sign of the exponent, carries the ratio constant)
_PART_LAYOUT = {
    "I1": (ParameterSet.A, -1, False),
    "I2": (ParameterSet.B, -1, True),
    "II1": (ParameterSet.B, 1, True),
    "II2": (ParameterSet.A, 1, False),
}

def _names_for(kind: SolutionKind) -> Tuple[str, ...]:
    if kind is SolutionKind.ASYM1:
        return ("I1", "I2")
    if kind is SolutionKind.ASYM2:
        return ("II1", "II2")
    return ("I1", "I2", "II1", "II2")

def _branch_power_series(kind: SolutionKind, E: float, m: ModelParams,
                         n_max: int, n_series: int) -> Dict[str, np.ndarray]:
    r = ratio(E, m)
    parts: Dict[str, np.ndarray] = {}
    for name in _names_for(kind):
        parameter_set, s, with_ratio = _PART_LAYOUT[name]
        constant = r if with_ratio else 1.0
        parts[name] = _component_power_series(parameter_set, s, constant, E, m, n_max, n_series)
    return parts

def _combine(kind: SolutionKind, parts: Dict[str, np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    if kind is SolutionKind.ASYM1:
        return parts["I1"], parts["I2"]
    if kind is SolutionKind.ASYM2:
        return parts["II1"], parts["II2"]
    sign = 1.0 if kind is SolutionKind.SYMMETRIC else -1.0
    return parts["I1"] + sign * parts["II1"], parts["I2"] + sign * parts["II2"]

def pair_power_coefficients(kind: SolutionKind, E: float, m: ModelParams,
                            n_max: int = STATE_DEFAULTS["n_max"],
                            n_series: int = HEUN_DEFAULTS["n_max"]) -> Tuple[np.ndarray, np.ndarray]:
    """Power-series coefficients of (f1, f2) for a solution family"""
    m.require_analytic()
    kind = SolutionKind(kind)
    return _combine(kind, _branch_power_series(kind, E, m, n_max, n_series))

def _cut_index(magnitudes: np.ndarray, tail_tol: float, noise_tol: float) -> int:
    """Number of amplitudes to keep

    The first index where two consecutive amplitudes fall below tail_tol of
    the running norm ends the expansion. Without one, the least relative
    amplitude marks the noise floor and must be below noise_tol.
    """
    running = np.sqrt(np.cumsum(magnitudes ** 2))
    prior = np.concatenate(([0.0], running[:-1]))
    with np.errstate(divide="ignore", invalid="ignore"):
        relative = np.where(prior > 0, magnitudes / prior, np.inf)
    relative = np.where(np.isfinite(magnitudes), relative, np.inf)

    for k in range(1, len(relative) - 1):
        if relative[k] <= tail_tol and relative[k + 1] <= tail_tol:
            return k
    if len(relative) > 1 and relative[-1] <= tail_tol:
        return len(relative) - 1

    k_min = int(np.argmin(relative[1:])) + 1 if len(relative) > 1 else 0
    if k_min > 0 and relative[k_min] <= noise_tol:
        logger.debug(f"Fock expansion cut at noise floor k={k_min}, relative {relative[k_min]:.3e}")
        return k_min
    raise TruncationError(
        f"Fock amplitudes do not decay below {noise_tol:g} of the norm within n_max={len(magnitudes) - 1}",
        {"min_relative_amplitude": float(relative[k_min]) if k_min > 0 else None}
    )

def state_coefficients(kind: SolutionKind, E: float, m: ModelParams,
                       n_max: int = STATE_DEFAULTS["n_max"],
                       tail_tol: float = STATE_DEFAULTS["tail_tol"],
                       noise_tol: float = STATE_DEFAULTS["noise_tol"]) -> FockState:
    """Normalized Fock state (f1 + f2)/2 |up> + (f1 - f2)/2 |down>

    Raises:
        TruncationError: amplitudes do not decay within n_max
        DomainError: the combination vanishes (the energy belongs to the other parity)
    """
    if n_max < 1:
        raise ValidationError(f"n_max must be >= 1, got {n_max}")
    m.require_analytic()
    kind = SolutionKind(kind)
    parts = _branch_power_series(kind, E, m, n_max, HEUN_DEFAULTS["n_max"])
    f1, f2 = _combine(kind, parts)
    up = fock_amplitudes((f1 + f2) / 2.0)
    down = fock_amplitudes((f1 - f2) / 2.0)

    if kind in (SolutionKind.SYMMETRIC, SolutionKind.ANTISYMMETRIC):
        # The combination vanishes identically when the two branches coincide
        head = min(n_max, 8) + 1
        reference = fock_amplitudes(np.hypot(parts["I1"], parts["I2"]))[:head]
        combined = np.hypot(up, down)[:head]
        if np.linalg.norm(combined) < 1e-6 * np.linalg.norm(reference):
            raise DomainError(
                f"The {kind.value} combination vanishes at E={E}; the level has the opposite parity",
                {"E": E, "kind": kind.value}
            )

    keep = _cut_index(np.hypot(up, down), tail_tol, noise_tol)
    up[keep:] = 0.0
    down[keep:] = 0.0
    return FockState(up, down).normalized()
