"""
Confluent Heun Series

Coefficients, evaluation and truncation residuals of the confluent Heun
function HC(alpha, beta, gamma, delta, eta, x) = sum h_n x^n, generated by the
three-term recurrence A_n h_n = B_n h_{n-1} + C_n h_{n-2}, h_0 = 1, h_{-1} = 0.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

import numpy as np

from core.config import HEUN_DEFAULTS
from utils.error_handler import (
    DivergenceWarning,
    DomainError,
    InconsistentTruncation,
    PoleError,
    ValidationError,
)
from utils.logging_config import get_logger

logger = get_logger("heun")

@dataclass(frozen=True)
class HeunParams:
    """Five confluent Heun parameters; mu and nu are derived metadata"""
    alpha: float
    beta: float
    gamma: float
    delta: float
    eta: float
    mu: float = field(init=False)
    nu: float = field(init=False)

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "eta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValidationError(f"Heun parameter {name} must be finite, got {value}",
                                      {"parameter": name})
            object.__setattr__(self, name, value)
        object.__setattr__(self, "mu",
                           self.delta + self.alpha * (self.beta + self.gamma + 2.0) / 2.0)
        object.__setattr__(self, "nu",
                           self.eta + self.beta / 2.0
                           + (self.gamma - self.alpha) * (self.beta + 1.0) / 2.0)

    def as_tuple(self) -> Tuple[float, float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta, self.eta)

@dataclass(frozen=True)
class HeunEval:
    """Result of a series evaluation"""
    value: float
    derivative: float
    second_derivative: float
    n_terms: int
    converged: bool
    tail_bound: float

def recurrence_coefficients(params: HeunParams, n: int) -> Tuple[float, float, float]:
    """A_n, B_n, C_n for n >= 1"""
    a, b, c, d, e = params.as_tuple()
    n2 = float(n * n)
    A = 1.0 + b / n
    B = 1.0 + (b + c - a - 1.0) / n + (e - b / 2.0 + (c - a) * (b - 1.0) / 2.0) / n2
    C = (d + a * (b + c) / 2.0 + a * (n - 1)) / n2
    return A, B, C

def _c_numerator(params: HeunParams, n: int) -> float:
    return params.delta + params.alpha * (params.beta + params.gamma) / 2.0 + params.alpha * (n - 1)

def iter_coefficients(params: HeunParams,
                      pole_tol: float = HEUN_DEFAULTS["pole_tol"],
                      truncation_tol: float = HEUN_DEFAULTS["truncation_tol"]) -> Iterator[float]:
    """Lazily generate h_0, h_1, ...

    The iterator is infinite unless the series terminates: once a truncation
    has set h_{N+1} = 0 and C_{N+2} vanishes, every later coefficient is zero
    and the iterator stops.
    """
    h_prev2, h_prev1 = 0.0, 1.0
    yield 1.0
    n = 1
    while True:
        A, B, C = recurrence_coefficients(params, n)
        numerator = B * h_prev1 + C * h_prev2
        if abs(A) < pole_tol:
            scale = max(1.0, abs(B * h_prev1), abs(C * h_prev2))
            if abs(numerator) > truncation_tol * scale:
                raise PoleError(
                    f"Series pole at n={n}: |A_n|={abs(A):.3e}, numerator={numerator:.6e}",
                    {"n": n, "A_n": A, "numerator": numerator, "params": params.as_tuple()}
                )
            h = 0.0
            next_c = _c_numerator(params, n + 1)
            if abs(next_c) <= truncation_tol * max(1.0, abs(params.delta), abs(params.alpha) * (n + 1)):
                logger.debug(f"Series terminates at order {n - 1}")
                yield h
                return
            logger.debug(f"Truncation step at n={n} without termination")
        else:
            h = numerator / A
        yield h
        h_prev2, h_prev1 = h_prev1, h
        n += 1

def hc_coefficients(params: HeunParams, n_max: int,
                    pole_tol: float = HEUN_DEFAULTS["pole_tol"],
                    truncation_tol: float = HEUN_DEFAULTS["truncation_tol"]) -> np.ndarray:
    """Coefficients h_0..h_{n_max}

    Raises:
        PoleError: |A_n| below pole_tol with a numerator that does not vanish
    """
    if n_max < 0:
        raise ValidationError(f"n_max must be >= 0, got {n_max}")
    coefficients = np.zeros(n_max + 1)
    for n, h in enumerate(iter_coefficients(params, pole_tol, truncation_tol)):
        if n > n_max:
            break
        coefficients[n] = h
    return coefficients

def _ratio(current: float, previous: float) -> float:
    return current / previous if previous > 0 else 0.0

def hc_eval(params: HeunParams, x: float,
            tol: float = HEUN_DEFAULTS["tol"],
            n_max: int = HEUN_DEFAULTS["n_max"],
            pole_tol: float = HEUN_DEFAULTS["pole_tol"],
            truncation_tol: float = HEUN_DEFAULTS["truncation_tol"]) -> HeunEval:
    """Evaluate HC and its first two x-derivatives by term-wise summation

    Stops when small_term_run consecutive terms of all three sums fall below
    tol relative to max(1, |partial sum|) and the geometric tail estimate,
    available after tail_monotone_run decreasing terms, is below tol.

    Raises:
        DomainError: |x| >= 1 or x not finite
        PoleError: propagated from the recurrence
    """
    x = float(x)
    if not math.isfinite(x) or abs(x) >= 1.0:
        raise DomainError(f"HC series requires |x| < 1, got x={x}", {"x": x})
    if tol <= 0:
        raise ValidationError(f"tol must be > 0, got {tol}")

    if x == 0.0:
        h = hc_coefficients(params, 2, pole_tol, truncation_tol)
        return HeunEval(1.0, float(h[1]), float(2.0 * h[2]), 1, True, 0.0)

    small_run = HEUN_DEFAULTS["small_term_run"]
    monotone_run = HEUN_DEFAULTS["tail_monotone_run"]

    s0 = s1 = s2 = 0.0
    q0 = q1 = q2 = 0.0  # previous absolute terms
    p0, p1, p2 = 1.0, 0.0, 0.0  # x^n, x^(n-1), x^(n-2)
    n_small = 0
    n_monotone = 0
    tail_bound = math.inf
    n_terms = 0

    for n, h in enumerate(iter_coefficients(params, pole_tol, truncation_tol)):
        if n > n_max:
            break
        t0 = h * p0
        t1 = n * h * p1
        t2 = n * (n - 1) * h * p2
        s0 += t0
        s1 += t1
        s2 += t2
        n_terms = n + 1
        a0, a1, a2 = abs(t0), abs(t1), abs(t2)
        c0, c1, c2 = max(1.0, abs(s0)), max(1.0, abs(s1)), max(1.0, abs(s2))

        if a0 < tol * c0 and a1 < tol * c1 and a2 < tol * c2:
            n_small += 1
        else:
            n_small = 0

        if n >= 3:
            if a0 <= q0 and a1 <= q1 and a2 <= q2:
                n_monotone += 1
            else:
                n_monotone = 0
            if n_monotone >= monotone_run:
                ratio = max(_ratio(a0, q0), _ratio(a1, q1), _ratio(a2, q2))
                if ratio < 1.0:
                    tail_bound = max(a0 / c0, a1 / c1, a2 / c2) * ratio / (1.0 - ratio)
                else:
                    tail_bound = math.inf
        q0, q1, q2 = a0, a1, a2

        if n_small >= small_run and tail_bound <= tol:
            return HeunEval(s0, s1, s2, n_terms, True, tail_bound)

        p2, p1 = p1, p0
        p0 *= x
    else:
        # Terminated series: the sum is exact
        return HeunEval(s0, s1, s2, n_terms, True, 0.0)

    warnings.warn(
        DivergenceWarning(f"HC series not converged after {n_max} terms at x={x} (tail {tail_bound:.3e})")
    )
    logger.debug(f"HC divergence at x={x}, params={params.as_tuple()}")
    return HeunEval(s0, s1, s2, n_terms, False, tail_bound)

def delta_condition_residual(params: HeunParams, N: int) -> float:
    """delta + (N + (gamma + beta + 2)/2) alpha, zero when the series can terminate at order N"""
    return params.delta + (N + (params.gamma + params.beta + 2.0) / 2.0) * params.alpha

def hc_truncated_coefficients(params: HeunParams, N: int,
                              pole_tol: float = HEUN_DEFAULTS["pole_tol"]) -> List[float]:
    """h_0..h_N from the finite recurrence, with no pole allowed below N+1"""
    h = [1.0]
    h_prev2 = 0.0
    for n in range(1, N + 1):
        A, B, C = recurrence_coefficients(params, n)
        if abs(A) < pole_tol:
            raise PoleError(f"Series pole at n={n} below truncation order {N}", {"n": n, "N": N})
        h_n = (B * h[-1] + C * h_prev2) / A
        h_prev2 = h[-1]
        h.append(h_n)
    return h

def hc_truncation_residual(params: HeunParams, N: int,
                           truncation_tol: float = HEUN_DEFAULTS["truncation_tol"]) -> float:
    """Closing residual B_{N+1} h_N + C_{N+1} h_{N-1} of an order-N truncation

    Raises:
        InconsistentTruncation: the delta-condition does not hold for this N
    """
    if N < 0:
        raise ValidationError(f"Truncation order must be >= 0, got {N}")
    mismatch = delta_condition_residual(params, N)
    if abs(mismatch) > truncation_tol * max(1.0, abs(params.delta), abs(params.alpha) * (N + 1)):
        raise InconsistentTruncation(
            f"delta-condition violated for N={N}: mismatch {mismatch:.3e}",
            {"N": N, "mismatch": mismatch, "params": params.as_tuple()}
        )
    h = hc_truncated_coefficients(params, N)
    _, B, C = recurrence_coefficients(params, N + 1)
    h_prev = h[N - 1] if N >= 1 else 0.0
    return B * h[N] + C * h_prev
