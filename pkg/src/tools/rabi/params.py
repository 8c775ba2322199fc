"""
Model Parameters

Physical parameters of the Rabi model (mode frequency fixed to 1) and their
mapping onto the two confluent Heun parameter sets used by every solution.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from core.config import MODEL_DEFAULTS
from tools.heun import HeunParams
from utils.error_handler import RatioPole, ValidationError
from utils.validators import validate_model_params

class ParameterSet(Enum):
    A = "A"  # printed sets 1 and 4
    B = "B"  # printed sets 2 and 3

@dataclass(frozen=True)
class ModelParams:
    """Half level splitting delta and coupling g, both in units of the mode frequency

    allow_zero admits the decoupled and degenerate limits, which only the
    diagonalization accepts.
    """
    delta: float
    g: float
    allow_zero: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        is_valid, message = validate_model_params(self.delta, self.g, allow_zero=self.allow_zero)
        if not is_valid:
            raise ValidationError(message, {"delta": self.delta, "g": self.g})
        object.__setattr__(self, "delta", float(self.delta))
        object.__setattr__(self, "g", float(self.g))

    @property
    def g2(self) -> float:
        return self.g * self.g

    def require_analytic(self):
        """The analytic solutions need delta > 0 and g > 0"""
        if self.delta <= 0 or self.g <= 0:
            raise ValidationError(
                f"Analytic solutions require delta > 0 and g > 0, got delta={self.delta}, g={self.g}",
                {"delta": self.delta, "g": self.g}
            )

def heun_params(parameter_set: ParameterSet, E: float, m: ModelParams) -> HeunParams:
    g2 = m.g2
    g4 = g2 * g2
    d2 = m.delta * m.delta
    base = (E * E + E - 2.0 * d2 + 1.0) / 2.0
    if ParameterSet(parameter_set) is ParameterSet.A:
        return HeunParams(
            4.0 * g2,
            -(E + g2 + 1.0),
            -(E + g2),
            -2.0 * g2,
            -1.5 * g4 + (1.0 - 2.0 * E) * g2 / 2.0 + base,
        )
    return HeunParams(
        4.0 * g2,
        -(E + g2),
        -(E + g2 + 1.0),
        2.0 * g2,
        -1.5 * g4 - (3.0 + 2.0 * E) * g2 / 2.0 + base,
    )

def heun_params_by_index(k: int, E: float, m: ModelParams) -> HeunParams:
    """Parameter sets 1..4 built from their own defining relations

    Sets 3 and 4 are obtained from 1 and 2 by exchanging beta and gamma,
    negating delta and shifting eta by delta.
    """
    if k == 1:
        return heun_params(ParameterSet.A, E, m)
    if k == 2:
        return heun_params(ParameterSet.B, E, m)
    if k in (3, 4):
        p = heun_params_by_index(k - 2, E, m)
        return HeunParams(p.alpha, p.gamma, p.beta, -p.delta, p.eta + p.delta)
    raise ValidationError(f"Parameter set index must be 1..4, got {k}")

def ratio(E: float, m: ModelParams) -> float:
    """Delta / (E + g^2), the ratio fixing the non-unit solution constants

    Raises:
        RatioPole: |E + g^2| below ratio_pole_tol
    """
    shift = E + m.g2
    if not math.isfinite(shift) or abs(shift) < MODEL_DEFAULTS["ratio_pole_tol"]:
        raise RatioPole(f"Energy E={E} sits on the ratio pole E = -g^2", {"E": E, "g": m.g})
    return m.delta / shift
