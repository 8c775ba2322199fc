"""
Analytic Solutions

Type-I and Type-II solution branches, their symmetric, antisymmetric and
asymmetric combinations, and the spectral condition functions F, G, K and
the Wronskians built from them. Evaluation points z lie in (-g, g).
"""

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Tuple

from core.config import MODEL_DEFAULTS
from tools.heun import HeunEval, hc_eval
from tools.rabi.params import ModelParams, ParameterSet, heun_params, ratio
from utils.error_handler import ConsistencyError, DomainError, ValidationError

class Branch(Enum):
    TYPE_I = "TypeI"    # expansion about z = g, factor exp(-g z)
    TYPE_II = "TypeII"  # expansion about z = -g, factor exp(g z)

class Component(Enum):
    F1 = "f1"
    F2 = "f2"

class Family(Enum):
    PLUS = "plus"
    MINUS = "minus"

class SolutionKind(Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    ASYM1 = "asym1"  # Type-I pair
    ASYM2 = "asym2"  # Type-II pair

@dataclass(frozen=True)
class BranchId:
    branch: Branch
    component: Component

    @classmethod
    def parse(cls, text: str) -> "BranchId":
        """Parse 'TypeI/f1' style identifiers"""
        try:
            branch, component = text.split("/")
            return cls(Branch(branch), Component(component))
        except ValueError as e:
            raise ValidationError(f"Invalid branch id: {text!r}") from e

@dataclass(frozen=True)
class SolutionValue:
    value: float
    derivative: float
    second_derivative: float

    def __add__(self, other: "SolutionValue") -> "SolutionValue":
        return SolutionValue(self.value + other.value, self.derivative + other.derivative,
                             self.second_derivative + other.second_derivative)

    def __sub__(self, other: "SolutionValue") -> "SolutionValue":
        return SolutionValue(self.value - other.value, self.derivative - other.derivative,
                             self.second_derivative - other.second_derivative)

# (parameter set, sign s of exp(s g z), carries the Delta/(E+g^2) constant)
BRANCH_LAYOUT = {
    (Branch.TYPE_I, Component.F1): (ParameterSet.A, -1, False),
    (Branch.TYPE_I, Component.F2): (ParameterSet.B, -1, True),
    (Branch.TYPE_II, Component.F1): (ParameterSet.B, 1, True),
    (Branch.TYPE_II, Component.F2): (ParameterSet.A, 1, False),
}

TYPE_I_F1 = BranchId(Branch.TYPE_I, Component.F1)
TYPE_I_F2 = BranchId(Branch.TYPE_I, Component.F2)
TYPE_II_F1 = BranchId(Branch.TYPE_II, Component.F1)
TYPE_II_F2 = BranchId(Branch.TYPE_II, Component.F2)

def _check_z(z: float, m: ModelParams):
    m.require_analytic()
    if not math.isfinite(z) or abs(z) > m.g:
        raise DomainError(f"Evaluation point z={z} outside [-g, g] = [{-m.g}, {m.g}]",
                          {"z": z, "g": m.g})

@lru_cache(maxsize=16384)
def _hc_cached(set_name: str, E: float, x: float, delta: float, g: float) -> HeunEval:
    return hc_eval(heun_params(ParameterSet(set_name), E, ModelParams(delta, g)), x)

def hc_at(parameter_set: ParameterSet, E: float, x: float, m: ModelParams) -> HeunEval:
    """Cached HC evaluation of one parameter set; results are immutable"""
    return _hc_cached(parameter_set.value, float(E), float(x), m.delta, m.g)

def _x(s: int, z: float, g: float) -> float:
    # x1 = (g - z)/2g for s = -1, x2 = (g + z)/2g for s = +1
    return (g + s * z) / (2.0 * g)

def eval_f_derivatives(branch_id: BranchId, E: float, z: float, m: ModelParams) -> SolutionValue:
    """Value and first two z-derivatives of one branch component"""
    _check_z(z, m)
    parameter_set, s, with_ratio = BRANCH_LAYOUT[(branch_id.branch, branch_id.component)]
    constant = ratio(E, m) if with_ratio else 1.0
    g = m.g
    hc = hc_at(parameter_set, E, _x(s, z, g), m)
    xp = s / (2.0 * g)
    factor = constant * math.exp(s * g * z)
    return SolutionValue(
        factor * hc.value,
        factor * (s * g * hc.value + xp * hc.derivative),
        factor * (g * g * hc.value + 2.0 * s * g * xp * hc.derivative + xp * xp * hc.second_derivative),
    )

def eval_f(branch_id: BranchId, E: float, z: float, m: ModelParams) -> float:
    return eval_f_derivatives(branch_id, E, z, m).value

def eval_symmetric_pair(kind: SolutionKind, E: float, z: float,
                        m: ModelParams) -> Tuple[SolutionValue, SolutionValue]:
    """(f1, f2) of a solution family with derivatives"""
    kind = SolutionKind(kind)
    if kind is SolutionKind.ASYM1:
        return (eval_f_derivatives(TYPE_I_F1, E, z, m), eval_f_derivatives(TYPE_I_F2, E, z, m))
    if kind is SolutionKind.ASYM2:
        return (eval_f_derivatives(TYPE_II_F1, E, z, m), eval_f_derivatives(TYPE_II_F2, E, z, m))

    i1 = eval_f_derivatives(TYPE_I_F1, E, z, m)
    i2 = eval_f_derivatives(TYPE_I_F2, E, z, m)
    ii1 = eval_f_derivatives(TYPE_II_F1, E, z, m)
    ii2 = eval_f_derivatives(TYPE_II_F2, E, z, m)
    if kind is SolutionKind.SYMMETRIC:
        return (i1 + ii1, i2 + ii2)
    return (i1 - ii1, i2 - ii2)

def coupled_residual(kind: SolutionKind, E: float, z: float, m: ModelParams) -> Tuple[float, float]:
    """Residuals of the two coupled first-order equations, multiplied through by (z +- g)"""
    f1, f2 = eval_symmetric_pair(kind, E, z, m)
    g, delta = m.g, m.delta
    r1 = (z + g) * f1.derivative - (E - g * z) * f1.value + delta * f2.value
    r2 = (z - g) * f2.derivative - (E + g * z) * f2.value + delta * f1.value
    return r1, r2

def _p(E: float, z: float, m: ModelParams) -> float:
    g = m.g
    return ((1.0 - 2.0 * E - 2.0 * g * g) * z - g) / (z * z - g * g)

def _q(E: float, z: float, m: ModelParams) -> float:
    g = m.g
    return (-g * g * z * z + g * z + E * E - g * g - m.delta ** 2) / (z * z - g * g)

def ode_terms(E: float, z: float, branch_id: BranchId, m: ModelParams) -> Tuple[float, float, float]:
    """The three terms f'', p f', q f of the second-order equation

    f2 components solve the mirrored equation f'' - p(-z) f' + q(-z) f = 0.
    """
    if abs(z) >= m.g:
        raise DomainError(f"Second-order equation is singular at z={z}", {"z": z, "g": m.g})
    f = eval_f_derivatives(branch_id, E, z, m)
    if branch_id.component is Component.F1:
        return f.second_derivative, _p(E, z, m) * f.derivative, _q(E, z, m) * f.value
    return f.second_derivative, -_p(E, -z, m) * f.derivative, _q(E, -z, m) * f.value

def ode_residual(E: float, z: float, branch_id: BranchId, m: ModelParams) -> float:
    return sum(ode_terms(E, z, branch_id, m))

def eval_F_all(E: float, z: float, m: ModelParams) -> Tuple[float, float, float, float]:
    """F1..F4 from one set of four series evaluations"""
    _check_z(z, m)
    g = m.g
    x1, x2 = _x(-1, z, g), _x(1, z, g)
    w = (g + z) / (2.0 * g)
    ha1 = hc_at(ParameterSet.A, E, x1, m)
    hb1 = hc_at(ParameterSet.B, E, x1, m)
    ha2 = hc_at(ParameterSet.A, E, x2, m)
    hb2 = hc_at(ParameterSet.B, E, x2, m)
    F1 = (E + g * g) * ha1.value + w * ha1.derivative
    F2 = hb1.value
    F3 = ha2.value
    F4 = (E - g * g - 2.0 * g * z) * hb2.value - w * hb2.derivative
    return F1, F2, F3, F4

def eval_F(k: int, E: float, z: float, m: ModelParams) -> float:
    if k not in (1, 2, 3, 4):
        raise ValidationError(f"F index must be 1..4, got {k}")
    g = m.g
    if k == 2:
        _check_z(z, m)
        return hc_at(ParameterSet.B, E, _x(-1, z, g), m).value
    if k == 3:
        _check_z(z, m)
        return hc_at(ParameterSet.A, E, _x(1, z, g), m).value
    return eval_F_all(E, z, m)[k - 1]

def _g_values(family: Family, F: Tuple[float, float, float, float], r: float,
              z: float, m: ModelParams) -> Tuple[float, float, float, float]:
    F1, F2, F3, F4 = F
    s = 1.0 if family is Family.PLUS else -1.0
    up, down = math.exp(2.0 * m.g * z), math.exp(-2.0 * m.g * z)
    return (
        F1 + s * r * up * F4,
        F3 + s * r * down * F2,
        F1 - s * m.delta * up * F3,
        F4 - s * m.delta * down * F2,
    )

def eval_G(family: Family, index: int, E: float, z: float, m: ModelParams) -> float:
    if index not in (1, 2, 3, 4):
        raise ValidationError(f"G index must be 1..4, got {index}")
    family = Family(family)
    F = eval_F_all(E, z, m)
    # G3 and G4 do not involve the ratio constant
    r = ratio(E, m) if index in (1, 2) else 0.0
    return _g_values(family, F, r, z, m)[index - 1]

def _k_forms(family: Family, F, G, r: float, z: float, m: ModelParams) -> Tuple[float, float, float]:
    s = 1.0 if family is Family.PLUS else -1.0
    em, ep = math.exp(-m.g * z), math.exp(m.g * z)
    terms = (em * G[0], s * m.delta * ep * G[1], em * G[2], s * r * ep * G[3])
    first = terms[0] - terms[1]
    second = terms[2] + terms[3]
    scale = max(1.0, abs(F[0]) + abs(F[3]), *(abs(t) for t in terms))
    return first, second, scale

def eval_K(family: Family, E: float, z: float, m: ModelParams) -> float:
    """K from its G1,G2 form, checked against its G3,G4 form

    Raises:
        ConsistencyError: the two forms differ by more than consistency_rtol * scale
    """
    family = Family(family)
    F = eval_F_all(E, z, m)
    r = ratio(E, m)
    G = _g_values(family, F, r, z, m)
    first, second, scale = _k_forms(family, F, G, r, z, m)
    _assert_k_forms(family, E, z, first, second, scale)
    return first

def _assert_k_forms(family: Family, E: float, z: float, first: float, second: float, scale: float):
    if abs(first - second) > MODEL_DEFAULTS["consistency_rtol"] * scale:
        raise ConsistencyError(
            f"K{family.value} forms disagree at E={E}, z={z}: {first:.6e} vs {second:.6e}",
            {"E": E, "z": z, "family": family.value, "scale": scale}
        )

def condition_values(E: float, z: float, m: ModelParams) -> Dict[str, float]:
    """All G and K values at one (E, z), keyed G1p..G4p, G1m..G4m, Kp, Km"""
    F = eval_F_all(E, z, m)
    r = ratio(E, m)
    values: Dict[str, float] = {}
    for family, suffix in ((Family.PLUS, "p"), (Family.MINUS, "m")):
        G = _g_values(family, F, r, z, m)
        for i, value in enumerate(G, start=1):
            values[f"G{i}{suffix}"] = value
        first, second, scale = _k_forms(family, F, G, r, z, m)
        _assert_k_forms(family, E, z, first, second, scale)
        values[f"K{suffix}"] = first
    return {key: values[key] for key in
            ("G1p", "G2p", "G3p", "G4p", "G1m", "G2m", "G3m", "G4m", "Kp", "Km")}

def wronskian(index: int, E: float, z: float, m: ModelParams, check_symmetry: bool = False) -> float:
    """W1 pairs the f1 components of both branches, W2 the f2 components

    With check_symmetry, W1(E, z) is compared against W2(E, -z).
    """
    if index == 1:
        a, b = eval_f_derivatives(TYPE_I_F1, E, z, m), eval_f_derivatives(TYPE_II_F1, E, z, m)
    elif index == 2:
        a, b = eval_f_derivatives(TYPE_I_F2, E, z, m), eval_f_derivatives(TYPE_II_F2, E, z, m)
    else:
        raise ValidationError(f"Wronskian index must be 1 or 2, got {index}")
    value = a.derivative * b.value - a.value * b.derivative

    if check_symmetry:
        mirror = wronskian(2 if index == 1 else 1, E, -z, m)
        if abs(value - mirror) > MODEL_DEFAULTS["symmetry_rtol"] * max(1.0, abs(value)):
            raise ConsistencyError(
                f"W{index}(E, z) and its mirror disagree at E={E}, z={z}",
                {"E": E, "z": z, "value": value, "mirror": mirror}
            )
    return value
