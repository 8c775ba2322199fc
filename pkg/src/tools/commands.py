"""
Commands

Validated run configuration and the command functions shared by the command
line and the tool server. Each command returns a CommandOutput table.
"""

import math
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from core.config import (
    HEUN_DEFAULTS,
    JUDD_DEFAULTS,
    ORACLE_DEFAULTS,
    SCAN_DEFAULTS,
    STATE_DEFAULTS,
    get_config_summary,
)
from tools.heun import HeunParams, hc_eval
from tools.judd import constraint_value, solve_judd_delta
from tools.oracle import diagonalize, spectrum_table
from tools.rabi import ModelParams, ParameterSet, condition_values, heun_params, wronskian
from tools.reporting import CommandOutput, make_frame
from tools.spectrum import (
    SpectrumOptions,
    compare_with_oracle,
    compute_spectrum,
    default_z_values,
    pole_baselines,
    unmatched_oracle_levels,
)
from utils.error_handler import RabiHeunError
from utils.logging_config import get_logger
from utils.validators import (
    validate_energy_window,
    validate_model_params,
    validate_tolerance,
    validate_truncation_order,
    validate_z_samples,
)

logger = get_logger("commands")

class Command(Enum):
    HC = "hc"
    CONDITIONS = "conditions"
    SPECTRUM = "spectrum"
    JUDD = "judd"
    WRONSKIAN = "wronskian"
    ORACLE = "oracle"
    COMPARE = "compare"

class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"

DEFAULT_X_VALUES = [round(0.1 * k, 1) for k in range(10)]

# Commands evaluating the analytic solutions need z samples inside (-g, g)
_Z_COMMANDS = {Command.CONDITIONS, Command.SPECTRUM, Command.WRONSKIAN, Command.COMPARE}
_MODEL_COMMANDS = _Z_COMMANDS | {Command.ORACLE}

def _require(is_valid: bool, message: str):
    if not is_valid:
        raise ValueError(message)

class RunConfig(BaseModel):
    """One command invocation; invalid combinations fail validation"""
    model_config = ConfigDict(frozen=True)

    command: Command
    delta: Optional[float] = None
    g: Optional[float] = None
    e_min: float = SCAN_DEFAULTS["e_min"]
    e_max: float = SCAN_DEFAULTS["e_max"]
    e_step: float = SCAN_DEFAULTS["e_step"]
    z_list: Optional[List[float]] = None
    n_max: Optional[int] = None
    tol: Optional[float] = None
    format: OutputFormat = OutputFormat.CSV
    output: Optional[str] = None
    header: bool = True
    x_values: Optional[List[float]] = None
    heun_set: Optional[ParameterSet] = None
    energy: Optional[float] = None
    heun: Optional[List[float]] = None
    n1: int = 1
    g_min: Optional[float] = None
    g_max: Optional[float] = None
    g_step: Optional[float] = None

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        if self.tol is not None:
            _require(*validate_tolerance(self.tol))
        if self.n_max is not None:
            _require(*validate_truncation_order(self.n_max, minimum=1))

        if self.command in _MODEL_COMMANDS:
            _require(self.delta is not None and self.g is not None,
                     f"{self.command.value} requires --delta and --g")
            allow_zero = self.command is Command.ORACLE
            _require(*validate_model_params(self.delta, self.g, allow_zero=allow_zero))
            _require(*validate_energy_window(self.e_min, self.e_max, self.e_step))
        if self.command in _Z_COMMANDS and self.z_list is not None:
            _require(len(self.z_list) > 0, "--z needs at least one value")
            _require(*validate_z_samples(self.z_list, self.g))

        if self.command is Command.HC:
            self._check_hc()
        if self.command is Command.JUDD:
            self._check_judd()
        return self

    def _check_hc(self):
        if self.heun is not None:
            _require(len(self.heun) == 5, "--heun takes five values alpha,beta,gamma,delta,eta")
            _require(all(math.isfinite(v) for v in self.heun), "--heun values must be finite")
        else:
            _require(self.heun_set is not None and self.energy is not None
                     and self.delta is not None and self.g is not None,
                     "hc requires --heun or --set, --energy, --delta and --g")
            _require(*validate_model_params(self.delta, self.g))
            _require(math.isfinite(self.energy), "--energy must be finite")
        for x in self.x_values or []:
            _require(math.isfinite(x) and abs(x) < 1.0, f"x values must satisfy |x| < 1, got {x}")

    def _check_judd(self):
        _require(*validate_truncation_order(self.n1, minimum=1, name="N1"))
        if self.g is not None:
            _require(math.isfinite(self.g) and self.g > 0, f"g must be > 0, got {self.g}")
            return
        _require(None not in (self.g_min, self.g_max, self.g_step),
                 "judd requires --g or --gmin, --gmax and --gstep")
        _require(0 < self.g_min <= self.g_max, "g range must satisfy 0 < gmin <= gmax")
        _require(self.g_step > 0, "--gstep must be > 0")

    def model(self) -> ModelParams:
        return ModelParams(self.delta, self.g, allow_zero=self.command is Command.ORACLE)

    def z_values(self) -> List[float]:
        if self.z_list is not None:
            return list(self.z_list)
        return default_z_values(self.model())

    def parameters(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude={"command", "format", "output", "header"},
                               exclude_none=True)

def energy_grid(e_min: float, e_max: float, step: float) -> np.ndarray:
    count = max(1, int(math.ceil((e_max - e_min) / step - 1e-9)))
    return np.linspace(e_min, e_max, count + 1)

def _judd_baseline(E: float, m: ModelParams, eps_pole: float) -> Tuple[Optional[float], bool]:
    """(baseline, on a Judd curve) when E lies inside an exclusion window"""
    for baseline in pole_baselines((E, E), m, eps_pole):
        if abs(E - baseline) <= eps_pole:
            N1 = int(round(baseline + m.g2))
            on_curve = N1 >= 1 and abs(constraint_value(N1, m)) < JUDD_DEFAULTS["residual_tol"]
            return baseline, on_curve
    return None, False

def _grid_rows(config: RunConfig, columns: List[str],
               evaluate: Callable[[float, float, ModelParams], Dict[str, float]]) -> List[Dict[str, Any]]:
    m = config.model()
    eps_pole = SCAN_DEFAULTS["eps_pole"]
    rows: List[Dict[str, Any]] = []
    for z in config.z_values():
        previous: Dict[str, float] = {}
        for E in energy_grid(config.e_min, config.e_max, config.e_step):
            E = float(E)
            row: Dict[str, Any] = {"z": z, "E": E, "note": "", "sign_changes": ""}
            baseline, on_curve = _judd_baseline(E, m, eps_pole)
            if baseline is not None and not on_curve:
                row["note"] = "pole_window"
                rows.append(row)
                continue
            if on_curve:
                E = row["E"] = baseline
                row["note"] = "judd"
            try:
                values = evaluate(E, z, m)
            except RabiHeunError as e:
                row["note"] = type(e).__name__
                rows.append(row)
                continue
            row.update(values)
            changed = [c for c in columns if c in previous and previous[c] * values[c] < 0.0]
            row["sign_changes"] = ";".join(changed)
            previous = values
            rows.append(row)
    return rows

def cmd_hc(config: RunConfig) -> CommandOutput:
    """HC value and derivatives on an x grid"""
    if config.heun is not None:
        params = HeunParams(*config.heun)
    else:
        params = heun_params(config.heun_set, config.energy, ModelParams(config.delta, config.g))
    tol = config.tol or HEUN_DEFAULTS["tol"]
    n_max = config.n_max or HEUN_DEFAULTS["n_max"]

    rows = []
    for x in config.x_values or DEFAULT_X_VALUES:
        result = hc_eval(params, x, tol=tol, n_max=n_max)
        rows.append({
            "x": x,
            "value": result.value,
            "derivative": result.derivative,
            "second_derivative": result.second_derivative,
            "n_terms": result.n_terms,
            "converged": result.converged,
            "tail_bound": result.tail_bound,
        })
    columns = ["x", "value", "derivative", "second_derivative", "n_terms", "converged", "tail_bound"]
    return CommandOutput("hc", config.parameters(), make_frame(rows, columns),
                         {"heun_params": list(params.as_tuple()), "mu": params.mu, "nu": params.nu})

G_COLUMNS = ["G1p", "G2p", "G3p", "G4p", "G1m", "G2m", "G3m", "G4m"]
# K vanishes identically, so only G columns carry sign annotations
CONDITION_COLUMNS = G_COLUMNS + ["Kp", "Km"]

def cmd_conditions(config: RunConfig) -> CommandOutput:
    """G and K functions over the energy grid, per z"""
    rows = _grid_rows(config, G_COLUMNS, condition_values)
    columns = ["z", "E"] + CONDITION_COLUMNS + ["note", "sign_changes"]
    return CommandOutput("conditions", config.parameters(), make_frame(rows, columns))

def _wronskian_values(E: float, z: float, m: ModelParams) -> Dict[str, float]:
    return {"W1": wronskian(1, E, z, m), "W2": wronskian(2, E, z, m)}

def cmd_wronskian(config: RunConfig) -> CommandOutput:
    """W1 and W2 over the energy grid, per z"""
    rows = _grid_rows(config, ["W1"], _wronskian_values)
    columns = ["z", "E", "W1", "W2", "note", "sign_changes"]
    return CommandOutput("wronskian", config.parameters(), make_frame(rows, columns))

RECORD_COLUMNS = ["energy", "source", "sources", "z_values", "parity", "classification",
                  "multiplicity", "constraint_residual", "crossing_parities", "oracle_energy"]

def _spectrum_options(config: RunConfig) -> SpectrumOptions:
    return SpectrumOptions(
        z_values=config.z_values(),
        step=config.e_step,
        refine_tol=config.tol or SCAN_DEFAULTS["refine_tol"],
        oracle_n_max=config.n_max or ORACLE_DEFAULTS["n_max"],
    )

def cmd_spectrum(config: RunConfig) -> CommandOutput:
    """Eigenvalue records in the energy window"""
    result = compute_spectrum(config.model(), (config.e_min, config.e_max), _spectrum_options(config))
    rows = [record.to_dict() for record in result.records]
    return CommandOutput("spectrum", config.parameters(), make_frame(rows, RECORD_COLUMNS),
                         {"settings": result.settings})

def _g_grid(config: RunConfig) -> List[float]:
    if config.g is not None:
        return [config.g]
    count = int(math.floor((config.g_max - config.g_min) / config.g_step + 1e-9))
    return [float(g) for g in config.g_min + config.g_step * np.arange(count + 1)]

def cmd_judd(config: RunConfig) -> CommandOutput:
    """Exceptional delta values along a coupling grid"""
    N1 = config.n1
    rows = []
    for g in _g_grid(config):
        deltas = solve_judd_delta(N1, g)
        if not deltas:
            rows.append({"g": g, "N1": N1, "delta": None, "energy": N1 - g * g,
                         "constraint_residual": None, "note": "no_root"})
        for delta in deltas:
            residual = constraint_value(N1, ModelParams(delta, g))
            rows.append({"g": g, "N1": N1, "delta": delta, "energy": N1 - g * g,
                         "constraint_residual": residual, "note": ""})
    columns = ["g", "N1", "delta", "energy", "constraint_residual", "note"]
    return CommandOutput("judd", config.parameters(), make_frame(rows, columns),
                         {"delta2_max": JUDD_DEFAULTS["delta2_max"]})

def cmd_oracle(config: RunConfig) -> CommandOutput:
    """Converged oracle levels inside the energy window"""
    spectrum = diagonalize(config.model(), config.n_max or ORACLE_DEFAULTS["n_max"],
                           config.tol or ORACLE_DEFAULTS["tol"])
    rows = [row for row in spectrum_table(spectrum) if config.e_min <= row["energy"] <= config.e_max]
    columns = ["index", "energy", "parity", "parity_expectation", "converged"]
    return CommandOutput("oracle", config.parameters(), make_frame(rows, columns),
                         {"n_max": spectrum.n_max, "converged_count": spectrum.converged_count})

def cmd_compare(config: RunConfig) -> CommandOutput:
    """Analytic records against oracle levels, with state overlaps"""
    m = config.model()
    result = compute_spectrum(m, (config.e_min, config.e_max), _spectrum_options(config))
    oracle = diagonalize(m, config.n_max or ORACLE_DEFAULTS["n_max"])
    rows = compare_with_oracle(result, oracle, n_max=STATE_DEFAULTS["n_max"])
    errors = [r["abs_error"] for r in rows if r["abs_error"] is not None]
    overlaps = [r["overlap"] for r in rows if r["overlap"] is not None]
    columns = ["energy", "classification", "multiplicity", "parity", "oracle_energy",
               "abs_error", "oracle_parity", "overlap"]
    metadata = {
        "max_abs_error": max(errors) if errors else None,
        "min_overlap": min(overlaps) if overlaps else None,
        "unmatched_oracle_levels": unmatched_oracle_levels(result, oracle),
    }
    return CommandOutput("compare", config.parameters(), make_frame(rows, columns), metadata)

COMMANDS: Dict[Command, Callable[[RunConfig], CommandOutput]] = {
    Command.HC: cmd_hc,
    Command.CONDITIONS: cmd_conditions,
    Command.SPECTRUM: cmd_spectrum,
    Command.JUDD: cmd_judd,
    Command.WRONSKIAN: cmd_wronskian,
    Command.ORACLE: cmd_oracle,
    Command.COMPARE: cmd_compare,
}

def run_command(config: RunConfig) -> CommandOutput:
    logger.info(f"Running {config.command.value}", extra={"context": {"parameters": config.parameters()}})
    output = COMMANDS[config.command](config)
    output.metadata.setdefault("config", {"scan": get_config_summary()["scan"]})
    return output
