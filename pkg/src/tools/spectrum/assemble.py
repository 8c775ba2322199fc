"""
Spectrum Assembly

Runs the condition scans over every (source, z) pair, keeps roots confirmed
at all evaluation points, merges the sources, adds the exceptional points
that lie on a constraint curve and labels parity from the oracle.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.config import JUDD_DEFAULTS, MODEL_DEFAULTS, ORACLE_DEFAULTS, SCAN_DEFAULTS
from tools.judd.exceptional import constraint_value
from tools.oracle.diagonalization import OracleSpectrum, diagonalize
from tools.rabi.params import ModelParams
from tools.spectrum.scan import (
    DEFAULT_SOURCES,
    SOURCE_ORDER,
    ConditionSource,
    condition_function,
    cross_validate,
    pole_windows,
    scan_roots,
)
from utils.error_handler import NonConvergence, OracleUnavailable, ValidationError
from utils.logging_config import PerformanceMonitor, get_logger
from utils.validators import validate_energy_window, validate_z_samples

logger = get_logger("spectrum")
performance_monitor = PerformanceMonitor(logger)

class Parity(Enum):
    PLUS = "plus"
    MINUS = "minus"
    NONE = "none"

    @classmethod
    def from_sign(cls, sign: int) -> "Parity":
        return cls.PLUS if sign > 0 else cls.MINUS

class Classification(Enum):
    REGULAR = "regular"
    EXCEPTIONAL = "exceptional"

@dataclass
class RootRecord:
    energy: float
    source: ConditionSource
    z_values: List[float]
    parity: Parity = Parity.NONE
    classification: Classification = Classification.REGULAR
    multiplicity: int = 1
    sources: List[ConditionSource] = field(default_factory=list)
    constraint_residual: Optional[float] = None
    crossing_parities: List[Parity] = field(default_factory=list)
    oracle_energy: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "energy": self.energy,
            "source": self.source.value,
            "sources": ";".join(s.value for s in self.sources),
            "z_values": ";".join(repr(float(z)) for z in self.z_values),
            "parity": self.parity.value,
            "classification": self.classification.value,
            "multiplicity": self.multiplicity,
            "constraint_residual": self.constraint_residual,
            "crossing_parities": ";".join(p.value for p in self.crossing_parities),
            "oracle_energy": self.oracle_energy,
        }

@dataclass
class SpectrumResult:
    records: List[RootRecord]
    params: ModelParams
    e_window: Tuple[float, float]
    settings: Dict[str, Any]

    @property
    def energies(self) -> List[float]:
        return [r.energy for r in self.records]

    def regular(self) -> List[RootRecord]:
        return [r for r in self.records if r.classification is Classification.REGULAR]

    def exceptional(self) -> List[RootRecord]:
        return [r for r in self.records if r.classification is Classification.EXCEPTIONAL]

@dataclass
class SpectrumOptions:
    """Scan configuration; z_values default to (0, z_fraction * g)"""
    z_values: Optional[Sequence[float]] = None
    step: float = SCAN_DEFAULTS["e_step"]
    eps_pole: float = SCAN_DEFAULTS["eps_pole"]
    refine_tol: float = SCAN_DEFAULTS["refine_tol"]
    merge_tol: float = SCAN_DEFAULTS["merge_tol"]
    cross_tol: float = SCAN_DEFAULTS["cross_tol"]
    label_tol: float = SCAN_DEFAULTS["label_tol"]
    sources: Sequence[ConditionSource] = DEFAULT_SOURCES
    include_judd: bool = True
    use_oracle: bool = True
    oracle_n_max: int = ORACLE_DEFAULTS["n_max"]
    max_workers: int = SCAN_DEFAULTS["max_workers"]

    def resolved_z(self, m: ModelParams) -> List[float]:
        if self.z_values is None:
            return [0.0, MODEL_DEFAULTS["z_fraction"] * m.g]
        return [float(z) for z in self.z_values]

def default_z_values(m: ModelParams) -> List[float]:
    return SpectrumOptions().resolved_z(m)

def _scan_all(z_values: List[float], m: ModelParams,
              e_window: Tuple[float, float], options: SpectrumOptions) -> Dict[Tuple[ConditionSource, float], List[float]]:
    tasks = [(source, z) for source in options.sources for z in z_values]
    results: Dict[Tuple[ConditionSource, float], List[float]] = {}

    def run(task: Tuple[ConditionSource, float]) -> List[float]:
        task_source, z = task
        cond = condition_function(task_source, m)
        return scan_roots(cond, e_window, z, options.step, m, options.eps_pole, options.refine_tol)

    with ThreadPoolExecutor(max_workers=max(1, options.max_workers)) as executor:
        for task, roots in zip(tasks, executor.map(run, tasks)):
            results[task] = roots
    return results

def _merge(roots: List[Tuple[float, ConditionSource]], merge_tol: float) -> List[List[Tuple[float, ConditionSource]]]:
    rank = {source: k for k, source in enumerate(SOURCE_ORDER)}
    ordered = sorted(roots, key=lambda item: (item[0], rank[item[1]]))
    groups: List[List[Tuple[float, ConditionSource]]] = []
    for item in ordered:
        if groups and item[0] - groups[-1][-1][0] <= merge_tol:
            groups[-1].append(item)
        else:
            groups.append([item])
    for group in groups:
        group.sort(key=lambda item: rank[item[1]])
    return groups

def _judd_records(m: ModelParams, e_window: Tuple[float, float], z_values: List[float]) -> List[RootRecord]:
    records: List[RootRecord] = []
    first = max(1, math.ceil(e_window[0] + m.g2))
    last = math.floor(e_window[1] + m.g2)
    for N1 in range(first, last + 1):
        energy = N1 - m.g2
        if not e_window[0] <= energy <= e_window[1]:
            continue
        residual = constraint_value(N1, m)
        if abs(residual) < JUDD_DEFAULTS["residual_tol"]:
            logger.info(f"Exceptional point N1={N1} at E={energy:.12g}")
            records.append(RootRecord(
                energy=energy,
                source=ConditionSource.JUDD,
                z_values=list(z_values),
                classification=Classification.EXCEPTIONAL,
                multiplicity=2,
                sources=[ConditionSource.JUDD],
                constraint_residual=residual,
            ))
    return records

def labelling_oracle(m: ModelParams, n_max: int = ORACLE_DEFAULTS["n_max"]) -> OracleSpectrum:
    """Diagonalization used for parity labels

    Raises:
        OracleUnavailable: the truncation does not converge any level
    """
    try:
        return diagonalize(m, n_max)
    except NonConvergence as e:
        raise OracleUnavailable(f"Diagonalization at n_max={n_max} unusable: {e.message}",
                                {"n_max": n_max, **e.details}) from e

def _oracle(m: ModelParams, options: SpectrumOptions) -> Optional[OracleSpectrum]:
    if not options.use_oracle:
        return None
    try:
        return labelling_oracle(m, options.oracle_n_max)
    except OracleUnavailable as e:
        logger.warning(f"Oracle unavailable, parity labels omitted: {e}")
        return None

def _label(records: List[RootRecord], oracle: Optional[OracleSpectrum], label_tol: float):
    if oracle is None:
        return
    converged = oracle.converged_energies
    for record in records:
        near = [k for k in range(len(converged)) if abs(converged[k] - record.energy) <= label_tol]
        if not near:
            logger.warning(f"No oracle level within {label_tol:g} of E={record.energy:.12g}")
            continue
        nearest = min(near, key=lambda k: abs(converged[k] - record.energy))
        record.oracle_energy = float(converged[nearest])
        if record.classification is Classification.EXCEPTIONAL:
            record.crossing_parities = sorted({Parity.from_sign(int(oracle.parities[k])) for k in near},
                                              key=lambda p: p.value)
        else:
            record.parity = Parity.from_sign(int(oracle.parities[nearest]))

def _validate(m: ModelParams, e_window: Tuple[float, float], z_values: List[float]):
    m.require_analytic()
    for is_valid, message in (validate_energy_window(*e_window), validate_z_samples(z_values, m.g)):
        if not is_valid:
            raise ValidationError(message)
    if len(set(z_values)) < 2:
        raise ValidationError("The spectrum needs two or more distinct z values")

@performance_monitor("compute_spectrum")
def compute_spectrum(m: ModelParams,
                     e_window: Tuple[float, float] = (SCAN_DEFAULTS["e_min"], SCAN_DEFAULTS["e_max"]),
                     options: Optional[SpectrumOptions] = None) -> SpectrumResult:
    """Regular roots of every scan source plus exceptional points, labelled by parity

    Raises:
        ValidationError: invalid window, z values or model parameters
    """
    options = options or SpectrumOptions()
    e_window = (float(e_window[0]), float(e_window[1]))
    z_values = sorted(set(options.resolved_z(m)))
    _validate(m, e_window, z_values)

    scanned = _scan_all(z_values, m, e_window, options)

    validated: List[Tuple[float, ConditionSource]] = []
    per_source: Dict[str, int] = {}
    for source in options.sources:
        survivors = cross_validate({z: scanned[(source, z)] for z in z_values}, options.cross_tol)
        per_source[source.value] = len(survivors)
        validated.extend((E, source) for E in survivors)

    records: List[RootRecord] = []
    for group in _merge(validated, options.merge_tol):
        energy, source = group[0]
        records.append(RootRecord(
            energy=energy,
            source=source,
            z_values=list(z_values),
            sources=[s for _, s in group],
        ))

    if options.include_judd:
        records.extend(_judd_records(m, e_window, z_values))
    records.sort(key=lambda r: r.energy)

    _label(records, _oracle(m, options), options.label_tol)

    settings = {
        "z_values": z_values,
        "step": options.step,
        "eps_pole": options.eps_pole,
        "refine_tol": options.refine_tol,
        "merge_tol": options.merge_tol,
        "cross_tol": options.cross_tol,
        "label_tol": options.label_tol,
        "sources": [s.value for s in options.sources],
        "oracle_n_max": options.oracle_n_max if options.use_oracle else None,
        "skipped_windows": [list(w) for w in pole_windows(e_window, m, options.eps_pole)],
        "roots_per_source": per_source,
    }
    logger.info(f"Spectrum assembled: {len(records)} records in [{e_window[0]}, {e_window[1]}]",
                extra={"records": len(records)})
    return SpectrumResult(records, m, e_window, settings)
