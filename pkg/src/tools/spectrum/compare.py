"""
Oracle Comparison

Pairs analytic eigenvalues with oracle levels and measures how well the
analytic states reproduce the oracle eigenvectors.
"""

from typing import Any, Dict, List, Optional

from core.config import SCAN_DEFAULTS, STATE_DEFAULTS
from tools.judd.exceptional import judd_state
from tools.oracle.diagonalization import OracleSpectrum, degenerate_subspace, subspace_fidelity
from tools.rabi.params import ModelParams
from tools.rabi.solutions import SolutionKind
from tools.rabi.states import FockState, state_coefficients
from tools.spectrum.assemble import Classification, Parity, RootRecord, SpectrumResult
from utils.error_handler import DomainError, RabiHeunError
from utils.logging_config import get_logger

logger = get_logger("spectrum.compare")

def regular_state(E: float, m: ModelParams, n_max: int = STATE_DEFAULTS["n_max"]) -> FockState:
    """The parity combination that does not vanish at an eigenvalue"""
    try:
        return state_coefficients(SolutionKind.SYMMETRIC, E, m, n_max)
    except DomainError:
        return state_coefficients(SolutionKind.ANTISYMMETRIC, E, m, n_max)

def _record_state(record: RootRecord, E: float, m: ModelParams, n_max: int) -> FockState:
    if record.classification is Classification.EXCEPTIONAL:
        N1 = int(round(record.energy + m.g2))
        return judd_state(N1, m, n_max).asym1
    return regular_state(E, m, n_max)

def compare_with_oracle(result: SpectrumResult, oracle: OracleSpectrum,
                        label_tol: float = SCAN_DEFAULTS["label_tol"],
                        degeneracy_tol: float = 1e-7,
                        n_max: int = STATE_DEFAULTS["n_max"]) -> List[Dict[str, Any]]:
    """One row per record: oracle partner, energy error, parity and state overlap

    States are expanded at the oracle energy. Records without a converged
    oracle level within label_tol get empty partner columns.
    """
    m = result.params
    converged = oracle.converged_energies
    rows: List[Dict[str, Any]] = []

    for record in result.records:
        row: Dict[str, Any] = {
            "energy": record.energy,
            "classification": record.classification.value,
            "multiplicity": record.multiplicity,
            "parity": record.parity.value,
            "oracle_energy": None,
            "abs_error": None,
            "oracle_parity": None,
            "overlap": None,
        }
        if len(converged):
            k = oracle.nearest(record.energy)
            E_oracle = float(converged[k])
            if abs(E_oracle - record.energy) <= label_tol:
                row["oracle_energy"] = E_oracle
                row["abs_error"] = abs(E_oracle - record.energy)
                row["oracle_parity"] = Parity.from_sign(int(oracle.parities[k])).value
                row["overlap"] = _overlap(record, E_oracle, m, oracle, degeneracy_tol, n_max)
        rows.append(row)
    return rows

def _overlap(record: RootRecord, E_oracle: float, m: ModelParams, oracle: OracleSpectrum,
             degeneracy_tol: float, n_max: int) -> Optional[float]:
    try:
        state = _record_state(record, E_oracle, m, n_max)
    except RabiHeunError as e:
        logger.warning(f"No analytic state at E={record.energy:.12g}: {e}")
        return None
    return subspace_fidelity(state, degenerate_subspace(oracle, E_oracle, degeneracy_tol))

def unmatched_oracle_levels(result: SpectrumResult, oracle: OracleSpectrum,
                            label_tol: float = SCAN_DEFAULTS["label_tol"]) -> List[float]:
    """Converged oracle energies inside the window that no record accounts for"""
    e_min, e_max = result.e_window
    missing: List[float] = []
    for E in oracle.converged_energies:
        if not e_min <= E <= e_max:
            continue
        if not any(abs(E - record.energy) <= label_tol for record in result.records):
            missing.append(float(E))
    return missing
