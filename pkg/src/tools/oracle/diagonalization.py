"""
Truncated Fock Space Diagonalization

Dense diagonalization of H = a^dagger a + delta sigma_z + g sigma_x (a^dagger + a)
in the basis |n>|s>, n = 0..n_max, stored at index 2n + s with s = 0 for
spin up. Parity labels come from the expectation of (-1)^n sigma_z.
"""

import math
from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.linalg import eigh, eigvalsh

from core.config import ORACLE_DEFAULTS
from tools.rabi.params import ModelParams
from tools.rabi.states import FockState
from utils.error_handler import NonConvergence, ValidationError
from utils.logging_config import PerformanceMonitor, get_logger

logger = get_logger("oracle")
performance_monitor = PerformanceMonitor(logger)

SIGMA_Z = np.diag([1.0, -1.0])
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])

@dataclass(frozen=True)
class OracleSpectrum:
    """Eigenpairs of the truncated Hamiltonian, ascending in energy"""
    energies: np.ndarray
    parities: np.ndarray
    parity_expectations: np.ndarray
    vectors: np.ndarray
    n_max: int
    converged_count: int

    @property
    def converged_energies(self) -> np.ndarray:
        return self.energies[:self.converged_count]

    def parity_sector(self, parity: int) -> np.ndarray:
        """Converged energies of one parity sector"""
        mask = self.parities[:self.converged_count] == parity
        return self.converged_energies[mask]

    def nearest(self, energy: float) -> int:
        """Index of the converged level closest to energy"""
        if self.converged_count == 0:
            raise ValidationError("Oracle spectrum has no converged levels")
        return int(np.argmin(np.abs(self.converged_energies - energy)))

def _check_n_max(n_max: int):
    if int(n_max) != n_max or n_max < 1:
        raise ValidationError(f"n_max must be an integer >= 1, got {n_max}")

def _ladder(n_max: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, n_max + 1, dtype=float)), k=1)

def build_hamiltonian(m: ModelParams, n_max: int = ORACLE_DEFAULTS["n_max"]) -> np.ndarray:
    """Real symmetric matrix of dimension 2(n_max + 1)"""
    _check_n_max(n_max)
    a = _ladder(n_max)
    photons = np.diag(np.arange(n_max + 1, dtype=float))
    eye_photons = np.eye(n_max + 1)
    H = (np.kron(photons, np.eye(2))
         + m.delta * np.kron(eye_photons, SIGMA_Z)
         + m.g * np.kron(a + a.T, SIGMA_X))
    # kron with a + a.T is symmetric up to summation order; force bitwise symmetry
    return np.triu(H) + np.triu(H, k=1).T

def parity_operator(n_max: int = ORACLE_DEFAULTS["n_max"]) -> np.ndarray:
    _check_n_max(n_max)
    photon_parity = np.diag((-1.0) ** np.arange(n_max + 1))
    return np.kron(photon_parity, SIGMA_Z)

def _degenerate_clusters(energies: np.ndarray, rtol: float) -> List[List[int]]:
    clusters: List[List[int]] = [[0]] if len(energies) else []
    for k in range(1, len(energies)):
        if energies[k] - energies[k - 1] <= rtol * max(1.0, abs(energies[k])):
            clusters[-1].append(k)
        else:
            clusters.append([k])
    return clusters

def _rotate_to_parity(vectors: np.ndarray, clusters: List[List[int]], parity_diag: np.ndarray) -> np.ndarray:
    """Diagonalize the parity operator inside each degenerate cluster"""
    rotated = vectors.copy()
    for cluster in clusters:
        if len(cluster) < 2:
            continue
        block = vectors[:, cluster]
        projected = block.T @ (parity_diag[:, None] * block)
        _, rotation = eigh(projected)
        rotated[:, cluster] = block @ rotation
        logger.debug(f"Rotated degenerate cluster {cluster} to parity eigenvectors")
    return rotated

def _converged_count(energies: np.ndarray, reference: np.ndarray, tol: float) -> int:
    count = 0
    for e, e_ref in zip(energies, reference):
        if abs(e - e_ref) >= tol:
            break
        count += 1
    return count

@performance_monitor("oracle_diagonalize")
def diagonalize(m: ModelParams,
                n_max: int = ORACLE_DEFAULTS["n_max"],
                tol: float = ORACLE_DEFAULTS["tol"],
                min_converged: int = ORACLE_DEFAULTS["min_converged"]) -> OracleSpectrum:
    """Diagonalize at n_max and count leading levels stable at 2 n_max

    Raises:
        NonConvergence: fewer than min_converged levels agree to tol
    """
    _check_n_max(n_max)
    if tol <= 0:
        raise ValidationError(f"tol must be > 0, got {tol}")

    energies, vectors = eigh(build_hamiltonian(m, n_max))
    parity_diag = np.diag(parity_operator(n_max)).copy()
    clusters = _degenerate_clusters(energies, ORACLE_DEFAULTS["degeneracy_rtol"])
    vectors = _rotate_to_parity(vectors, clusters, parity_diag)

    expectations = np.einsum("ik,ik,i->k", vectors, vectors, parity_diag)
    parities = np.where(expectations >= 0.0, 1, -1)

    reference = eigvalsh(build_hamiltonian(m, 2 * n_max))
    converged = _converged_count(energies, reference, tol)
    if converged < min_converged:
        raise NonConvergence(
            f"Only {converged} oracle levels converged at n_max={n_max} (need {min_converged})",
            {"n_max": n_max, "tol": tol, "converged": converged}
        )

    weak = np.abs(expectations[:converged]) <= ORACLE_DEFAULTS["parity_threshold"]
    if np.any(weak):
        logger.warning(f"{int(weak.sum())} converged oracle levels have weak parity expectation")

    logger.info(f"Oracle diagonalized: dimension {len(energies)}, {converged} converged levels",
                extra={"n_max": n_max, "converged": converged})
    return OracleSpectrum(energies, parities, expectations, vectors, n_max, converged)

def eigenvector_state(spectrum: OracleSpectrum, k: int) -> FockState:
    return FockState.from_vector(spectrum.vectors[:, k])

def degenerate_subspace(spectrum: OracleSpectrum, energy: float, tol: float = 1e-7) -> np.ndarray:
    """Columns of the eigenvectors whose energies lie within tol of energy"""
    indices = np.flatnonzero(np.abs(spectrum.energies - energy) < tol)
    return spectrum.vectors[:, indices]

def _common_vectors(a: FockState, b: FockState):
    n_max = max(a.n_max, b.n_max)
    return a.padded(n_max).as_vector(), b.padded(n_max).as_vector()

def overlap(a: FockState, b: FockState) -> float:
    """|<a|b>| of the normalized states, shorter one zero-padded"""
    va, vb = _common_vectors(a, b)
    na, nb = np.linalg.norm(va), np.linalg.norm(vb)
    if na == 0.0 or nb == 0.0:
        raise ValidationError("Overlap of a zero state is undefined")
    return float(min(1.0, abs(np.dot(va, vb)) / (na * nb)))

def subspace_fidelity(state: FockState, vectors: np.ndarray) -> float:
    """Norm of the projection of the normalized state onto orthonormal columns"""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    if vectors.shape[1] == 0:
        return 0.0
    dimension = vectors.shape[0]
    psi = state.normalized().as_vector()
    if len(psi) < dimension:
        psi = np.pad(psi, (0, dimension - len(psi)))
    elif len(psi) > dimension:
        vectors = np.pad(vectors, ((0, len(psi) - dimension), (0, 0)))
    projections = vectors.T @ psi
    return float(min(1.0, math.sqrt(float(np.dot(projections, projections)))))

def spectrum_table(spectrum: OracleSpectrum, converged_only: bool = True) -> List[dict]:
    """Rows (index, energy, parity, parity_expectation, converged)"""
    count = spectrum.converged_count if converged_only else len(spectrum.energies)
    return [
        {
            "index": k,
            "energy": float(spectrum.energies[k]),
            "parity": int(spectrum.parities[k]),
            "parity_expectation": float(spectrum.parity_expectations[k]),
            "converged": k < spectrum.converged_count,
        }
        for k in range(count)
    ]
