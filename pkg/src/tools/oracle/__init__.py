"""
Independent truncated Fock space diagonalization
"""

from .diagonalization import (
    OracleSpectrum,
    build_hamiltonian,
    parity_operator,
    diagonalize,
    eigenvector_state,
    degenerate_subspace,
    overlap,
    subspace_fidelity,
    spectrum_table,
)

__all__ = [
    'OracleSpectrum',
    'build_hamiltonian',
    'parity_operator',
    'diagonalize',
    'eigenvector_state',
    'degenerate_subspace',
    'overlap',
    'subspace_fidelity',
    'spectrum_table',
]
