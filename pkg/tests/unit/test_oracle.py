#!/usr/bin/env python3
"""
Oracle Diagonalization Unit Tests

Test the truncated Hamiltonian, parity labelling, convergence counting and
the overlap helpers
"""

import math
import unittest

import numpy as np
from scipy.linalg import eigvalsh

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from tools.oracle import (
    build_hamiltonian, degenerate_subspace, diagonalize, eigenvector_state,
    overlap, parity_operator, spectrum_table, subspace_fidelity
)
from tools.rabi import FockState, ModelParams
from utils.error_handler import NonConvergence, ValidationError

GENERIC = ModelParams(0.7, 0.8)

class TestHamiltonian(unittest.TestCase):
    """Test matrix construction"""

    def test_symmetric(self):
        H = build_hamiltonian(GENERIC, 30)
        self.assertEqual(H.shape, (62, 62))
        self.assertTrue(np.array_equal(H, H.T))

    def test_commutes_with_parity(self):
        H = build_hamiltonian(GENERIC, 30)
        P = parity_operator(30)
        self.assertLess(np.max(np.abs(H @ P - P @ H)), 1e-12)

    def test_single_photon_truncation(self):
        """Test the 4x4 matrix at n_max = 1 block by block"""
        m = ModelParams(0.5, 0.1)
        H = build_hamiltonian(m, 1)
        np.testing.assert_allclose(np.diag(H), [0.5, -0.5, 1.5, 0.5])
        self.assertAlmostEqual(H[0, 3], 0.1)
        self.assertAlmostEqual(H[1, 2], 0.1)
        self.assertEqual(H[0, 1], 0.0)
        expected = sorted([0.4, 0.6, 0.5 - math.sqrt(1.01), 0.5 + math.sqrt(1.01)])
        np.testing.assert_allclose(eigvalsh(H), expected, atol=1e-12)

    def test_invalid_truncation(self):
        with self.assertRaises(ValidationError):
            build_hamiltonian(GENERIC, 0)

class TestDiagonalize(unittest.TestCase):
    """Test spectra, parities and convergence"""

    def test_decoupled_limit(self):
        """Test g = 0 gives n +- delta"""
        spectrum = diagonalize(ModelParams(0.3, 0.0, allow_zero=True), 40)
        expected = sorted(n + s * 0.3 for n in range(41) for s in (1, -1))[:10]
        np.testing.assert_allclose(spectrum.energies[:10], expected, atol=1e-10)

    def test_degenerate_limit(self):
        """Test delta = 0 gives doubly degenerate m - g^2 with both parities"""
        spectrum = diagonalize(ModelParams(0.0, 0.5, allow_zero=True), 40)
        np.testing.assert_allclose(spectrum.energies[:4], [-0.25, -0.25, 0.75, 0.75], atol=1e-8)
        self.assertEqual(sorted(spectrum.parities[:2].tolist()), [-1, 1])
        self.assertEqual(sorted(spectrum.parities[2:4].tolist()), [-1, 1])

    def test_exceptional_crossing(self):
        """Test the crossing at E = 1 - g^2 on the first exceptional curve"""
        spectrum = diagonalize(ModelParams(0.6, 0.4))
        near = np.flatnonzero(np.abs(spectrum.energies - 0.84) < 1e-8)
        self.assertEqual(len(near), 2)
        self.assertEqual(sorted(spectrum.parities[near].tolist()), [-1, 1])

    def test_ground_state_parity(self):
        spectrum = diagonalize(GENERIC)
        self.assertEqual(int(spectrum.parities[0]), -1)
        self.assertTrue(np.all(np.abs(spectrum.parity_expectations[:spectrum.converged_count]) > 0.99))

    def test_converged_window(self):
        """Test every level below 6 converges at the default truncation"""
        spectrum = diagonalize(GENERIC)
        self.assertGreater(spectrum.converged_count, 0)
        self.assertGreater(spectrum.converged_energies[-1], 6.0)
        sectors = len(spectrum.parity_sector(1)) + len(spectrum.parity_sector(-1))
        self.assertEqual(sectors, spectrum.converged_count)

    def test_variational_in_truncation(self):
        """Test enlarging the truncation never raises a converged level"""
        small = diagonalize(GENERIC, 20, min_converged=1)
        large = diagonalize(GENERIC, 40, min_converged=1)
        for k in range(small.converged_count):
            self.assertGreaterEqual(small.energies[k], large.energies[k] - 1e-12)

    def test_non_convergence(self):
        with self.assertRaises(NonConvergence):
            diagonalize(GENERIC, 2)

    def test_invalid_tolerance(self):
        with self.assertRaises(ValidationError):
            diagonalize(GENERIC, 10, tol=0.0)

    def test_nearest(self):
        spectrum = diagonalize(GENERIC)
        E1 = float(spectrum.energies[1])
        self.assertEqual(spectrum.nearest(E1 + 1e-9), 1)

    def test_table_rows(self):
        spectrum = diagonalize(GENERIC)
        rows = spectrum_table(spectrum)
        self.assertEqual(len(rows), spectrum.converged_count)
        self.assertEqual(set(rows[0]), {"index", "energy", "parity", "parity_expectation", "converged"})
        self.assertTrue(all(row["converged"] for row in rows))
        self.assertEqual(len(spectrum_table(spectrum, converged_only=False)), len(spectrum.energies))

class TestOverlaps(unittest.TestCase):
    """Test overlap and subspace fidelity"""

    def test_eigenvector_overlaps(self):
        spectrum = diagonalize(GENERIC)
        ground, excited = eigenvector_state(spectrum, 0), eigenvector_state(spectrum, 1)
        self.assertAlmostEqual(overlap(ground, ground), 1.0, places=12)
        self.assertAlmostEqual(overlap(ground, excited), 0.0, places=12)
        self.assertAlmostEqual(subspace_fidelity(ground, spectrum.vectors[:, [0]]), 1.0, places=12)

    def test_padding(self):
        """Test states of different truncation are zero-padded"""
        short = FockState([1.0], [0.0])
        long = FockState([1.0, 0.0, 0.0], [0.0, 0.0, 0.0])
        self.assertEqual(overlap(short, long), 1.0)

    def test_zero_state(self):
        with self.assertRaises(ValidationError):
            overlap(FockState([0.0], [0.0]), FockState([1.0], [0.0]))

    def test_degenerate_subspace(self):
        spectrum = diagonalize(ModelParams(0.6, 0.4))
        self.assertEqual(degenerate_subspace(spectrum, 0.84, 1e-7).shape[1], 2)
        self.assertEqual(degenerate_subspace(spectrum, 0.5, 1e-7).shape[1], 0)
        self.assertEqual(subspace_fidelity(FockState([1.0], [0.0]), np.zeros((162, 0))), 0.0)

if __name__ == '__main__':
    unittest.main()
