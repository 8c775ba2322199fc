#!/usr/bin/env python3
"""
Fock State Unit Tests

Test the photon-number expansion of the analytic solutions
"""

import math
import unittest

import numpy as np

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from tools.oracle import diagonalize, subspace_fidelity
from tools.rabi import FockState, ModelParams, SolutionKind, fock_amplitudes, pair_power_coefficients, state_coefficients
from utils.error_handler import DomainError, TruncationError, ValidationError

JUDD = ModelParams(0.6, 0.4)
JUDD_E = 1.0 - JUDD.g2
GENERIC = ModelParams(0.7, 0.8)

class TestFockState(unittest.TestCase):
    """Test the state container"""

    def test_vector_layout(self):
        """Test the interleaved index 2n + spin with spin up first"""
        state = FockState([1.0, 2.0], [3.0, 4.0])
        np.testing.assert_array_equal(state.as_vector(), [1.0, 3.0, 2.0, 4.0])
        back = FockState.from_vector(state.as_vector())
        np.testing.assert_array_equal(back.up, state.up)
        np.testing.assert_array_equal(back.down, state.down)

    def test_norm_and_padding(self):
        state = FockState([3.0, 0.0], [0.0, 4.0])
        self.assertEqual(state.norm(), 5.0)
        self.assertAlmostEqual(state.normalized().norm(), 1.0, places=15)
        self.assertEqual(state.padded(4).n_max, 4)
        self.assertIs(state.padded(1), state)

    def test_invalid_shapes(self):
        with self.assertRaises(ValidationError):
            FockState([1.0, 2.0], [1.0])
        with self.assertRaises(DomainError):
            FockState([0.0], [0.0]).normalized()

class TestAmplitudes(unittest.TestCase):
    """Test power coefficients to photon amplitudes"""

    def test_sqrt_factorial(self):
        np.testing.assert_allclose(fock_amplitudes([0.0, 1.0, 0.0]), [0.0, 1.0, 0.0])
        np.testing.assert_allclose(fock_amplitudes([0.0, 0.0, 1.0]), [0.0, 0.0, math.sqrt(2.0)])
        np.testing.assert_allclose(fock_amplitudes([1.0, 1.0, 1.0, 1.0]), [1.0, 1.0, math.sqrt(2.0), math.sqrt(6.0)])

    def test_exceptional_power_coefficients(self):
        """Test the leading coefficients of the polynomial pair"""
        g, delta = JUDD.g, JUDD.delta
        f1, f2 = pair_power_coefficients(SolutionKind.ASYM1, JUDD_E, JUDD, n_max=10)
        self.assertAlmostEqual(f1[0], 1.0 - 2 * g * g, places=12)
        self.assertAlmostEqual(f1[1], g * (1.0 + 2 * g * g), places=12)
        self.assertAlmostEqual(f2[0], delta, places=12)
        self.assertAlmostEqual(f2[1], -g * delta, places=12)

    def test_exceptional_state_spin_components(self):
        """Test (f1 + f2)/2 and (f1 - f2)/2 before normalization"""
        g, delta = JUDD.g, JUDD.delta
        state = state_coefficients(SolutionKind.ASYM1, JUDD_E, JUDD)
        up0 = (1.0 - 2 * g * g + delta) / 2.0
        up1 = (g * (1.0 + 2 * g * g) - g * delta) / 2.0
        self.assertAlmostEqual(state.up[1] / state.up[0], up1 / up0, places=10)
        self.assertAlmostEqual(state.norm(), 1.0, places=12)

class TestStateCoefficients(unittest.TestCase):
    """Test truncation, normalization and parity combinations"""

    def test_regular_eigenstate(self):
        """Test exactly one parity combination survives at an eigenvalue"""
        oracle = diagonalize(GENERIC)
        for k in range(3):
            E = float(oracle.energies[k])
            surviving = []
            for kind in (SolutionKind.SYMMETRIC, SolutionKind.ANTISYMMETRIC):
                try:
                    surviving.append(state_coefficients(kind, E, GENERIC))
                except DomainError:
                    pass
            self.assertEqual(len(surviving), 1, f"level {k}")
            fidelity = subspace_fidelity(surviving[0], oracle.vectors[:, [k]])
            self.assertGreaterEqual(fidelity, 0.999, f"level {k}")

    def test_generic_energy_does_not_truncate(self):
        """Test a single branch away from an eigenvalue has no decaying expansion"""
        with self.assertRaises(TruncationError):
            state_coefficients(SolutionKind.ASYM1, 0.5, GENERIC)

    def test_minimum_truncation(self):
        with self.assertRaises(ValidationError):
            state_coefficients(SolutionKind.ASYM1, JUDD_E, JUDD, n_max=0)

    def test_requires_analytic_parameters(self):
        with self.assertRaises(ValidationError):
            state_coefficients(SolutionKind.SYMMETRIC, 0.5, ModelParams(0.0, 0.5, allow_zero=True))

if __name__ == '__main__':
    unittest.main()
