#!/usr/bin/env python3
"""
Model Parameter Unit Tests

Test model validation and the mapping onto Heun parameter sets
"""

import unittest

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from tools.rabi import ModelParams, ParameterSet, heun_params, heun_params_by_index, ratio
from utils.error_handler import RatioPole, ValidationError

class TestModelParams(unittest.TestCase):
    """Test model parameter validation"""

    def test_positive_parameters(self):
        m = ModelParams(0.7, 0.8)
        self.assertEqual(m.delta, 0.7)
        self.assertAlmostEqual(m.g2, 0.64, places=15)

    def test_invalid_parameters(self):
        """Test zero, negative and non-finite values"""
        for delta, g in ((0.0, 0.5), (0.5, 0.0), (-0.1, 0.5), (float("nan"), 0.5), (0.5, float("inf"))):
            with self.assertRaises(ValidationError):
                ModelParams(delta, g)

    def test_zero_allowed_for_diagonalization(self):
        """Test allow_zero admits the decoupled limits but not the analytic solutions"""
        m = ModelParams(0.0, 0.5, allow_zero=True)
        with self.assertRaises(ValidationError):
            m.require_analytic()
        with self.assertRaises(ValidationError):
            ModelParams(-0.1, 0.5, allow_zero=True)

class TestHeunParameterSets(unittest.TestCase):
    """Test the two parameter sets and the derived sets 3 and 4"""

    def test_set_a_values(self):
        p = heun_params(ParameterSet.A, 0.0, ModelParams(0.0, 1.0, allow_zero=True))
        self.assertEqual(p.as_tuple(), (4.0, -2.0, -1.0, -2.0, -0.5))

    def test_set_b_values(self):
        p = heun_params(ParameterSet.B, 0.0, ModelParams(0.0, 1.0, allow_zero=True))
        self.assertEqual(p.as_tuple(), (4.0, -1.0, -2.0, 2.0, -2.5))

    def test_eta_difference(self):
        """Test eta_B - eta_A = -2 g^2 at any energy"""
        m = ModelParams(0.7, 0.8)
        for E in (-0.5, 0.3, 2.7):
            a, b = heun_params(ParameterSet.A, E, m), heun_params(ParameterSet.B, E, m)
            self.assertAlmostEqual(b.eta - a.eta, -2.0 * m.g2, places=12)

    def test_derived_sets_coincide(self):
        """Test set 3 reproduces set B and set 4 reproduces set A"""
        m = ModelParams(0.7, 0.8)
        for E in (-0.5, 0.3, 2.7):
            for derived, base in ((3, 2), (4, 1)):
                p, q = heun_params_by_index(derived, E, m), heun_params_by_index(base, E, m)
                for u, v in zip(p.as_tuple(), q.as_tuple()):
                    self.assertAlmostEqual(u, v, places=12)

    def test_invalid_index(self):
        with self.assertRaises(ValidationError):
            heun_params_by_index(5, 0.0, ModelParams(0.7, 0.8))

class TestRatio(unittest.TestCase):
    """Test the solution constant Delta / (E + g^2)"""

    def test_value(self):
        self.assertAlmostEqual(ratio(0.84, ModelParams(0.6, 0.4)), 0.6, places=14)

    def test_pole(self):
        m = ModelParams(0.7, 0.8)
        with self.assertRaises(RatioPole):
            ratio(-m.g2, m)

if __name__ == '__main__':
    unittest.main()
