#!/usr/bin/env python3
"""
Analytic Solution Unit Tests

Test branch values, reflection identities, the differential equations and
the condition functions at known points
"""

import math
import unittest

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from tools.rabi import (
    BranchId, Family, ModelParams, SolutionKind,
    TYPE_I_F1, TYPE_I_F2, TYPE_II_F1, TYPE_II_F2,
    condition_values, coupled_residual, eval_F, eval_G, eval_K, eval_f,
    eval_symmetric_pair, ode_residual, ode_terms, wronskian
)
from utils.error_handler import DomainError, ValidationError

JUDD = ModelParams(0.6, 0.4)
JUDD_E = 1.0 - JUDD.g2
GENERIC = ModelParams(0.7, 0.8)

class TestBranchValues(unittest.TestCase):
    """Test closed-form values on the first exceptional curve"""

    def test_type_i_components(self):
        self.assertAlmostEqual(eval_f(TYPE_I_F1, JUDD_E, 0.0, JUDD), 0.68, places=12)
        self.assertAlmostEqual(eval_f(TYPE_I_F2, JUDD_E, 0.0, JUDD), 0.6, places=12)

    def test_polynomial_form(self):
        """Test f1 = exp(-g z)(1 - 2 g^2 + 2 g z) along z"""
        g = JUDD.g
        for z in (-0.3, -0.1, 0.2, 0.35):
            expected = math.exp(-g * z) * (1.0 - 2 * g * g + 2 * g * z)
            self.assertAlmostEqual(eval_f(TYPE_I_F1, JUDD_E, z, JUDD), expected, places=12)

    def test_reflection(self):
        """Test Type-II components mirror Type-I components"""
        for E in (JUDD_E, 0.31):
            for z in (-0.25, 0.0, 0.3):
                self.assertAlmostEqual(eval_f(TYPE_II_F2, E, z, JUDD), eval_f(TYPE_I_F1, E, -z, JUDD), places=14)
                self.assertAlmostEqual(eval_f(TYPE_II_F1, E, z, JUDD), eval_f(TYPE_I_F2, E, -z, JUDD), places=14)

    def test_symmetric_pair_reflection(self):
        """Test f1(z) = +-f2(-z) for the symmetric and antisymmetric pairs"""
        for kind, sign in ((SolutionKind.SYMMETRIC, 1.0), (SolutionKind.ANTISYMMETRIC, -1.0)):
            for z in (-0.5, 0.1, 0.6):
                f1, _ = eval_symmetric_pair(kind, 0.5, z, GENERIC)
                _, f2 = eval_symmetric_pair(kind, 0.5, -z, GENERIC)
                self.assertAlmostEqual(f1.value, sign * f2.value, delta=1e-12 * max(1.0, abs(f1.value)))

    def test_domain(self):
        """Test z outside [-g, g] raises DomainError"""
        with self.assertRaises(DomainError):
            eval_f(TYPE_I_F1, 0.5, 0.9, GENERIC)
        with self.assertRaises(DomainError):
            eval_f(TYPE_I_F1, 0.5, float("nan"), GENERIC)

    def test_branch_id_parse(self):
        self.assertEqual(BranchId.parse("TypeI/f1"), TYPE_I_F1)
        self.assertEqual(BranchId.parse("TypeII/f2"), TYPE_II_F2)
        for text in ("TypeIII/f1", "TypeI", "TypeI/f3"):
            with self.assertRaises(ValidationError):
                BranchId.parse(text)

class TestDifferentialEquations(unittest.TestCase):
    """Test the branches solve the model equations"""

    def test_second_order_equation(self):
        """Test every component solves its second-order equation"""
        for branch_id in (TYPE_I_F1, TYPE_I_F2, TYPE_II_F1, TYPE_II_F2):
            for E in (-0.4, 0.5, 1.0, 2.2):
                for z in (-0.3, -0.15, 0.0, 0.15, 0.3):
                    scale = max(1.0, *(abs(t) for t in ode_terms(E, z, branch_id, GENERIC)))
                    residual = ode_residual(E, z, branch_id, GENERIC)
                    self.assertLess(abs(residual), 1e-8 * scale, f"{branch_id} E={E} z={z}")

    def test_second_order_equation_polynomial(self):
        """Test the exceptional polynomial solution"""
        for branch_id in (TYPE_I_F1, TYPE_I_F2):
            self.assertLess(abs(ode_residual(JUDD_E, 0.2, branch_id, JUDD)), 1e-10, str(branch_id))

    def test_singular_points(self):
        with self.assertRaises(DomainError):
            ode_residual(0.5, GENERIC.g, TYPE_I_F1, GENERIC)
        with self.assertRaises(DomainError):
            ode_residual(0.5, -GENERIC.g, TYPE_II_F2, GENERIC)

    def test_coupled_equations(self):
        """Test every solution family solves the coupled first-order system"""
        for kind in SolutionKind:
            for E in (-0.4, 0.5, 2.2):
                for z in (-0.3, 0.0, 0.3):
                    f1, f2 = eval_symmetric_pair(kind, E, z, GENERIC)
                    scale = max(1.0, abs(f1.value), abs(f1.derivative), abs(f2.value), abs(f2.derivative))
                    r1, r2 = coupled_residual(kind, E, z, GENERIC)
                    self.assertLess(abs(r1), 1e-9 * scale, f"{kind} E={E} z={z}")
                    self.assertLess(abs(r2), 1e-9 * scale, f"{kind} E={E} z={z}")

class TestConditionFunctions(unittest.TestCase):
    """Test F, G, K and the Wronskians"""

    def test_f_values(self):
        self.assertAlmostEqual(eval_F(1, JUDD_E, 0.0, JUDD), 0.36, places=12)
        self.assertAlmostEqual(eval_F(2, JUDD_E, JUDD.g, JUDD), 1.0, places=14)
        with self.assertRaises(ValidationError):
            eval_F(5, JUDD_E, 0.0, JUDD)

    def test_g_values(self):
        self.assertAlmostEqual(eval_G(Family.PLUS, 1, JUDD_E, 0.0, JUDD), 0.768, places=12)
        self.assertAlmostEqual(eval_G(Family.MINUS, 3, JUDD_E, 0.0, JUDD), 0.768, places=12)
        with self.assertRaises(ValidationError):
            eval_G(Family.PLUS, 0, JUDD_E, 0.0, JUDD)

    def test_k_vanishes_on_exceptional_curve(self):
        """Test K vanishes while G stays finite at the exceptional energy"""
        for z in (-0.3, 0.0, 0.3):
            for family in Family:
                self.assertLess(abs(eval_K(family, JUDD_E, z, JUDD)), 1e-9)
            largest = max(abs(eval_G(Family.PLUS, 1, JUDD_E, z, JUDD)),
                          abs(eval_G(Family.PLUS, 3, JUDD_E, z, JUDD)))
            self.assertGreaterEqual(largest, 0.01)

    def test_condition_values_keys(self):
        values = condition_values(0.5, 0.2, GENERIC)
        self.assertEqual(list(values), ["G1p", "G2p", "G3p", "G4p", "G1m", "G2m", "G3m", "G4m", "Kp", "Km"])
        self.assertAlmostEqual(values["G1p"], eval_G(Family.PLUS, 1, 0.5, 0.2, GENERIC), places=14)

    def test_wronskian_on_exceptional_curve(self):
        """Test W1 = 4 delta g^2 (g - z) for the polynomial solution"""
        self.assertAlmostEqual(wronskian(1, JUDD_E, 0.0, JUDD), 0.1536, places=12)
        for z in (-0.2, 0.1, 0.2):
            expected = 4 * JUDD.delta * JUDD.g2 * (JUDD.g - z)
            self.assertAlmostEqual(wronskian(1, JUDD_E, z, JUDD), expected, places=10)

    def test_wronskian_mirror_symmetry(self):
        """Test W1(E, -z) = W2(E, z) over a grid"""
        for E in (-0.9, -0.2, 0.5, 1.1, 2.9):
            for z in (-0.6, -0.2, 0.0, 0.35, 0.6):
                w1 = wronskian(1, E, -z, GENERIC)
                w2 = wronskian(2, E, z, GENERIC)
                self.assertAlmostEqual(w1, w2, delta=1e-12 * max(1.0, abs(w1)))
        # the built-in check passes as well
        wronskian(1, 0.5, 0.3, GENERIC, check_symmetry=True)

    def test_wronskian_index(self):
        with self.assertRaises(ValidationError):
            wronskian(3, 0.5, 0.0, GENERIC)

if __name__ == '__main__':
    unittest.main()
