#!/usr/bin/env python3
"""
Spectrum Integration Tests

Test the assembled analytic spectrum against the truncated Fock space
diagonalization, including the exceptional crossing on the first curve
"""

import unittest

import numpy as np

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from tools.oracle import diagonalize
from tools.rabi import Family, ModelParams, eval_G
from tools.spectrum import (
    Classification, ConditionSource, Parity, SpectrumOptions,
    compare_with_oracle, compute_spectrum, labelling_oracle, scan_roots, unmatched_oracle_levels
)
from utils.error_handler import ErrorCategory, NonConvergence, OracleUnavailable, ValidationError

GENERIC = ModelParams(0.7, 0.8)
JUDD = ModelParams(0.6, 0.4)

class TestGenericSpectrum(unittest.TestCase):
    """Regular spectrum away from the exceptional curves"""

    @classmethod
    def setUpClass(cls):
        cls.window = (-1.0, 4.0)
        cls.result = compute_spectrum(GENERIC, cls.window)
        cls.oracle = diagonalize(GENERIC)

    def test_matches_oracle(self):
        levels = [E for E in self.oracle.converged_energies if self.window[0] <= E <= self.window[1]]
        self.assertEqual(len(self.result.records), len(levels))
        np.testing.assert_allclose(self.result.energies, levels, atol=1e-6)

    def test_no_exceptional_records(self):
        self.assertEqual(self.result.exceptional(), [])
        self.assertEqual(unmatched_oracle_levels(self.result, self.oracle), [])

    def test_parity_labels(self):
        for record in self.result.regular():
            self.assertIn(record.parity, (Parity.PLUS, Parity.MINUS))
            self.assertIsNotNone(record.oracle_energy)

    def test_settings(self):
        settings = self.result.settings
        for key in ("z_values", "step", "eps_pole", "sources", "skipped_windows", "roots_per_source"):
            self.assertIn(key, settings)
        self.assertEqual(settings["z_values"], [0.0, 0.375 * 0.8])

    def test_overlaps(self):
        rows = compare_with_oracle(compute_spectrum(GENERIC, (-1.0, 3.0)), self.oracle)
        self.assertTrue(rows)
        for row in rows:
            self.assertLessEqual(row["abs_error"], 1e-6)
            self.assertGreaterEqual(row["overlap"], 0.999, f"E={row['energy']}")

class TestConditionAgreement(unittest.TestCase):
    """Different condition functions describe the same spectrum"""

    def test_g_sources_against_wronskian(self):
        window = (-1.0, 4.0)
        g_sources = [ConditionSource.G12PLUS, ConditionSource.G34PLUS,
                     ConditionSource.G12MINUS, ConditionSource.G34MINUS]
        by_g = compute_spectrum(GENERIC, window, SpectrumOptions(
            sources=g_sources, use_oracle=False, include_judd=False))
        by_w = compute_spectrum(GENERIC, window, SpectrumOptions(
            sources=[ConditionSource.W1], use_oracle=False, include_judd=False))
        self.assertEqual(len(by_g.energies), len(by_w.energies))
        np.testing.assert_allclose(by_g.energies, by_w.energies, atol=1e-7)

    def test_g_pairs_share_roots(self):
        """Test both members of each G pair vanish together in both families"""
        window = (-1.0, 3.0)
        for family in (Family.PLUS, Family.MINUS):
            for pair in ((1, 2), (3, 4)):
                for z in (0.0, 0.3):
                    with self.subTest(family=family.name, pair=pair, z=z):
                        roots = []
                        for index in pair:
                            cond = lambda E, z, family=family, index=index: eval_G(family, index, E, z, GENERIC)
                            roots.append(scan_roots(cond, window, z, m=GENERIC))
                        self.assertTrue(roots[0])
                        self.assertEqual(len(roots[0]), len(roots[1]))
                        np.testing.assert_allclose(roots[0], roots[1], atol=1e-7)

    def test_half_step_finds_same_roots(self):
        window = (-1.0, 2.0)
        coarse = compute_spectrum(GENERIC, window, SpectrumOptions(use_oracle=False))
        fine = compute_spectrum(GENERIC, window, SpectrumOptions(step=0.005, use_oracle=False))
        np.testing.assert_allclose(coarse.energies, fine.energies, atol=1e-8)

class TestOracleDowngrade(unittest.TestCase):
    """Spectrum without a converged diagonalization"""

    def test_labelling_oracle_raises_unavailable(self):
        with self.assertRaises(OracleUnavailable) as context:
            labelling_oracle(GENERIC, 2)
        self.assertIsInstance(context.exception.__cause__, NonConvergence)
        self.assertEqual(context.exception.category, ErrorCategory.CONVERGENCE)
        self.assertEqual(context.exception.details["n_max"], 2)

    def test_unconverged_oracle_leaves_parity_unset(self):
        window = (-1.0, 2.0)
        with self.assertLogs("rabi-heun.spectrum", level="WARNING") as captured:
            result = compute_spectrum(GENERIC, window, SpectrumOptions(oracle_n_max=2))
        self.assertTrue(any("Oracle unavailable" in line for line in captured.output))

        reference = compute_spectrum(GENERIC, window, SpectrumOptions(use_oracle=False))
        self.assertTrue(result.records)
        np.testing.assert_allclose(result.energies, reference.energies, atol=1e-10)
        for record in result.records:
            self.assertEqual(record.parity, Parity.NONE)
            self.assertEqual(record.classification, Classification.REGULAR)
            self.assertIsNone(record.oracle_energy)

class TestExceptionalSpectrum(unittest.TestCase):
    """Level crossing on the first exceptional curve"""

    def test_judd_point(self):
        result = compute_spectrum(JUDD, (0.0, 2.0))
        exceptional = result.exceptional()
        self.assertEqual(len(exceptional), 1)
        record = exceptional[0]
        self.assertAlmostEqual(record.energy, 0.84, places=12)
        self.assertEqual(record.classification, Classification.EXCEPTIONAL)
        self.assertEqual(record.multiplicity, 2)
        self.assertEqual(record.crossing_parities, [Parity.MINUS, Parity.PLUS])
        self.assertFalse(any(abs(r.energy - 0.84) < 1e-4 for r in result.regular()))

    def test_exceptional_overlap(self):
        result = compute_spectrum(JUDD, (0.5, 1.2))
        rows = compare_with_oracle(result, diagonalize(JUDD))
        judd_rows = [r for r in rows if r["classification"] == "exceptional"]
        self.assertEqual(len(judd_rows), 1)
        self.assertGreaterEqual(judd_rows[0]["overlap"], 0.999)

class TestEdgeCases(unittest.TestCase):
    """Windows and evaluation points"""

    def test_empty_window(self):
        result = compute_spectrum(GENERIC, (-3.0, -2.0))
        self.assertEqual(result.records, [])

    def test_single_z_rejected(self):
        with self.assertRaises(ValidationError):
            compute_spectrum(GENERIC, (-1.0, 1.0), SpectrumOptions(z_values=[0.0]))

    def test_z_outside_domain(self):
        with self.assertRaises(ValidationError):
            compute_spectrum(GENERIC, (-1.0, 1.0), SpectrumOptions(z_values=[0.0, 0.8]))

if __name__ == '__main__':
    unittest.main()
