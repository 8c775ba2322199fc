#!/usr/bin/env python3
"""
Rabi Heun Spectrum Core Functionality Unit Tests

Test configuration defaults and parameter validators
"""

import unittest
import sys
from pathlib import Path

# Add src directory to path
sys.path.insert(0, str(Path(__file__).parent.parent.parent / "src"))

from core.config import (
    EXIT_CODES, HEUN_DEFAULTS, ORACLE_DEFAULTS, SCAN_DEFAULTS, STATE_DEFAULTS, get_config_summary
)
from utils.validators import (
    validate_energy_window, validate_model_params, validate_tolerance,
    validate_truncation_order, validate_z_samples
)

class TestConfig(unittest.TestCase):
    """Configuration defaults"""

    def test_defaults(self):
        self.assertEqual(HEUN_DEFAULTS["tol"], 1e-12)
        self.assertEqual(HEUN_DEFAULTS["n_max"], 500)
        self.assertEqual(SCAN_DEFAULTS["e_step"], 0.01)
        self.assertEqual(SCAN_DEFAULTS["eps_pole"], 1e-4)
        self.assertEqual(ORACLE_DEFAULTS["n_max"], 80)
        self.assertEqual(STATE_DEFAULTS["tail_tol"], 1e-10)

    def test_exit_codes(self):
        self.assertEqual(EXIT_CODES, {"success": 0, "usage": 2, "numerical_domain": 3, "convergence": 4})

    def test_summary(self):
        summary = get_config_summary()
        for key in ("package", "platform", "heun", "model", "scan", "judd", "oracle", "state", "output"):
            self.assertIn(key, summary)
        self.assertEqual(summary["output"]["formats"], ["csv", "json"])

    def test_summary_is_a_copy(self):
        get_config_summary()["scan"]["e_step"] = 1.0
        self.assertEqual(SCAN_DEFAULTS["e_step"], 0.01)

class TestValidators(unittest.TestCase):
    """Parameter validators"""

    def test_model_params(self):
        self.assertEqual(validate_model_params(0.7, 0.8), (True, ""))
        self.assertFalse(validate_model_params(0.0, 0.8)[0])
        self.assertTrue(validate_model_params(0.0, 0.8, allow_zero=True)[0])
        self.assertFalse(validate_model_params(-0.1, 0.8, allow_zero=True)[0])
        self.assertFalse(validate_model_params("0.7", 0.8)[0])
        self.assertFalse(validate_model_params(True, 0.8)[0])
        self.assertFalse(validate_model_params(float("inf"), 0.8)[0])

    def test_energy_window(self):
        self.assertTrue(validate_energy_window(-1.0, 6.0, 0.01)[0])
        self.assertFalse(validate_energy_window(1.0, 1.0)[0])
        self.assertFalse(validate_energy_window(0.0, 1.0, 0.0)[0])
        self.assertFalse(validate_energy_window(float("nan"), 1.0)[0])

    def test_z_samples(self):
        self.assertTrue(validate_z_samples([0.0, 0.3], 0.8)[0])
        self.assertFalse(validate_z_samples([], 0.8)[0])
        is_valid, message = validate_z_samples([0.0, 0.8], 0.8)
        self.assertFalse(is_valid)
        self.assertIn("inside", message)

    def test_tolerance_and_order(self):
        self.assertTrue(validate_tolerance(1e-10)[0])
        self.assertFalse(validate_tolerance(0.0)[0])
        self.assertTrue(validate_truncation_order(1, minimum=1)[0])
        self.assertFalse(validate_truncation_order(0, minimum=1)[0])
        self.assertFalse(validate_truncation_order(2.0)[0])

if __name__ == '__main__':
    unittest.main()
