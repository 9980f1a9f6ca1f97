import unittest
from fractions import Fraction
from __init__ import SimpleGroupSpec, CentralizerEstimate
from simple_groups import (order_of_simple, centralizer_formula, exceeds, threshold_class, threshold_claims,
                           check_claim, M11_ORDER)
from exceptions import InvalidGroupSpec, UnsupportedFamily, NonIntegerFormulaValue


class TestSimpleGroups(unittest.TestCase):
    def runTest(self):
        self.test_specs()
        self.test_invalid_specs()
        self.test_orders()
        self.test_centralizer_formulas()
        self.test_non_integer_formula()
        self.test_thresholds()
        self.test_claims()

    def test_specs(self):
        self.assertEqual(str(SimpleGroupSpec("PSp", 2, 3)), "PSp(4,3)")
        self.assertEqual(str(SimpleGroupSpec("POmega_eps", 4, 2, 1)), "POmega+(8,2)")
        self.assertEqual(str(SimpleGroupSpec("POmega_eps", 4, 2, -1)), "POmega-(8,2)")
        self.assertEqual(str(SimpleGroupSpec("Omega_odd", 3, 3)), "Omega(7,3)")
        self.assertEqual(str(SimpleGroupSpec("TwoF4", q=8)), "2F4(8)")
        self.assertEqual(str(SimpleGroupSpec("Alt", 7)), "Alt(7)")
        self.assertEqual(str(SimpleGroupSpec("M11")), "M11")
        spec = SimpleGroupSpec("PSU", 4, 9)
        self.assertEqual((spec.p, spec.f), (3, 2))
        self.assertEqual(spec.to_json(), {"family": "PSU", "n": 4, "q": 9})
        self.assertEqual(spec, SimpleGroupSpec("PSU", 4, 9))
        self.assertEqual(len({spec, SimpleGroupSpec("PSU", 4, 9)}), 1)

    def test_invalid_specs(self):
        for family, n, q in (("PSL", 2, 2), ("PSL", 2, 3), ("PSU", 3, 2), ("PSp", 2, 2), ("G2", None, 2),
                             ("Sz", None, 4), ("Sz", None, 2), ("Alt", 4, None), ("PSL", 3, 6),
                             ("Omega_odd", 3, 4), ("POmega_eps", 3, 2)):
            with self.subTest(family=family, n=n, q=q):
                with self.assertRaises(InvalidGroupSpec):
                    SimpleGroupSpec(family, n, q)
        with self.assertRaises(InvalidGroupSpec):
            SimpleGroupSpec("POmega_eps", 4, 2, 0)
        with self.assertRaises(UnsupportedFamily):
            SimpleGroupSpec("M12")

    def test_orders(self):
        expected = [
            (SimpleGroupSpec("Alt", 5), 60),
            (SimpleGroupSpec("PSL", 2, 4), 60),
            (SimpleGroupSpec("PSL", 3, 2), 168),
            (SimpleGroupSpec("PSU", 4, 2), 25920),
            (SimpleGroupSpec("PSp", 2, 3), 25920),
            (SimpleGroupSpec("PSU", 6, 2), 9196830720),
            (SimpleGroupSpec("POmega_eps", 4, 2, 1), 174182400),
            (SimpleGroupSpec("Sz", q=8), 29120),
            (SimpleGroupSpec("G2", q=3), 4245696),
            (SimpleGroupSpec("M11"), M11_ORDER),
        ]
        for spec, order in expected:
            with self.subTest(group=str(spec)):
                self.assertEqual(order_of_simple(spec), order)

    def test_centralizer_formulas(self):
        expected = [
            (SimpleGroupSpec("Alt", 5), 3),
            (SimpleGroupSpec("Alt", 6), 9),
            (SimpleGroupSpec("Alt", 7), 36),
            (SimpleGroupSpec("Alt", 8), 180),
            (SimpleGroupSpec("PSL", 3, 2), 8),
            (SimpleGroupSpec("PSL", 3, 3), 54),
            (SimpleGroupSpec("PSp", 2, 3), 648),
            (SimpleGroupSpec("Sz", q=8), 64),
            (SimpleGroupSpec("M11"), 48),
        ]
        for spec, value in expected:
            with self.subTest(group=str(spec)):
                estimate = centralizer_formula(spec)
                self.assertEqual(estimate.value, value)
                self.assertTrue(estimate.exact)
        estimate = centralizer_formula(SimpleGroupSpec("E8", q=2))
        self.assertFalse(estimate.exact)
        self.assertEqual(estimate.to_json()["value"], str(estimate.value))

    def test_non_integer_formula(self):
        with self.assertRaises(NonIntegerFormulaValue) as context:
            centralizer_formula(SimpleGroupSpec("PSL", 2, 5))
        self.assertEqual(context.exception.details["value"], "5/2")

    def test_thresholds(self):
        self.assertFalse(exceeds(9, 81, Fraction(1, 2)))
        self.assertTrue(exceeds(9, 81, Fraction(1, 2), strict=False))
        self.assertTrue(threshold_class(SimpleGroupSpec("Alt", 16), Fraction(3, 4)))
        self.assertFalse(threshold_class(SimpleGroupSpec("Alt", 15), Fraction(3, 4)))
        self.assertTrue(threshold_class(SimpleGroupSpec("PSp", 2, 3), Fraction(1, 2)))
        self.assertFalse(threshold_class(48, Fraction(1, 2), M11_ORDER))
        self.assertTrue(threshold_class(48, Fraction(1, 4), M11_ORDER))
        self.assertTrue(threshold_class(CentralizerEstimate("given", 10, False), Fraction(1, 2), 99))
        self.assertFalse(threshold_class(CentralizerEstimate("given", 9, False), Fraction(1, 2), 99))

    def test_claims(self):
        claims = threshold_claims()
        self.assertEqual({claim.family for claim in claims},
                         {"Alt", "PSL", "PSU", "PSp", "Omega_odd", "POmega_eps", "Sz", "G2", "TwoF4", "E8", "M11"})
        for claim in claims:
            with self.subTest(claim=str(claim)):
                self.assertGreater(len(claim.grid), 0)
                result = check_claim(claim)
                self.assertTrue(result["passed"], result["failures"])
