import unittest
from unittest.mock import patch
from __init__ import SimpleGroupSpec, CentralizerEstimate, Permutation
import centralizer_oracles
from centralizer_oracles import (alternating_group, psl_group, psp4_group, mathieu11, permutation_representation,
                                 centralizer_orders, brute_max_centralizer, formula_vs_brute, witness_predicate)
from exceptions import UnsupportedFamily, NonIntegerFormulaValue, FormulaMismatch


class TestCentralizerOracles(unittest.TestCase):
    def runTest(self):
        self.test_representations()
        self.test_class_equation()
        self.test_brute_force_maxima()
        self.test_formula_agrees()
        self.test_non_integer_formula()
        self.test_mathieu()
        self.test_symplectic()
        self.test_witness_classes()
        self.test_wrong_formula_rejected()

    def test_representations(self):
        self.assertEqual(alternating_group(6).order(), 360)
        self.assertEqual(psl_group(2, 4).order(), 60)
        self.assertEqual(psl_group(3, 2).order(), 168)
        self.assertEqual(psl_group(2, 9).domain_size, 10)
        self.assertEqual(permutation_representation(SimpleGroupSpec("PSL", 2, 7)).order(), 168)
        with self.assertRaises(UnsupportedFamily):
            permutation_representation(SimpleGroupSpec("Sz", q=8))

    def test_class_equation(self):
        G = alternating_group(5)
        classes = centralizer_orders(G, verify=True)
        self.assertEqual(sum(G.order() // size for _, size in classes), 60)
        self.assertEqual(sorted(size for _, size in classes), [3, 4, 5, 5, 60])

    def test_brute_force_maxima(self):
        expected = [(psl_group(2, 4), 5), (psl_group(2, 5), 5), (psl_group(2, 7), 8), (psl_group(2, 8), 9),
                    (psl_group(2, 9), 9), (psl_group(2, 11), 12), (alternating_group(5), 5)]
        for G, size in expected:
            with self.subTest(order=G.order(), degree=G.domain_size):
                value, witness = brute_max_centralizer(G)
                self.assertEqual(value, size)
                self.assertFalse(witness.is_identity())

    def test_formula_agrees(self):
        for spec, brute in ((SimpleGroupSpec("Alt", 6), 9), (SimpleGroupSpec("Alt", 7), 36),
                            (SimpleGroupSpec("PSL", 3, 2), 8), (SimpleGroupSpec("PSL", 2, 4), 5)):
            with self.subTest(group=str(spec)):
                result = formula_vs_brute(spec)
                self.assertEqual(result["brute_max"], brute)
                self.assertIn(int(result["formula"]["value"]), result["centralizers"])

    def test_non_integer_formula(self):
        with self.assertRaises(NonIntegerFormulaValue) as context:
            formula_vs_brute(SimpleGroupSpec("PSL", 2, 5))
        self.assertEqual(context.exception.details["brute"], 5)

    def test_mathieu(self):
        M = mathieu11()
        self.assertEqual(M.order(), 7920)
        self.assertEqual(brute_max_centralizer(M)[0], 48)

    def test_symplectic(self):
        G = psp4_group(3)
        self.assertEqual(G.order(), 25920)
        self.assertEqual(formula_vs_brute(SimpleGroupSpec("PSp", 2, 3))["brute_max"], 648)

    def test_witness_classes(self):
        for spec in (SimpleGroupSpec("Alt", 6), SimpleGroupSpec("Alt", 7), SimpleGroupSpec("PSL", 3, 2),
                     SimpleGroupSpec("PSp", 2, 3)):
            with self.subTest(group=str(spec)):
                result = formula_vs_brute(spec)
                value = int(result["formula"]["value"])
                self.assertEqual(result["brute_max"], value)
                self.assertEqual(result["witness_centralizers"], [value])
        # the largest centralizer of Alt(5) belongs to a 5-cycle, the 3-cycles still match
        result = formula_vs_brute(SimpleGroupSpec("Alt", 5))
        self.assertEqual(result["witness_centralizers"], [3])
        self.assertEqual(result["brute_max"], 5)
        involution = Permutation.from_cycles(11, [(2, 10), (6, 7), (3, 4), (9, 5)])
        self.assertTrue(witness_predicate(SimpleGroupSpec("M11"))(involution))
        with self.assertRaises(UnsupportedFamily):
            witness_predicate(SimpleGroupSpec("Sz", q=8))

    def test_wrong_formula_rejected(self):
        # 5 is the centralizer of a 5-cycle, not of a 3-cycle
        wrong = CentralizerEstimate("3-cycle", 5, True)
        with patch.object(centralizer_oracles, "centralizer_formula", return_value=wrong):
            with self.assertRaises(FormulaMismatch) as context:
                formula_vs_brute(SimpleGroupSpec("Alt", 5))
        self.assertEqual(context.exception.details["witness_centralizers"], [3])
