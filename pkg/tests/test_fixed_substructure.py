import unittest
from __init__ import Permutation, corpus
from fixed_substructure import (fixed_partition, benson_check, classify_fixed_substructure, classification_census,
                                fixed_substructure, BensonReport)
from constructions import construct_grid, symplectic_transvection
from exceptions import NotAutomorphism, NotThick


class TestFixedSubstructure(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.W2 = corpus.structure("w2")
        self.A = corpus.automorphisms("w2")
        self.transvection = symplectic_transvection(2, 0)

    def runTest(self):
        self.setUpClass()
        self.test_partition()
        self.test_benson_transvection()
        self.test_benson_everywhere()
        self.test_identity_case()
        self.test_point_case()
        self.test_fixed_point_free_case()
        self.test_census()
        self.test_errors()

    def test_partition(self):
        part = fixed_partition(self.W2, self.transvection)
        self.assertEqual(part.sizes(), {"P0": 7, "P1": 0, "P2": 8, "L0": 3, "L1": 12, "L2": 0})
        self.assertEqual(sorted(part.to_json()["P0"]), sorted(part.P0))
        self.assertEqual(part.line_action.domain_size, 15)

    def test_benson_transvection(self):
        self.assertEqual(benson_check(self.W2, self.transvection), BensonReport(21, 21, 9, 4, 1))

    def test_benson_everywhere(self):
        for g in self.A.enumerate():
            report = benson_check(self.W2, g)
            self.assertEqual(report.points_side, report.lines_side)
            self.assertEqual(report.residue, 1)

    def test_identity_case(self):
        result = classify_fixed_substructure(self.W2, Permutation.identity(15))
        self.assertEqual(result.tag, "C4")
        self.assertEqual(result.witness, {"s": 2, "t": 2})
        self.assertEqual(str(result), "C4(2,2)")
        self.assertTrue(result.verify(self.W2))

    def test_point_case(self):
        result = classify_fixed_substructure(self.W2, self.transvection)
        self.assertEqual(result.tag, "C2")
        self.assertEqual(result.witness, {"point": 0})
        self.assertEqual(result.to_json()["sizes"]["P0"], 7)
        # three fixed lines through the center
        sub = fixed_substructure(self.W2, result.partition)
        self.assertEqual((sub.point_count, sub.line_count), (7, 3))

    def test_fixed_point_free_case(self):
        g = next(g for g in self.A.enumerate() if g.order() == 5)
        result = classify_fixed_substructure(self.W2, g)
        self.assertEqual(result.tag, "C0")
        self.assertEqual(str(result), "C0")

    def test_census(self):
        census = classification_census(self.W2, self.A)
        self.assertEqual(sum(census.values()), 720)
        self.assertEqual(census["C4(2,2)"], 1)
        self.assertEqual(census["C0"], 144)

    def test_errors(self):
        with self.assertRaises(NotAutomorphism):
            fixed_partition(self.W2, Permutation.from_cycles(15, [(0, 1)]))
        with self.assertRaises(NotThick):
            benson_check(construct_grid(2, 2), Permutation.identity(9))
