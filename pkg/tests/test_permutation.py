import unittest
from __init__ import Permutation
from exceptions import DomainMismatch


class TestPermutation(unittest.TestCase):
    def setUp(self):
        self.cycle = Permutation.from_cycles(5, [(0, 1, 2)])
        self.swap = Permutation.from_cycles(5, [(2, 3)])

    def runTest(self):
        self.setUp()
        self.test_from_cycles()
        self.setUp()
        self.test_right_action()
        self.setUp()
        self.test_inverse_and_power()
        self.setUp()
        self.test_conjugate()
        self.setUp()
        self.test_fixed_points()
        self.setUp()
        self.test_domain_errors()

    def test_from_cycles(self):
        self.assertEqual(self.cycle.images, (1, 2, 0, 3, 4))
        self.assertEqual(self.cycle.order(), 3)
        self.assertEqual(self.cycle.cycles(), [(0, 1, 2)])
        self.assertEqual(repr(self.cycle), "(0 1 2)")
        self.assertEqual(repr(Permutation.identity(3)), "()")

    def test_right_action(self):
        g = Permutation.from_cycles(3, [(0, 1)])
        h = Permutation.from_cycles(3, [(1, 2)])
        # g first, then h
        self.assertEqual((g * h).images, (2, 0, 1))
        for x in range(3):
            self.assertEqual((g * h)(x), h(g(x)))

    def test_inverse_and_power(self):
        self.assertEqual(self.cycle.inverse().images, (2, 0, 1, 3, 4))
        self.assertEqual(self.cycle.power(-1), self.cycle.inverse())
        self.assertTrue(self.cycle.power(3).is_identity())
        self.assertEqual(self.cycle.power(4), self.cycle)
        self.assertTrue((self.cycle * self.cycle.inverse()).is_identity())

    def test_conjugate(self):
        conjugate = self.cycle.conjugate(self.swap)
        self.assertEqual(conjugate.cycles(), [(0, 1, 3)])
        self.assertEqual(conjugate, self.swap.inverse() * self.cycle * self.swap)

    def test_fixed_points(self):
        self.assertEqual(self.cycle.fixed_points(), [3, 4])
        self.assertEqual(Permutation.identity(4).fixed_points(), [0, 1, 2, 3])
        self.assertEqual(self.cycle.to_json(), [1, 2, 0, 3, 4])

    def test_domain_errors(self):
        with self.assertRaises(DomainMismatch):
            Permutation.from_cycles(4, [(0, 1), (1, 2)])
        with self.assertRaises(DomainMismatch):
            self.cycle * Permutation.identity(4)
