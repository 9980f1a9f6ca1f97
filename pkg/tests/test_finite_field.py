import unittest
from __init__ import FiniteField, ProjectivePointSet
from exceptions import UnsupportedField


class TestFiniteField(unittest.TestCase):
    def runTest(self):
        self.test_prime_field()
        self.test_extension_fields()
        self.test_inverses()
        self.test_linear_algebra()
        self.test_unsupported()
        self.test_projective_points()

    def test_prime_field(self):
        F = FiniteField(7)
        self.assertEqual((F.p, F.k), (7, 1))
        self.assertEqual(F.add(5, 4), 2)
        self.assertEqual(F.mul(3, 5), 1)
        self.assertEqual(F.sub(2, 5), 4)
        self.assertEqual(F.neg(3), 4)

    def test_extension_fields(self):
        F4 = FiniteField(4)
        # 2 stands for x, and x^2 = x + 1
        self.assertEqual(F4.mul(2, 2), 3)
        self.assertEqual(F4.add(2, 3), 1)
        F9 = FiniteField(9)
        self.assertEqual((F9.p, F9.k), (3, 2))
        self.assertEqual(F9.add(F9.add(3, 3), 3), 0)
        F8 = FiniteField(8)
        self.assertTrue(all(F8.add(a, a) == 0 for a in range(8)))

    def test_inverses(self):
        for q in (2, 3, 4, 5, 7, 8, 9, 11):
            with self.subTest(q=q):
                F = FiniteField(q)
                self.assertTrue(all(F.mul(a, F.inv(a)) == 1 for a in range(1, q)))
        with self.assertRaises(ZeroDivisionError):
            FiniteField(5).inv(0)

    def test_linear_algebra(self):
        F = FiniteField(3)
        self.assertEqual(F.dot((1, 2, 0), (2, 2, 1)), 0)
        self.assertEqual(F.vec_add((1, 2), (2, 2)), (0, 1))
        self.assertEqual(F.vec_scale(2, (1, 2)), (2, 1))
        self.assertEqual(F.mat_vec([[0, 1], [1, 0]], (1, 2)), (2, 1))

    def test_unsupported(self):
        for q in (6, 13, 16):
            with self.subTest(q=q):
                with self.assertRaises(UnsupportedField):
                    FiniteField(q)

    def test_projective_points(self):
        space = ProjectivePointSet(FiniteField(3), 3)
        self.assertEqual(len(space), 40)
        self.assertEqual(space.index_of((0, 0, 0, 2)), space.index_of((0, 0, 0, 1)))
        self.assertEqual(space.index_of((0, 0, 0, 1)), 0)
        self.assertEqual(len(space.line_points((1, 0, 0, 0), (0, 1, 0, 0))), 4)
        self.assertEqual(space.normalize((0, 2, 1, 0)), (0, 1, 2, 0))
        with self.assertRaises(ValueError):
            space.normalize((0, 0, 0, 0))
        self.assertEqual(len(ProjectivePointSet(FiniteField(4), 2)), 21)
