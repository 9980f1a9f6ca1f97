import unittest
from __init__ import GQOrder, constructions
from constructions import (construct_w, construct_elliptic_q5, construct_grid, construct_dual_grid, payne_derive,
                           is_regular_point, has_singular_plane, symplectic_transvection, elation_singer_from_matrices,
                           elation_singer_from_stabilizer, construct_elation_singer, ELATION_CENTER)
from geo_aut import is_automorphism
from exceptions import UnsupportedField, NotSquareOrder, NotRegularPoint, InvalidStructure


class TestConstructions(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.W3 = construct_w(3)

    def runTest(self):
        self.setUpClass()
        self.test_symplectic()
        self.test_elliptic()
        self.test_grids()
        self.test_regular_points()
        self.test_payne_derived()
        self.test_transvections()
        self.test_elation_singer()
        self.test_routes_agree()

    def test_symplectic(self):
        self.assertEqual(self.W3.order, GQOrder(3, 3))
        self.assertEqual(self.W3.name, "W(3)")
        with self.assertRaises(UnsupportedField):
            construct_w(5)

    def test_elliptic(self):
        Q = construct_elliptic_q5(2)
        self.assertEqual(Q.order, GQOrder(2, 4))
        self.assertEqual((Q.point_count, Q.line_count), (27, 45))
        Q3 = construct_elliptic_q5(3)
        self.assertEqual(Q3.order, GQOrder(3, 9))
        self.assertEqual((Q3.point_count, Q3.line_count), (112, 280))
        self.assertFalse(has_singular_plane(2))
        self.assertFalse(has_singular_plane(3))
        with self.assertRaises(UnsupportedField):
            construct_elliptic_q5(4)

    def test_grids(self):
        grid = construct_grid(2, 3)
        self.assertEqual((grid.point_count, grid.line_count), (12, 7))
        self.assertEqual(grid.name, "grid(2,3)")
        dual = construct_dual_grid(2, 3)
        self.assertEqual((dual.point_count, dual.line_count), (7, 12))
        self.assertEqual(dual.name, "dualgrid(2,3)")
        with self.assertRaises(InvalidStructure):
            construct_grid(0, 2)

    def test_regular_points(self):
        self.assertTrue(is_regular_point(self.W3, ELATION_CENTER))
        with self.assertRaises(NotSquareOrder):
            is_regular_point(construct_elliptic_q5(2), 0)
        # points of Q(4,q) are regular only for q even
        Q43 = self.W3.dual()
        self.assertFalse(is_regular_point(Q43, 0))
        with self.assertRaises(NotRegularPoint):
            payne_derive(Q43, 0)

    def test_payne_derived(self):
        for q, order, points in ((2, (1, 3), 8), (3, (2, 4), 27), (4, (3, 5), 64)):
            with self.subTest(q=q):
                D = payne_derive(construct_w(q), ELATION_CENTER)
                self.assertEqual(D.order, GQOrder(*order))
                self.assertEqual(D.point_count, points)

    def test_transvections(self):
        for point in (0, 7, 39):
            with self.subTest(point=point):
                g = symplectic_transvection(3, point)
                self.assertTrue(is_automorphism(self.W3, g))
                self.assertEqual(g.order(), 3)
                self.assertEqual(len(g.fixed_points()), 13)

    def test_elation_singer(self):
        for q in (2, 3, 4):
            with self.subTest(q=q):
                E = construct_elation_singer(q)
                self.assertEqual(E.order(), q ** 3)
                self.assertTrue(E.is_regular())
                self.assertTrue(E.is_p_group())

    def test_routes_agree(self):
        self.assertEqual(elation_singer_from_matrices(3).element_set(),
                         elation_singer_from_stabilizer(3).element_set())
        self.assertIs(constructions.construct_w, construct_w)
