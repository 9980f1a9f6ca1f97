import os
import shutil
import tempfile
import unittest
import numpy
from __init__ import IncidenceStructure, GQOrder, GridShape, validate_gq, perp, span, classify_thin, is_partial_ovoid
from incidence import greedy_partial_ovoid, random_relabeling
from default_config import default_config
from manifest import canonical_json
from constructions import construct_w, construct_grid, construct_dual_grid
from exceptions import (InvalidStructure, NotUniformLineSize, NotUniformPointDegree, ContainsTriangleOrDigon,
                        GQAxiomFails, EmptyInput)


class TestIncidenceStructure(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.test_dir = tempfile.mkdtemp()
        self.W2 = construct_w(2)
        self.W3 = construct_w(3)

    @classmethod
    def tearDownClass(self):
        if os.path.exists(self.test_dir):
            shutil.rmtree(self.test_dir)

    def runTest(self):
        self.setUpClass()
        self.test_canonical_lines()
        self.test_invalid_structures()
        self.test_validate_gq()
        self.test_axiom_failures()
        self.test_perp_and_span()
        self.test_perp_span_closure()
        self.test_classify_thin()
        self.test_partial_ovoid()
        self.test_matrix_and_dual()
        self.test_json_round_trip()
        self.test_byte_stable_save()
        self.test_random_relabeling()
        self.tearDownClass()

    def test_canonical_lines(self):
        S = IncidenceStructure(4, [[3, 2], [1, 0]], "pair")
        self.assertEqual(S.lines, ((0, 1), (2, 3)))
        self.assertEqual(S, IncidenceStructure(4, [[0, 1], [2, 3]]))
        self.assertEqual(S.line_index([1, 0]), 0)
        self.assertIsNone(S.line_index([0, 2]))
        self.assertEqual(S.line_through(2, 3), 1)
        self.assertIsNone(S.line_through(0, 2))
        self.assertTrue(S.collinear(0, 0))
        self.assertFalse(S.collinear(0, 3))

    def test_invalid_structures(self):
        with self.assertRaises(InvalidStructure):
            IncidenceStructure(3, [[0, 1], [1, 0]])
        with self.assertRaises(InvalidStructure):
            IncidenceStructure(3, [[0]])
        with self.assertRaises(InvalidStructure):
            IncidenceStructure(3, [[0, 3]])
        with self.assertRaises(InvalidStructure):
            IncidenceStructure.from_json({"lines": []})

    def test_validate_gq(self):
        for q, points in ((2, 15), (3, 40), (4, 85)):
            with self.subTest(q=q):
                S = self.W2 if q == 2 else self.W3 if q == 3 else construct_w(4)
                self.assertEqual(validate_gq(S), GQOrder(q, q))
                self.assertEqual((S.point_count, S.line_count), (points, points))
        # a grid is a quadrangle of order (s, 1)
        self.assertEqual(validate_gq(construct_grid(2, 2)), GQOrder(2, 1))
        self.assertTrue(self.W2.order.thick)
        self.assertEqual(GQOrder(2, 4).point_count, 27)
        self.assertEqual(GQOrder(2, 4).line_count, 45)

    def test_axiom_failures(self):
        with self.assertRaises(NotUniformLineSize):
            validate_gq(IncidenceStructure(4, [[0, 1, 2], [2, 3]]))
        with self.assertRaises(NotUniformPointDegree):
            validate_gq(IncidenceStructure(3, [[0, 1], [1, 2]]))
        with self.assertRaises(ContainsTriangleOrDigon):
            validate_gq(IncidenceStructure(3, [[0, 1], [1, 2], [0, 2]]))
        with self.assertRaises(GQAxiomFails):
            validate_gq(IncidenceStructure(4, [[0, 1], [2, 3]]))
        with self.assertRaises(InvalidStructure):
            validate_gq(IncidenceStructure(0, []))

    def test_perp_and_span(self):
        self.assertEqual(len(perp(self.W2, [0])), 7)
        far = next(x for x in range(self.W3.point_count) if not self.W3.collinear(0, x))
        self.assertEqual(len(perp(self.W3, [0, far])), 4)
        # every point of W(q) is regular
        self.assertEqual(len(span(self.W3, [0, far])), 4)
        self.assertEqual(span(self.W3, [0, far]), perp(self.W3, [0, far], span=True))
        self.assertIn(far, span(self.W3, [0, far]))
        with self.assertRaises(EmptyInput):
            perp(self.W2, [])

    def test_perp_span_closure(self):
        rng = numpy.random.default_rng(default_config["seed"])
        for S in (self.W2, self.W3, construct_grid(2, 3)):
            for _ in range(20):
                with self.subTest(structure=S.name):
                    x = int(rng.integers(S.point_count))
                    around = sorted(perp(S, [x]))
                    size = int(rng.integers(1, len(around) + 1))
                    B = {int(p) for p in rng.choice(around, size=size, replace=False)}
                    A = {int(rng.choice(sorted(B)))}
                    A |= {p for p in B if rng.random() < 0.5}
                    # A <= B <= perp(x), so x lies in perp(B) and every span below is defined
                    self.assertLessEqual(perp(S, B), perp(S, A))
                    self.assertLessEqual(A, span(S, A))
                    self.assertEqual(span(S, span(S, A)), span(S, A))
                    self.assertEqual(perp(S, span(S, A)), perp(S, A))

    def test_classify_thin(self):
        self.assertEqual(classify_thin(construct_grid(2, 3)), GridShape("Grid", 2, 3))
        self.assertEqual(classify_thin(construct_grid(3, 2)), GridShape("Grid", 2, 3))
        self.assertEqual(classify_thin(construct_dual_grid(2, 3)), GridShape("DualGrid", 2, 3))
        self.assertEqual(classify_thin(self.W2), GridShape("NotThin"))
        self.assertEqual(str(GridShape("Grid", 1, 4)), "Grid(1,4)")
        self.assertEqual(str(GridShape("NotThin")), "NotThin")

    def test_partial_ovoid(self):
        chosen = greedy_partial_ovoid(self.W2)
        report = is_partial_ovoid(self.W2, chosen)
        self.assertTrue(report.is_partial_ovoid)
        self.assertEqual(report.bound, 5)
        self.assertTrue(report.within_bound)
        line = self.W2.lines[0]
        self.assertFalse(is_partial_ovoid(self.W2, line[:2]).is_partial_ovoid)
        self.assertIsNone(is_partial_ovoid(IncidenceStructure(4, [[0, 1], [2, 3]]), [0, 2]).bound)

    def test_matrix_and_dual(self):
        matrix = self.W2.incidence_matrix()
        self.assertEqual(matrix.shape, (15, 15))
        self.assertTrue((matrix.sum(axis=0) == 3).all())
        self.assertTrue((matrix.sum(axis=1) == 3).all())
        dual = self.W3.dual()
        self.assertEqual(dual.point_count, 40)
        self.assertEqual(dual.order, GQOrder(3, 3))
        self.assertEqual(dual.name, "dual(W(3))")
        self.assertEqual(dual.dual().order, GQOrder(3, 3))

    def test_json_round_trip(self):
        self.assertEqual(IncidenceStructure.from_json(self.W2.to_json()), self.W2)
        file_path = os.path.join(self.test_dir, "nested", "w2.json")
        self.W2.save(file_path)
        loaded = IncidenceStructure.load(file_path)
        self.assertEqual(loaded, self.W2)
        self.assertEqual(loaded.name, "W(2)")
        with self.assertRaises(InvalidStructure):
            self.W2.relabel([0, 0] + list(range(2, 15)))

    def test_byte_stable_save(self):
        first = os.path.join(self.test_dir, "first.json")
        second = os.path.join(self.test_dir, "second.json")
        self.W3.save(first)
        IncidenceStructure.load(first).save(second)
        with open(first, "rb") as a, open(second, "rb") as b:
            content = a.read()
            self.assertEqual(content, b.read())
        self.assertEqual(content.decode("utf-8"), canonical_json(self.W3.to_json()))

    def test_random_relabeling(self):
        images = random_relabeling(15, default_config["seed"])
        self.assertEqual(sorted(images), list(range(15)))
        self.assertEqual(images, random_relabeling(15, default_config["seed"]))
        self.assertEqual(validate_gq(self.W2.relabel(images)), GQOrder(2, 2))
