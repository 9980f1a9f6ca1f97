import unittest
from __init__ import Permutation, default_config, corpus, random_relabeling
from geo_aut import is_automorphism, line_permutation, line_group, automorphism_group
from constructions import construct_grid, symplectic_transvection
from exceptions import DomainMismatch, NotAutomorphism, TooLarge


class TestGeoAut(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.W2 = corpus.structure("w2")
        self.A = corpus.automorphisms("w2")

    def runTest(self):
        self.setUpClass()
        self.test_is_automorphism()
        self.test_line_action()
        self.test_group_orders()
        self.test_stabilizers()
        self.test_primitivity()
        self.test_limits()
        self.test_relabeling_invariance()

    def test_is_automorphism(self):
        self.assertTrue(is_automorphism(self.W2, Permutation.identity(15)))
        self.assertTrue(is_automorphism(self.W2, symplectic_transvection(2, 3)))
        self.assertFalse(is_automorphism(self.W2, Permutation.from_cycles(15, [(0, 1)])))
        self.assertTrue(all(is_automorphism(self.W2, g) for g in self.A.generators))
        with self.assertRaises(DomainMismatch):
            is_automorphism(self.W2, Permutation.identity(14))

    def test_line_action(self):
        g = symplectic_transvection(2, 0)
        lines = line_permutation(self.W2, g)
        self.assertEqual(len(lines.fixed_points()), 3)
        with self.assertRaises(NotAutomorphism):
            line_permutation(self.W2, Permutation.from_cycles(15, [(0, 1)]))
        L = line_group(self.W2, self.A)
        self.assertEqual(L.order(), 720)
        self.assertTrue(L.is_transitive())

    def test_group_orders(self):
        self.assertEqual(self.A.order(), 720)
        self.assertEqual(len(self.A.enumerate()), 720)
        self.assertEqual(automorphism_group(construct_grid(2, 2)).order(), 72)
        self.assertEqual(automorphism_group(construct_grid(2, 3)).order(), 144)
        self.assertEqual(corpus.automorphisms("q5m2").order(), 51840)

    def test_stabilizers(self):
        stabilizer = automorphism_group(self.W2, [0])
        self.assertEqual(stabilizer.order(), 48)
        self.assertTrue(all(g.images[0] == 0 for g in stabilizer.generators))
        self.assertEqual(automorphism_group(self.W2, [0, 1]).order() * len(stabilizer.orbit(1)), 48)

    def test_primitivity(self):
        self.assertTrue(self.A.is_transitive())
        self.assertTrue(self.A.is_primitive())
        Q = corpus.automorphisms("q5m2")
        self.assertTrue(Q.is_primitive())
        self.assertTrue(line_group(corpus.structure("q5m2"), Q).is_primitive())

    def test_limits(self):
        config = dict(default_config, max_points=10)
        with self.assertRaises(TooLarge):
            automorphism_group(self.W2, config=config)

    def test_relabeling_invariance(self):
        for offset, name in enumerate(("w2", "q5m2", "grid:2,3", "payne-w3")):
            with self.subTest(name=name):
                S = corpus.structure(name)
                images = random_relabeling(S.point_count, default_config["seed"] + offset)
                self.assertEqual(images, random_relabeling(S.point_count, default_config["seed"] + offset))
                relabeled = S.relabel(images)
                A = automorphism_group(relabeled)
                self.assertEqual(A.order(), corpus.automorphisms(name).order())
                self.assertTrue(all(is_automorphism(relabeled, g) for g in A.generators))
