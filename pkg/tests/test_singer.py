import unittest
from __init__ import PermGroup, SingerContext, corpus
from singer import make_context, find_singer_groups
from constructions import construct_elation_singer, symplectic_transvection
from exceptions import NotRegular, DomainMismatch


class TestSinger(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.ctx = corpus.elation_context("payne-w3")

    def runTest(self):
        self.setUpClass()
        self.test_context()
        self.test_identification()
        self.test_rebase()
        self.test_invalid_groups()
        self.test_search_elliptic()
        self.test_search_without_result()

    def test_context(self):
        self.assertEqual(tuple(self.ctx.order), (2, 4))
        self.assertEqual(len(self.ctx.delta), 10)
        record = self.ctx.to_json()
        self.assertEqual(record["group_order"], 27)
        self.assertEqual(record["delta"], 10)
        self.assertEqual(record["base_point"], 0)

    def test_identification(self):
        self.assertTrue(self.ctx.element(0).is_identity())
        for p in range(self.ctx.S.point_count):
            self.assertEqual(self.ctx.element(p).images[0], p)
            self.assertEqual(self.ctx.point_of[self.ctx.elem_of[p]], p)

    def test_rebase(self):
        h = self.ctx.G.generators[0]
        moved = self.ctx.rebase(h)
        self.assertEqual(moved.base_point, h.images[0])
        self.assertTrue(moved.element(moved.base_point).is_identity())
        self.assertEqual(len(moved.delta), 10)

    def test_invalid_groups(self):
        W2 = corpus.structure("w2")
        with self.assertRaises(NotRegular):
            SingerContext(W2, PermGroup([symplectic_transvection(2, 0)]))
        with self.assertRaises(DomainMismatch):
            make_context(W2, construct_elation_singer(3))

    def test_search_elliptic(self):
        found = find_singer_groups(corpus.structure("q5m2"), corpus.automorphisms("q5m2"))
        self.assertGreaterEqual(len(found), 1)
        self.assertTrue(all(G.order() == 27 and G.is_regular() for G in found))

    def test_search_without_result(self):
        # Sp(4,2) has no regular subgroup on the 15 points
        self.assertEqual(find_singer_groups(corpus.structure("w2"), corpus.automorphisms("w2")), [])
