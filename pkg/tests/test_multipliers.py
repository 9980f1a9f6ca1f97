import unittest
from __init__ import MultiplierRecord, GroupAutomorphism, corpus
from multipliers import (multipliers_group_side, multipliers_geometry_side, multiplier_maps, check_base_change,
                         check_fixed_structure, check_small_order, classify_centralizer, check_centralizer_bound,
                         verify_record, verify_context)


class TestMultipliers(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.ctx = corpus.elation_context("payne-w3")
        self.A = corpus.automorphisms("payne-w3")
        self.records = multipliers_geometry_side(self.ctx, self.A)
        self.identity = next(r for r in self.records if r.point_map.is_identity())

    def runTest(self):
        self.setUpClass()
        self.test_records()
        self.test_identity_multiplier()
        self.test_strategies_agree()
        self.test_closed_under_composition()
        self.test_base_change()
        self.test_fixed_structure()
        self.test_small_orders()
        self.test_verify_context()

    def test_records(self):
        self.assertGreater(len(self.records), 1)
        for rec in self.records:
            self.assertEqual(rec.point_map.images[0], 0)
            self.assertEqual(len(rec.X) * rec.H.order(), 27)
            self.assertEqual(rec.order, rec.point_map.order())
        self.assertEqual([r.point_map for r in self.records], sorted(r.point_map for r in self.records))

    def test_identity_multiplier(self):
        rec = self.identity
        self.assertEqual((rec.order, rec.H.order(), rec.x_delta, rec.c), (1, 27, 0, 5))
        self.assertEqual(rec.to_json()["H"], 27)
        shape = classify_centralizer(self.ctx, rec)
        self.assertEqual(shape.case, "e")
        self.assertEqual(shape.evidence, {"s": 2, "t": 4})
        self.assertEqual(check_small_order(self.ctx, rec)["status"], "NotApplicable")
        self.assertEqual(check_centralizer_bound(self.ctx, rec)["status"], "HypothesisNotMet")

    def test_strategies_agree(self):
        group_side = multipliers_group_side(self.ctx)
        self.assertEqual(multiplier_maps(group_side), multiplier_maps(self.records))

    def test_closed_under_composition(self):
        maps = multiplier_maps(self.records)
        for a in self.records:
            for b in self.records:
                self.assertIn((a.point_map * b.point_map).images, maps)

    def test_base_change(self):
        for h in self.ctx.G.generators:
            self.assertTrue(check_base_change(self.ctx, self.A, h))

    def test_fixed_structure(self):
        for rec in self.records:
            result = check_fixed_structure(self.ctx, rec)
            self.assertEqual(result["P0"], rec.H.order())
            self.assertEqual(result["P1"], rec.H.order() * rec.x_delta)

    def test_small_orders(self):
        for rec in self.records:
            result = check_small_order(self.ctx, rec)
            if rec.order in (2, 3):
                self.assertEqual(result["status"], "Pass")
                self.assertEqual(result["L1"], (5 - rec.c) * rec.H.order())
            else:
                self.assertEqual(result["status"], "NotApplicable")

    def test_verify_context(self):
        rows = verify_context(self.ctx, self.records)
        self.assertEqual(len(rows), len(self.records))
        self.assertTrue(all(not row["failures"] for row in rows))
        self.assertTrue(all(row["bound"] == "HypothesisNotMet" for row in rows))
        self.assertEqual(rows[0]["refs"], {"fixed_structure": "Prop3.1", "small_order": "Prop3.2",
                                           "centralizer": "Thm3.3", "bound": "Cor3.4"})
        self.assertEqual(verify_record(self.ctx, self.identity)["case"], "e")
        theta = GroupAutomorphism.conjugation(self.ctx.G, self.records[-1].point_map)
        self.assertEqual(MultiplierRecord(self.ctx, theta).point_map, self.records[-1].point_map)
