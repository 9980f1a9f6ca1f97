import unittest
from __init__ import SimpleGroupSpec
from candidates import MODE_EXPONENTS, DEFAULT_GRIDS, is_excluded, candidate_filter, candidate_table
from exceptions import UnsupportedFamily


class TestCandidates(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.tables = {mode: candidate_table(mode) for mode in MODE_EXPONENTS}

    def runTest(self):
        self.setUpClass()
        self.test_alternating()
        self.test_linear()
        self.test_unitary_and_symplectic()
        self.test_cube_root_mode()
        self.test_undecided()
        self.test_unknown_mode()
        self.test_references()

    def test_alternating(self):
        self.assertEqual(self.tables["SD_k>=3"]["families"]["Alt"]["max_surviving_n"], 15)
        self.assertEqual(self.tables["CD_r2"]["families"]["Alt"]["max_surviving_n"], 7)
        self.assertEqual(self.tables["SD_k>=3"]["exponent"], "3/4")
        survivors = self.tables["CD_r2"]["families"]["Alt"]["survivors"]
        self.assertEqual(survivors, ["Alt(5)", "Alt(6)", "Alt(7)"])

    def test_linear(self):
        specs = [SimpleGroupSpec("PSL", n, 2) for n in range(3, 11)]
        self.assertEqual([spec.n for spec in candidate_filter("SD_k>=3", specs)], [3, 4, 5, 6, 7])
        self.assertEqual([spec.n for spec in candidate_filter("CD_r2", specs)], [3])

    def test_unitary_and_symplectic(self):
        unitary = [SimpleGroupSpec("PSU", n, 2) for n in range(4, 8)]
        self.assertEqual([spec.n for spec in candidate_filter("SD_k>=3", unitary)], [4, 5, 6])
        symplectic = [SimpleGroupSpec("PSp", n, 3) for n in range(2, 5)]
        self.assertEqual([spec.n for spec in candidate_filter("SD_k>=3", symplectic)], [2, 3])

    def test_cube_root_mode(self):
        families = self.tables["CD_r3"]["families"]
        self.assertEqual(set(families), set(DEFAULT_GRIDS))
        for family, entry in families.items():
            with self.subTest(family=family):
                self.assertEqual(entry["survivors"], [])
                self.assertIsNone(entry["max_surviving_n"])

    def test_undecided(self):
        self.assertIsNone(is_excluded(SimpleGroupSpec("PSL", 2, 5), "SD_k>=3"))
        self.assertEqual(candidate_filter("CD_r3", [SimpleGroupSpec("PSL", 2, 5)]), [SimpleGroupSpec("PSL", 2, 5)])
        self.assertTrue(is_excluded(SimpleGroupSpec("Alt", 16), "SD_k>=3"))
        self.assertFalse(is_excluded(SimpleGroupSpec("Alt", 15), "SD_k>=3"))

    def test_unknown_mode(self):
        with self.assertRaises(UnsupportedFamily):
            is_excluded(SimpleGroupSpec("Alt", 5), "CD_r4")
        with self.assertRaises(UnsupportedFamily):
            candidate_table("CD_r4", {})

    def test_references(self):
        self.assertEqual(self.tables["SD_k>=3"]["families"]["PSL"]["ref"], "Table1:SD:PSL")
        self.assertEqual(self.tables["CD_r2"]["families"]["Alt"]["ref"], "Table1:CD_r2:Alt")
        for mode, table in self.tables.items():
            for family, entry in table["families"].items():
                with self.subTest(mode=mode, family=family):
                    self.assertTrue(entry["ref"].endswith(f":{family}"))
