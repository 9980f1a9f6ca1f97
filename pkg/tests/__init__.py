import unittest
from tests.test_permutation import TestPermutation
from tests.test_perm_group import TestPermGroup
from tests.test_group_automorphism import TestGroupAutomorphism
from tests.test_finite_field import TestFiniteField
from tests.test_incidence import TestIncidenceStructure
from tests.test_constructions import TestConstructions
from tests.test_geo_aut import TestGeoAut
from tests.test_fixed_substructure import TestFixedSubstructure
from tests.test_singer import TestSinger
from tests.test_multipliers import TestMultipliers
from tests.test_arithmetic_bounds import TestArithmeticBounds
from tests.test_simple_groups import TestSimpleGroups
from tests.test_centralizer_oracles import TestCentralizerOracles
from tests.test_candidates import TestCandidates
from tests.test_corpus import TestCorpus
from tests.test_manifest import TestManifest
from tests.test_cli import TestCli
from tests.test_visualize import TestVisualization


def workbench_suite():
    suite = unittest.TestSuite()
    suite.addTests([
        TestPermutation(),
        TestPermGroup(),
        TestGroupAutomorphism(),
        TestFiniteField(),
        TestIncidenceStructure(),
        TestConstructions(),
        TestGeoAut(),
        TestFixedSubstructure(),
        TestSinger(),
        TestMultipliers(),
        TestArithmeticBounds(),
        TestSimpleGroups(),
        TestCentralizerOracles(),
        TestCandidates(),
        TestCorpus(),
        TestManifest(),
        TestCli(),
        TestVisualization()
    ])
    return suite
