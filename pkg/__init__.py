from __types__ import WorkbenchConfig, CaseTag, CentralizerCase, FamilyTag, DiagonalMode, SweepCheck
from default_config import default_config
import exceptions as exceptions
from incidence import (IncidenceStructure, GQOrder, GridShape, validate_gq, perp, span, classify_thin, is_partial_ovoid,
                       random_relabeling)
from permutation import Permutation
from perm_group import PermGroup
from group_automorphism import GroupAutomorphism, group_automorphisms
from finite_field import FiniteField, ProjectivePointSet
import constructions as constructions
import geo_aut as geo_aut
import fixed_substructure as fixed_substructure
from fixed_substructure import FixedPartition, SubstructureClass
import singer as singer
from singer import SingerContext
import multipliers as multipliers
from multipliers import MultiplierRecord
import arithmetic_bounds as arithmetic_bounds
import simple_groups as simple_groups
from simple_groups import SimpleGroupSpec, CentralizerEstimate
import centralizer_oracles as centralizer_oracles
import candidates as candidates
import corpus as corpus
from manifest import RunManifest
