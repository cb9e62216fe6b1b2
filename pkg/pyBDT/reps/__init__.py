"""
Genuine representations of split covers on a finite effective quotient
"""
from .quotient import FiniteQuotient, QuotientElement
from .characters import (GenuineCharacter, section_defect, unit_sublattice, extend_character,
                         presentation_relations, genuine_characters, character_from_values)
from .irrep import (MonomialMatrix, GenuineIrrep, build_irrep, character_fn, character_norm,
                    same_character)
from .spherical import spherical_fixed_dim, is_unramified
from .pouch import PouchData, pouch_map, pouch_members, pouch_character_sum
from .global_bound import (GlobalBoundInput, CARDINALITIES, global_multiplicity_bound, stage_bound,
                           split_multiplicity_argument)
