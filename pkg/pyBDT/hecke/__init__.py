"""
The genuine spherical Hecke algebra of a cover of an unramified torus
"""
from .cyclotomic import Cyclotomic, cyclotomic_modulus
from .cocycles import (HeckeSpec, SymbolResidue, cocycle_closed, cocycle_oracle, cocycle_bd,
                       reduce_mod_units, automorphism_action, support_witness)
from .algebra import (HeckeElement, COCYCLE_PATHS, delta, convolve, lattice_box, is_commutative,
                      structure_table)
from .incarnation import with_incarnation, incarnation_change, check_incarnation_change, baer_sum_check
