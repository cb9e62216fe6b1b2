"""
Brylinski-Deligne data and their lattice-level invariants
"""
from .datum import TorusDatum, BDDatum
from .invariants import (SharpData, FiniteInvariants, IndexBounds, beta, delta, sharp_lattices,
                         is_sharp, xqn_isomorphism, finite_invariants, zind_lattice, index_bounds,
                         cind_bound, f_points)
from .rgroup import RGroupData, r_group, r_group_decomposition
