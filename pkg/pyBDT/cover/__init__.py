"""
Arithmetic of covers of split tori: multiplication, commutators, the
center and its Lagrangian decompositions
"""
from .spec import CoverSpec, CoverElement, multiply, inverse, commutator, delta_j, commutator_formula
from .effective import EffectiveGroup
from .lagrangian import LagrangianPair, lagrangian_decomposition, subgroup_elements
from .center import CenterData, center, is_central, is_in_core, center_equality_report
