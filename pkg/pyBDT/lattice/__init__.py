"""
Exact integer lattices and finitely generated abelian groups
"""
from .snf import (smith_normal_form, smith_decomposition, hermite_normal_form, kernel_basis,
                  solve_integer, determinant, is_unimodular, as_int_matrix, as_int_vector, matmul)
from .qmodz import QmodZ
from .groups import (AbelianGroup, FiniteAbelianGroup, DualGroup, Lattice, GroupHom, Cokernel,
                     NotInImage, cokernel, solve_in_image, character_group, coinvariants,
                     kernel_lattice)
from .cohomology import fixed_sublattice, tate_h1_cyclic, restrict_action, check_automorphism
