"""
pyBDT

``pyBDT`` computes with Brylinski-Deligne covers of tori over tame
nonarchimedean local fields: lattice invariants of the defining quadratic
form, the center and central core of the cover, the spherical Hecke algebra,
and the genuine irreducible representations, all in exact arithmetic.

for all features of ``pyBDT``, you need to import one of the
following subpackages:

Subpackages
-----------
lattice
    Smith normal forms, lattices and finite abelian groups.
bd
    Brylinski-Deligne data and their lattice-level invariants.
localfield
    A tame model of a local field, Hilbert symbols and torus points.
cover
    Cover arithmetic, commutators, centers and Lagrangian decompositions.
hecke
    The genuine spherical Hecke algebra as a twisted group algebra.
reps
    Genuine irreducible representations, pouches and multiplicity bounds.
bdt
    The ``bdt`` command-line front end.
"""
import os.path as _osp

pkg_dir = _osp.abspath(_osp.dirname(__file__))

# every module uses numpy
import numpy

from .version import __version__
