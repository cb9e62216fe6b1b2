"""
A tame model of a nonarchimedean local field: residue fields, elements
modulo principal units, Hilbert symbols and points of split tori
"""
from .residue import ResidueField, prime_power
from .elements import TameElement, MuN
from .spec import LocalFieldSpec, SYMBOL_CONVENTIONS, hilbert, is_nth_power, h_n
from .torus import TorusPoint, val_T, evaluate_character, hilbert_pairing_T
