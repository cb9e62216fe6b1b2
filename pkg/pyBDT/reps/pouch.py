"""
Pouches: genuine representations grouped by their character on the
central core ``C~``, the image of the cover of ``T#``
"""
from ..errors import InvalidDatum
from ..hecke import Cyclotomic
from .characters import GenuineCharacter, genuine_characters
from .irrep import GenuineIrrep

from collections import namedtuple
import logging

logger = logging.getLogger('bdt.pouch')

class PouchData(namedtuple('PouchData', ['core_char', 'fiber_size'])):
    """
    The image of a representation under the core-character map

    Attributes
    ----------
    core_char : GenuineCharacter
        the character on ``C~``
    fiber_size : int
        the number of genuine irreducibles with this core character, ``cind``
    """
    def to_dict(self):
        return {'core_char': self.core_char.to_dict(), 'fiber_size': self.fiber_size}


def pouch_map(spec, pi_or_chi):
    """
    The pouch of a representation or of its central character: the
    restriction along ``T# -> T`` of the central character

    Parameters
    ----------
    spec : FiniteQuotient
    pi_or_chi : GenuineIrrep or GenuineCharacter
    """
    chi = pi_or_chi.central_character if isinstance(pi_or_chi, GenuineIrrep) else pi_or_chi
    if chi.quotient is not spec:
        raise InvalidDatum("the character is defined on a different quotient")
    center = spec.center
    return PouchData(chi.restrict(center.core), center.cind)

def pouch_members(spec, xi):
    """
    The genuine central characters whose restriction to ``C~`` is ``xi``
    """
    return [chi for chi in genuine_characters(spec) if chi.restrict(xi.domain) == xi]

def pouch_character_sum(spec, xi, g):
    """
    ``sum Tr pi(g)`` over the representations in the pouch of ``xi``;
    equals ``cind zind xi(g)`` on ``C~`` and 0 off it
    """
    total = Cyclotomic.zero()
    for chi in pouch_members(spec, xi):
        total = total + GenuineIrrep(spec, chi).trace(g)
    return total
