"""
Vectors fixed by the units ``T^0``
"""
from fractions import Fraction

from ..errors import InvalidDatum, InternalInvariantViolation
from .characters import unit_sublattice
from ..hecke import Cyclotomic

def spherical_fixed_dim(spec, pi):
    """
    The dimension of the ``T^0``-fixed subspace of ``pi``

    The cocycle is trivial on units, so ``T^0`` embeds in ``G_W`` and the
    dimension is the average of ``Tr pi(u)`` over the units.

    Parameters
    ----------
    spec : CoverSpec or FiniteQuotient
        the cover ``pi`` is a representation of
    pi : GenuineIrrep
    """
    q = pi.quotient
    if spec is not q and spec is not q.cover:
        raise InvalidDatum("the representation belongs to a different cover")
    total = Cyclotomic.zero()
    count = 0
    for u in q.unit_points():
        total = total + pi.trace(q.element(u))
        count += 1
    avg = total * Cyclotomic.rational(Fraction(1, count))
    if not avg.is_rational() or avg.to_rational().denominator != 1:
        raise InternalInvariantViolation("the fixed-space dimension came out as %r" %avg)
    return int(avg.to_rational())

def is_unramified(chi):
    """
    Whether a central character is trivial on the central units
    """
    return chi.is_trivial_on(chi.domain.intersection(unit_sublattice(chi.quotient)))
