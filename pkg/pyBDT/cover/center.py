"""
The center ``Z#(T)`` and central core ``C#(T)`` of a split cover
"""
from ..errors import InternalInvariantViolation
from ..lattice import QmodZ, Lattice
from ..bd import zind_lattice
from .spec import commutator
from .lagrangian import lagrangian_decomposition

import itertools
import math
import logging

logger = logging.getLogger('bdt.center')

class CenterData(object):
    """
    The center of the cover in effective coordinates

    Attributes
    ----------
    zdag : Lattice
        the radical of the commutator form, ``Z#(T)`` in ``T_eff``
    core : Lattice
        ``C#(T) = Im(T# -> T)``
    quotient : Cokernel
        ``T_eff / Z#``, projected from effective coordinates
    pairing_matrix : list of list
        ``P_ij`` with ``<a_i, a_j> = P_ij / n`` on the quotient generators
    zind, cind : int
    """
    def __init__(self, spec, zdag, core):
        self.spec = spec
        self.zdag = zdag
        self.core = core
        self.quotient = Lattice.full(2 * spec.rank).quotient(zdag)
        self.A = self.quotient.torsion
        eff = spec.effective
        lifts = self.quotient.lifts
        self.pairing_matrix = [[eff.pairing(a, b).exponent for b in lifts] for a in lifts]

        order = self.A.order
        root = math.isqrt(order)
        if root * root != order:
            raise InternalInvariantViolation("#(T/Z#) = %d is not a perfect square" %order,
                                             witness=spec.datum.to_dict())
        self.zind = root
        self.cind = zdag.index(core)

    @property
    def zdag_generators(self):
        return self.zdag.to_list()

    @property
    def core_generators(self):
        return self.core.to_list()

    def project(self, z):
        """
        The class in ``T/Z#`` of a point with effective coordinates ``z``
        """
        return self.quotient.project(z)

    def pairing(self, a, b):
        """
        The commutator pairing on ``T/Z#``, in Q/Z
        """
        n = self.spec.n
        total = 0
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                total += ai * self.pairing_matrix[i][j] * bj
        return QmodZ(total, n)

    def lagrangian(self):
        return lagrangian_decomposition(self.A, self.pairing)

    def to_dict(self):
        return {'zdag_generators': self.zdag_generators,
                'core_generators': self.core_generators,
                'quotient': list(self.A.invariant_factors),
                'pairing': self.pairing_matrix,
                'zind': self.zind,
                'cind': self.cind}


def center(spec):
    """
    The :class:`CenterData` of a split cover

    ``Z#`` is computed as the radical of the commutator form; it is then
    checked to coincide with ``Im(T# -> T)`` and to have index
    ``zind_lattice^2``.
    """
    eff = spec.effective
    eff.check_tame_factorization()
    zdag, core = eff.radical(), eff.core()
    if zdag != core:
        raise InternalInvariantViolation("the radical differs from Im(T# -> T) for a split cover",
                                         witness={'radical': zdag.to_list(), 'core': core.to_list()})
    data = CenterData(spec, zdag, core)
    expected = zind_lattice(spec.datum)
    if data.zind != expected:
        raise InternalInvariantViolation("zind = %d but #(Y/Y#) = %d" %(data.zind, expected),
                                         witness=spec.datum.to_dict())
    logger.debug("center: T/Z# = %s, zind %d" %(data.A, data.zind))
    return data

def is_central(spec, t):
    """
    Whether a lift of ``t`` commutes with the whole cover
    """
    return spec.effective.radical().contains(t.as_vector())

def is_in_core(spec, t):
    """
    Whether ``t`` lies in the central core ``Im(T# -> T)``
    """
    return spec.effective.core().contains(t.as_vector())

def center_equality_report(spec):
    """
    Compare, over all of ``(Z/n)^{2r}``, the points whose commutator with
    every generator of ``T_eff`` is trivial against ``Im(T# -> T)``

    The commutators are evaluated through Hilbert symbols, independently
    of the commutator form.

    Returns
    -------
    dict
        ``checked``, ``equal``, ``witness`` (first differing point or
        ``None``), ``zdag_order`` and ``core_order`` in the finite quotient
    """
    r, n = spec.rank, spec.n
    core = spec.effective.core()
    generators = []
    for k in range(2*r):
        e = [0]*(2*r)
        e[k] = 1
        generators.append(spec.point(e))

    checked, zdag_count, core_count = 0, 0, 0
    witness = None
    for z in itertools.product(range(n), repeat=2*r):
        t = spec.point(z)
        central = all(commutator(spec, t, u).is_one() for u in generators)
        in_core = core.contains(z)
        checked += 1
        zdag_count += central
        core_count += in_core
        if central != in_core and witness is None:
            witness = {'point': list(z), 'central': central, 'in_core': in_core}

    if witness is not None:
        logger.warning("center and core differ at %s" %witness)
    return {'checked': checked, 'equal': witness is None, 'witness': witness,
            'zdag_order': zdag_count, 'core_order': core_count}
