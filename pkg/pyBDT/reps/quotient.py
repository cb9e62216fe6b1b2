"""
The finite effective quotient ``G_W`` of a split cover

``G_W`` is the effective cover modulo the central subgroup generated by
the lifts of ``varpi^(W e_i)`` and of ``g^((q-1) e_i)``. For ``n | W`` these
lifts commute with everything and meet ``mu_n`` trivially, so ``G_W`` is a
finite group of order ``W^r (q-1)^r n`` whose genuine representations are
exactly the genuine representations of the cover trivial on them.

An element is stored as ``(z, k)``, meaning ``(t_z, 1) * zeta^k`` with
``z`` reduced into ``[0, W)^r x [0, q-1)^r``.
"""
from .. import numpy
from .._cache import Cache, parameter, cached_property
from ..errors import InvalidDatum
from ..lattice import Lattice, matmul
from ..cover import CoverSpec, center

from collections import namedtuple
import itertools
import logging

logger = logging.getLogger('bdt.quotient')

QuotientElement = namedtuple('QuotientElement', ['z', 'k'])

class FiniteQuotient(Cache):
    """
    The finite group ``G_W`` attached to a split cover

    Parameters
    ----------
    cover : CoverSpec
    window : int, optional
        the valuation window ``W``, a positive multiple of ``n``; default ``n``
    """
    @staticmethod
    def help():
        """
        Print out the help information for the initialization parameters
        """
        print("Initialization Parameters for FiniteQuotient" + '\n' + '-'*50)
        for name in sorted(FiniteQuotient._param_names):
            par = getattr(FiniteQuotient, name)
            doc = name+" :\n"+par.__doc__
            if hasattr(par, '_default'):
                doc += "\n\n\tDefault: %s\n" %str(par._default)
            print(doc)

    def __init__(self, cover, window=None):
        self.cover = cover
        self.window = window
        self.validate()

    def update(self, **kwargs):
        super(FiniteQuotient, self).update(**kwargs)
        self.validate()

    def validate(self):
        if self.window % self.cover.n:
            raise InvalidDatum("the window W = %d is not a multiple of n = %d" %(self.window, self.cover.n))

    @parameter
    def cover(self, val):
        """
        The split :class:`CoverSpec`
        """
        if not isinstance(val, CoverSpec):
            raise InvalidDatum("cover must be a CoverSpec")
        return val

    @parameter(default=None)
    def window(self, val):
        """
        The valuation window ``W``; ``None`` means ``n``
        """
        if val is None:
            return self.cover.n
        if isinstance(val, bool) or int(val) != val or val < 1:
            raise InvalidDatum("the window must be a positive integer, got %r" %(val,))
        return int(val)

    @property
    def rank(self):
        return self.cover.rank

    @property
    def n(self):
        return self.cover.n

    @property
    def unit_order(self):
        return self.cover.field.q - 1

    @cached_property('cover')
    def effective(self):
        return self.cover.effective

    @cached_property('cover')
    def center(self):
        """
        The :class:`CenterData` of the cover
        """
        return center(self.cover)

    @cached_property('cover', 'window')
    def moduli(self):
        """
        The reduction moduli of the effective coordinates
        """
        return (self.window,) * self.rank + (self.unit_order,) * self.rank

    @cached_property('moduli')
    def relation_vectors(self):
        """
        The vectors ``W e_i`` and ``(q-1) e_{r+i}`` whose lifts are killed
        """
        out = []
        for i, m in enumerate(self.moduli):
            v = [0] * (2 * self.rank)
            v[i] = m
            out.append(tuple(v))
        return out

    @cached_property('moduli')
    def relation_lattice(self):
        return Lattice(self.relation_vectors, ambient_rank=2*self.rank) if self.rank else Lattice.zero(0)

    @cached_property('moduli')
    def point_count(self):
        """
        ``#G_W / n``, the number of effective points
        """
        out = 1
        for m in self.moduli:
            out *= m
        return out

    @property
    def order(self):
        return self.point_count * self.n

    #--------------------------------------------------------------------------
    # group law
    #--------------------------------------------------------------------------
    def reduce(self, z):
        return tuple(int(a) % m for a, m in zip(z, self.moduli))

    def sigma(self, z1, z2):
        """
        The cocycle exponent ``z1.Sigma.z2`` (an integer, read mod ``n``)
        """
        if not self.rank:
            return 0
        Sigma = self.effective.cocycle_form
        return int(matmul(numpy.array(z1, dtype=object), matmul(Sigma, numpy.array(z2, dtype=object))))

    def commutator_exponent(self, z1, z2):
        return (self.sigma(z1, z2) - self.sigma(z2, z1)) % self.n

    def element(self, z, k=0):
        z = tuple(int(a) for a in z)
        if len(z) != 2 * self.rank:
            raise InvalidDatum("expected %d effective coordinates, got %d" %(2*self.rank, len(z)))
        # (t_z, 1) with z unreduced differs from the reduced lift by a killed element
        red = self.reduce(z)
        shift = tuple(a - b for a, b in zip(z, red))
        return QuotientElement(red, (int(k) - self.sigma(red, shift)) % self.n)

    def identity(self):
        return QuotientElement((0,) * (2 * self.rank), 0)

    def zeta(self, k=1):
        return QuotientElement((0,) * (2 * self.rank), int(k) % self.n)

    def generator(self, i):
        """
        The lift of the ``i``-th effective basis vector
        """
        e = [0] * (2 * self.rank)
        e[i] = 1
        return self.element(e)

    def multiply(self, a, b):
        z = [x + y for x, y in zip(a.z, b.z)]
        red = self.reduce(z)
        shift = tuple(x - y for x, y in zip(z, red))
        k = a.k + b.k + self.sigma(a.z, b.z) - self.sigma(red, shift)
        return QuotientElement(red, k % self.n)

    def inverse(self, a):
        neg = self.reduce([-x for x in a.z])
        prod = self.multiply(a, QuotientElement(neg, 0))
        return QuotientElement(neg, (-prod.k) % self.n)

    def power(self, a, e):
        if e < 0:
            return self.power(self.inverse(a), -e)
        out, base = self.identity(), a
        while e:
            if e & 1:
                out = self.multiply(out, base)
            base = self.multiply(base, base)
            e >>= 1
        return out

    def commutator(self, a, b):
        """
        ``a b a^-1 b^-1``, always a central ``zeta^k``
        """
        return self.multiply(self.multiply(a, b), self.inverse(self.multiply(b, a)))

    def points(self):
        """
        The reduced effective coordinates, in lexicographic order
        """
        return itertools.product(*[range(m) for m in self.moduli])

    def unit_points(self):
        """
        The points of ``T^0``: zero valuation, any unit coordinates
        """
        r = self.rank
        for u in itertools.product(range(self.unit_order), repeat=r):
            yield (0,) * r + tuple(u)

    def elements(self):
        for z in self.points():
            for k in range(self.n):
                yield QuotientElement(z, k)

    def __repr__(self):
        return "<FiniteQuotient: W=%d, order %d>" %(self.window, self.order)
