"""
The cover ``mu_n -> T~ -> T`` of a split torus, incarnated by ``C``

Multiplication is ``(s, z1)(t, z2) = (st, z1 z2 sigma_C(s, t))`` with the
cocycle ``sigma_C(s, t) = prod_ij Hilb(x_i(s), x_j(t))^{c_ij}``.
"""
from .._cache import Cache, parameter, cached_property
from ..errors import InvalidDatum, Unsupported
from ..bd import BDDatum
from ..localfield import LocalFieldSpec, TorusPoint, MuN, hilbert_pairing_T

import functools
import logging

logger = logging.getLogger('bdt.cover')

class CoverSpec(Cache):
    """
    A local field together with a split Brylinski-Deligne datum of the same degree

    Parameters
    ----------
    field : LocalFieldSpec
    datum : BDDatum
        must be split; point-level arithmetic of nonsplit covers is not modeled
    """
    def __init__(self, field, datum):
        self.field = field
        self.datum = datum
        self.validate()

    @classmethod
    def from_dict(cls, d, symbol_convention='inverse'):
        field = LocalFieldSpec(d['q'], d['n'], symbol_convention=symbol_convention)
        return cls(field, BDDatum.from_dict(d))

    def update(self, **kwargs):
        super(CoverSpec, self).update(**kwargs)
        self.validate()

    def validate(self):
        if self.field.n != self.datum.n:
            raise InvalidDatum("the field has n = %d but the datum has n = %d" %(self.field.n, self.datum.n))
        if not self.datum.torus.is_split:
            raise Unsupported("point-level computations are only modeled for split tori")

    @parameter
    def field(self, val):
        """
        The :class:`LocalFieldSpec`
        """
        if not isinstance(val, LocalFieldSpec):
            raise InvalidDatum("field must be a LocalFieldSpec")
        return val

    @parameter
    def datum(self, val):
        """
        The split :class:`BDDatum`
        """
        if not isinstance(val, BDDatum):
            raise InvalidDatum("datum must be a BDDatum")
        return val

    @property
    def rank(self):
        return self.datum.rank

    @property
    def n(self):
        return self.datum.n

    @cached_property('field', 'datum')
    def effective(self):
        """
        The :class:`EffectiveGroup` of this cover
        """
        from .effective import EffectiveGroup
        return EffectiveGroup(self)

    def point(self, z):
        """
        The torus point with effective coordinates ``z``
        """
        return TorusPoint.from_vector(self.field, z)

    def element(self, point, zeta=0):
        if not isinstance(zeta, MuN):
            zeta = self.field.mu(zeta)
        return CoverElement(point, zeta)

    def identity(self):
        return CoverElement(TorusPoint.identity(self.field, self.rank), MuN.one(self.n))

    def _check_point(self, t):
        if t.rank != self.rank:
            raise InvalidDatum("point of rank %d on a cover of rank %d" %(t.rank, self.rank))

    def cocycle(self, s, t):
        """
        ``sigma_C(s, t)``
        """
        self._check_point(s)
        self._check_point(t)
        out = MuN.one(self.n)
        C = self.datum.C
        for i in range(self.rank):
            for j in range(self.rank):
                c = int(C[i, j])
                if c:
                    out = out * self.field.hilbert(s.coords[i], t.coords[j]) ** c
        return out

    def __repr__(self):
        return "<CoverSpec: q=%d, n=%d, C=%s>" %(self.field.q, self.n, self.datum.C.tolist())


class CoverElement(object):
    """
    An element ``(t, zeta)`` of the cover
    """
    __slots__ = ('point', 'zeta')

    def __init__(self, point, zeta):
        self.point = point
        self.zeta = zeta

    def __eq__(self, other):
        if not isinstance(other, CoverElement):
            return NotImplemented
        return self.point == other.point and self.zeta == other.zeta

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.point, self.zeta))

    def __repr__(self):
        return "CoverElement(%r, %r)" %(self.point, self.zeta)


def multiply(spec, a, b):
    """
    The product of two cover elements
    """
    return CoverElement(a.point * b.point, a.zeta * b.zeta * spec.cocycle(a.point, b.point))

def inverse(spec, a):
    """
    The inverse ``(t^-1, zeta^-1 sigma(t, t^-1)^-1)``
    """
    t_inv = a.point.inverse()
    return CoverElement(t_inv, (a.zeta * spec.cocycle(a.point, t_inv)).inverse())

def commutator(spec, t1, t2):
    """
    The commutator of lifts of ``t1`` and ``t2``, ``sigma(t1, t2) / sigma(t2, t1)``
    """
    return spec.cocycle(t1, t2) * spec.cocycle(t2, t1).inverse()

def delta_j(spec, t):
    """
    The point of the dual torus with coordinates ``prod_i t_i^{b_ji}``
    """
    spec._check_point(t)
    B = spec.datum.B
    coords = []
    for j in range(spec.rank):
        c = spec.field.one()
        for i in range(spec.rank):
            c = c * t.coords[i] ** int(B[j, i])
        coords.append(c)
    return TorusPoint(coords)

def commutator_formula(spec, t1, t2):
    """
    The commutator evaluated as the Hilbert pairing ``Hilb_T(delta_j t1, t2)``
    """
    return hilbert_pairing_T(spec.field, delta_j(spec, t1), t2)
