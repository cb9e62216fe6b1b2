"""
The cocycle of the extension ``mu_n -> Lambda~ -> Lambda``, ``Lambda = (Y#)^Fr``,
computed three ways

* the closed form ``(-1)^{y1.C.y2 (q-1)/n}``;
* through the cover: multiply representatives ``(varpi^y, 1)`` and read
  the discrepancy modulo ``T_Lambda``;
* through formal symbols over ``O[u, 1/u]``: expand ``{x_i(t1), x_j(t2)}``,
  take residues with ``d{u, u} = -1``, ``d{u, w} = w``, ``d{w, u} = 1/w``,
  ``d{w, w'} = 1``, and push out by ``h_n``.
"""
from .. import numpy
from .._cache import Cache, parameter, cached_property
from ..errors import InvalidDatum, InternalInvariantViolation, Unsupported
from ..lattice import Lattice, as_int_vector, matmul
from ..bd import BDDatum
from ..localfield import LocalFieldSpec, TorusPoint, MuN
from ..cover import CoverSpec, CoverElement, multiply, commutator

import logging

logger = logging.getLogger('bdt.cocycles')

class HeckeSpec(Cache):
    """
    A local field with a (possibly nonsplit, unramified) datum, and the
    lattice ``Lambda = (Y#)^Fr``

    Points of ``Lambda`` are given in the coordinates of ``Y``. The cover
    computations run on the split torus ``T_Lambda`` with cocharacter
    lattice ``Lambda`` and incarnation ``S.C.S^T``, ``S`` a basis of ``Lambda``.

    Parameters
    ----------
    field : LocalFieldSpec
    datum : BDDatum
    forced_lattice : Lattice, optional
        replace ``Lambda`` by this lattice; only used to build negative
        controls, the result is in general not a valid Hecke datum
    """
    def __init__(self, field, datum, forced_lattice=None):
        self.field = field
        self.datum = datum
        self.forced_lattice = forced_lattice
        if field.n != datum.n:
            raise InvalidDatum("the field has n = %d but the datum has n = %d" %(field.n, datum.n))

    @classmethod
    def from_dict(cls, d, symbol_convention='inverse'):
        field = LocalFieldSpec(d['q'], d['n'], symbol_convention=symbol_convention)
        return cls(field, BDDatum.from_dict(d))

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
        The :class:`BDDatum`
        """
        if not isinstance(val, BDDatum):
            raise InvalidDatum("datum must be a BDDatum")
        return val

    @parameter(default=None)
    def forced_lattice(self, val):
        """
        A lattice replacing ``(Y#)^Fr``, for negative controls
        """
        if val is not None and not isinstance(val, Lattice):
            raise InvalidDatum("forced_lattice must be a Lattice")
        return val

    @property
    def n(self):
        return self.datum.n

    @cached_property('datum', 'forced_lattice')
    def Lambda(self):
        """
        The lattice ``(Y#)^Fr`` (or the forced replacement)
        """
        if self.forced_lattice is not None:
            return self.forced_lattice
        return self.datum.Lambda

    @cached_property('datum', 'Lambda')
    def C_Lambda(self):
        """
        The incarnation ``S.C.S^T`` on ``Lambda``
        """
        S = self.Lambda.basis
        return matmul(matmul(S, self.datum.C), S.T) if S.shape[0] else S[:, :0].copy()

    @cached_property('field', 'C_Lambda')
    def cover(self):
        """
        The split cover of ``T_Lambda``
        """
        return CoverSpec(self.field, BDDatum.split(self.C_Lambda, self.n))

    @cached_property('field', 'datum')
    def full_cover(self):
        """
        The cover of ``T`` itself; only defined for split data
        """
        if not self.datum.torus.is_split:
            raise Unsupported("point-level computations are only modeled for split tori")
        return CoverSpec(self.field, self.datum)

    def coordinates(self, y):
        """
        Coordinates of ``y`` in the basis of ``Lambda``; raises ``InvalidDatum``
        if ``y`` is not in ``Lambda``
        """
        return self.Lambda.coordinates(y)

    def vector(self, lam):
        return self.Lambda.vector(lam)

    def representative(self, y):
        """
        The element ``(varpi^y, 1)`` of the cover of ``T_Lambda``
        """
        lam = self.coordinates(y)
        return CoverElement(TorusPoint.from_cocharacter(self.field, lam), MuN.one(self.n))

    def quadratic(self, y1, y2):
        """
        ``y1.C.y2``
        """
        r = self.datum.rank
        y1, y2 = as_int_vector(y1, length=r), as_int_vector(y2, length=r)
        return int(matmul(y1, matmul(self.datum.C, y2))) if r else 0

    def __repr__(self):
        return "<HeckeSpec: q=%d, n=%d, Lambda=%s>" %(self.field.q, self.n, self.Lambda.to_list())


def cocycle_closed(spec, y1, y2):
    """
    The closed form ``(-1)^{y1.C.y2 (q-1)/n}``
    """
    spec.coordinates(y1)
    spec.coordinates(y2)
    return spec.field.minus_one_power(spec.quadratic(y1, y2) * spec.field.zeta_step)

def reduce_mod_units(spec, element):
    """
    The class ``(lambda, a)`` of a cover element ``(varpi^lambda u, zeta)`` of
    ``T_Lambda`` modulo the units: ``(varpi^lambda u, zeta) = (varpi^lambda, a) (u, 1)``
    """
    cover = spec.cover
    lam = tuple(c.val for c in element.point.coords)
    u = TorusPoint([spec.field.element(0, c.unit_exp) for c in element.point.coords])
    base = TorusPoint.from_cocharacter(spec.field, lam)
    return lam, element.zeta * cover.cocycle(base, u).inverse()

def cocycle_oracle(spec, y1, y2, units=None):
    """
    The cocycle read off from the cover of ``T_Lambda``

    Parameters
    ----------
    units : pair of tuple, optional
        unit exponents ``(u1, u2)`` multiplying the representatives
        ``varpi^y1`` and ``varpi^y2``; the result does not depend on them
    """
    cover = spec.cover
    field = spec.field
    lam1, lam2 = spec.coordinates(y1), spec.coordinates(y2)
    k = len(lam1)
    u1, u2 = units if units is not None else ((0,)*k, (0,)*k)

    a = CoverElement(TorusPoint([field.element(v, e) for v, e in zip(lam1, u1)]), MuN.one(spec.n))
    b = CoverElement(TorusPoint([field.element(v, e) for v, e in zip(lam2, u2)]), MuN.one(spec.n))
    _, phase_a = reduce_mod_units(spec, a)
    _, phase_b = reduce_mod_units(spec, b)
    _, phase_ab = reduce_mod_units(spec, multiply(cover, a, b))
    return phase_ab * (phase_a * phase_b).inverse()

#------------------------------------------------------------------------------
# formal symbols
#------------------------------------------------------------------------------
class SymbolResidue(object):
    """
    Formal bookkeeping of symbols ``{u^a w, u^b w'}`` over ``O[u, 1/u]``
    and of their residues in ``F_q^x``

    Each symbol is expanded bilinearly into ``{u, u}``, ``{u, w}``,
    ``{w, u}`` and ``{w, w'}`` terms; only the counts needed for the
    residue are kept.
    """
    def __init__(self, field):
        self.field = field
        self.uu = 0
        self.uw = 0
        self.wu = 0

    def add(self, a, b, weight=1):
        """
        Add ``weight * {a, b}`` for elements ``a = u^val g^unit_exp``
        """
        self.uu += weight * a.val * b.val
        self.uw += weight * a.val * b.unit_exp
        self.wu += weight * b.val * a.unit_exp
        return self

    def residue(self):
        """
        The residue of the accumulated symbols, as a unit of ``F_q``
        """
        e = self.uu * self.field.half_order + self.uw - self.wu
        return self.field.element(0, e)


def cocycle_bd(spec, y1, y2):
    """
    The cocycle through formal residues and the pushout ``h_n``
    """
    lam1, lam2 = spec.coordinates(y1), spec.coordinates(y2)
    field = spec.field
    C = spec.C_Lambda
    sym = SymbolResidue(field)
    for i, a in enumerate(lam1):
        for j, b in enumerate(lam2):
            c = int(C[i, j])
            if c:
                sym.add(field.element(a, 0), field.element(b, 0), weight=c)
    return field.h_n(sym.residue())

def automorphism_action(spec, x, w, y):
    """
    The action of the automorphism attached to ``x`` in ``X`` and a unit
    ``w`` on ``y`` in ``Lambda``, ``Theta(w)^{<x, y> (q-1)/n}``

    It is computed through the Hilbert symbol ``Hilb(varpi^<x,y>, w)`` and
    through the residue ``d{u^<x,y>, w}`` followed by ``h_n``.

    Raises
    ------
    InternalInvariantViolation
        if the two paths disagree, which happens for the ``standard``
        symbol orientation
    """
    field = spec.field
    if not w.is_unit():
        raise InvalidDatum("the automorphism needs a unit, got valuation %d" %w.val)
    spec.coordinates(y)
    k = int(sum(int(a) * int(b) for a, b in zip(as_int_vector(x, length=spec.datum.rank),
                                                  as_int_vector(y, length=spec.datum.rank))))
    hecke_path = field.hilbert(field.element(k, 0), w)
    bd_path = field.h_n(SymbolResidue(field).add(field.element(k, 0), w).residue())
    if hecke_path != bd_path:
        raise InternalInvariantViolation("the Hilbert-symbol and residue paths disagree",
                                         witness={'x': list(x), 'w': w.to_dict(), 'y': list(y),
                                                  'hilbert': hecke_path.exponent, 'residue': bd_path.exponent})
    return hecke_path

def support_witness(spec, t):
    """
    A unit point ``k`` with ``commutator(k, t) != 1`` when ``val_T(t)`` is
    not in ``Lambda``, or ``None`` when it is; split data only
    """
    cover = spec.full_cover
    v = tuple(c.val for c in t.coords)
    if spec.Lambda.contains(v):
        return None
    Bv = matmul(spec.datum.B, as_int_vector(v, length=spec.datum.rank))
    for j, b in enumerate(Bv):
        if int(b) % spec.n:
            k = TorusPoint([spec.field.element(0, 1 if i == j else 0) for i in range(cover.rank)])
            if commutator(cover, k, t).is_one():
                raise InternalInvariantViolation("unit witness commutes with a point off the support",
                                                 witness={'point': t.to_dict(), 'unit': k.to_dict()})
            return k
    raise InternalInvariantViolation("no unit witness for a point off the support",
                                     witness={'point': t.to_dict()})
