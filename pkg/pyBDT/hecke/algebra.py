"""
The genuine spherical Hecke algebra as the twisted group algebra
``C_eps[Lambda~]``

Elements are finitely supported functions on ``Lambda`` with exact
cyclotomic coefficients; ``delta_y`` is the function supported on the
representative ``(varpi^y, 1)``.
"""
from ..errors import InvalidDatum
from ..lattice import as_int_vector
from ..localfield import TorusPoint
from ..cover import commutator
from .cyclotomic import Cyclotomic
from .cocycles import cocycle_closed, cocycle_oracle, cocycle_bd

import itertools
import logging

logger = logging.getLogger('bdt.hecke')

COCYCLE_PATHS = {'closed': cocycle_closed, 'oracle': cocycle_oracle, 'bd': cocycle_bd}

class HeckeElement(object):
    """
    A finitely supported function on ``Lambda`` with values in ``Q(zeta_n)``

    Parameters
    ----------
    n : int
        the degree of the cover; coefficients live at level ``n``
    terms : dict, optional
        map from ``Y``-coordinate tuples to :class:`Cyclotomic` coefficients
    """
    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for y, c in (terms or {}).items():
            self._accumulate(tuple(int(v) for v in y), c)

    def _accumulate(self, y, c):
        total = self.terms.get(y, Cyclotomic.zero(self.n)) + c
        if total.is_zero():
            self.terms.pop(y, None)
        else:
            self.terms[y] = total

    @property
    def support(self):
        return sorted(self.terms)

    def coefficient(self, y):
        return self.terms.get(tuple(y), Cyclotomic.zero(self.n))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = HeckeElement(self.n, self.terms)
        for y, c in other.terms.items():
            out._accumulate(y, c)
        return out

    def __neg__(self):
        return HeckeElement(self.n, dict((y, -c) for y, c in self.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return HeckeElement(self.n, dict((y, c * v) for y, v in self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return (self - other).is_zero()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def to_dict(self):
        return [{'y': list(y), 'coefficients': self.terms[y].to_list()} for y in self.support]

    def __repr__(self):
        return "HeckeElement(%s)" %", ".join("%s: %r" %(y, self.terms[y]) for y in self.support)


def delta(spec, y, zeta=None):
    """
    The basis function ``delta`` of ``zeta (varpi^y, 1)``, which is
    ``eps(zeta)^-1 delta_y``

    Parameters
    ----------
    spec : HeckeSpec
    y : array_like
        a point of ``Lambda`` in ``Y`` coordinates
    zeta : MuN, optional
    """
    spec.coordinates(y)
    c = Cyclotomic.one(spec.n)
    if zeta is not None:
        c = Cyclotomic.root_of_unity(-zeta.exponent, spec.n)
    return HeckeElement(spec.n, {tuple(as_int_vector(y)): c})

def convolve(spec, f1, f2, path='closed'):
    """
    The convolution product, the bilinear extension of
    ``delta_y1 * delta_y2 = eps(c(y1, y2))^-1 delta_{y1+y2}``

    Parameters
    ----------
    path : str, optional
        which cocycle to use: ``'closed'`` (default), ``'oracle'`` or ``'bd'``
    """
    try:
        cocycle = COCYCLE_PATHS[path]
    except KeyError:
        raise InvalidDatum("cocycle path should be one of %s, not %r" %(sorted(COCYCLE_PATHS), path))

    out = HeckeElement(spec.n)
    for y1, c1 in f1.terms.items():
        for y2, c2 in f2.terms.items():
            zeta = cocycle(spec, y1, y2)
            y = tuple(a + b for a, b in zip(y1, y2))
            out._accumulate(y, c1 * c2 * Cyclotomic.root_of_unity(-zeta.exponent, spec.n))
    return out

def lattice_box(spec, bound):
    """
    The points of ``Lambda`` with basis coordinates in ``[-bound, bound]``,
    in ``Y`` coordinates
    """
    k = spec.Lambda.rank
    out = []
    for lam in itertools.product(range(-bound, bound + 1), repeat=k):
        out.append(tuple(int(v) for v in spec.vector(lam)) if k else (0,) * spec.datum.rank)
    return out

def is_commutative(spec, bound):
    """
    Whether the Hecke algebra on ``Lambda`` is commutative, tested on the
    box of radius ``bound``

    Besides ``delta_y1 * delta_y2 = delta_y2 * delta_y1`` this checks that
    the representatives ``varpi^y`` commute in the cover of ``T_Lambda``
    with each other and with the units, which is what makes the algebra of
    bi-``T_Lambda``-invariant functions a twisted group algebra at all.
    """
    box = lattice_box(spec, bound)
    for y1, y2 in itertools.combinations(box, 2):
        a = convolve(spec, delta(spec, y1), delta(spec, y2))
        b = convolve(spec, delta(spec, y2), delta(spec, y1))
        if a != b:
            logger.info("delta_%s and delta_%s do not commute" %(y1, y2))
            return False

    cover = spec.cover
    field = spec.field
    k = cover.rank
    units = [TorusPoint([field.element(0, 1 if i == j else 0) for i in range(k)]) for j in range(k)]
    points = [TorusPoint.from_cocharacter(field, spec.coordinates(y)) for y in box]
    for s in points:
        for g in units:
            if not commutator(cover, s, g).is_one():
                logger.info("%r does not commute with the unit %r" %(s, g))
                return False
        for t in points:
            if not commutator(cover, s, t).is_one():
                logger.info("%r and %r do not commute" %(s, t))
                return False
    return True

def structure_table(spec, bound):
    """
    The structure constants ``c(y1, y2)`` on the box of radius ``bound``,
    sorted by ``(y1, y2)``
    """
    box = sorted(lattice_box(spec, bound))
    out = []
    for y1 in box:
        for y2 in box:
            out.append({'y1': list(y1), 'y2': list(y2),
                        'zeta_exponent': cocycle_closed(spec, y1, y2).exponent})
    return out
