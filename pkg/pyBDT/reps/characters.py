"""
Genuine characters of abelian subgroups of the cover, and their extensions

An abelian subgroup of the effective cover lying over a lattice ``D`` with
basis ``b_1..b_m`` is presented as ``Z^m + Z/n``: the vector ``(a, k)``
stands for ``s(b_1)^a_1 ... s(b_m)^a_m zeta^k`` with ``s(b) = (t_b, 1)``.
Such a product equals ``(t_z, zeta^(k + c(a)))`` for ``z = sum a_j b_j``,
where ``c`` is the section defect below; this is the only place where the
cocycle enters.
"""
from .. import numpy
from ..errors import InvalidDatum, InternalInvariantViolation
from ..lattice import QmodZ, Lattice, AbelianGroup, cokernel, solve_integer

import itertools
import logging

logger = logging.getLogger('bdt.characters')

def section_defect(quotient, basis, a):
    """
    The exponent ``c(a)`` with ``prod_j s(b_j)^a_j = (t_z, zeta^c(a))``
    """
    a = [int(x) for x in a]
    c = 0
    for j, aj in enumerate(a):
        if aj:
            c += (aj * (aj - 1) // 2) * quotient.sigma(basis[j], basis[j])
            for l in range(j + 1, len(a)):
                if a[l]:
                    c += aj * a[l] * quotient.sigma(basis[j], basis[l])
    return c


class GenuineCharacter(object):
    """
    A genuine character of the abelian subgroup of ``G_W`` over a lattice
    ``domain`` of effective coordinates

    Parameters
    ----------
    quotient : FiniteQuotient
    domain : Lattice
        an isotropic lattice containing the relation vectors of ``G_W``
    values : sequence
        the values in Q/Z on ``s(b_j)``, ``b_j`` the basis rows of ``domain``
    zeta : QmodZ, optional
        the value on ``zeta``; anything other than ``1/n`` is rejected
    """
    def __init__(self, quotient, domain, values, zeta=None):
        self.quotient = quotient
        self.domain = domain
        self.values = tuple(QmodZ(v) for v in values)
        n = quotient.n
        if zeta is not None and QmodZ(zeta) != QmodZ(1, n):
            raise InvalidDatum("the character sends zeta to %s, not 1/%d: it is not genuine" %(QmodZ(zeta), n))
        if len(self.values) != domain.rank:
            raise InvalidDatum("expected %d character values, got %d" %(domain.rank, len(self.values)))
        self.basis = [tuple(int(x) for x in row) for row in domain.basis]

        for i, b1 in enumerate(self.basis):
            for b2 in self.basis[i+1:]:
                if quotient.commutator_exponent(b1, b2):
                    raise InvalidDatum("the domain %s is not abelian in the cover" %domain.to_list())
        if not domain.contains_lattice(quotient.relation_lattice):
            raise InvalidDatum("the domain %s does not contain the relations of G_W" %domain.to_list())
        for rho in quotient.relation_vectors:
            if not self.evaluate(rho).is_zero():
                raise InvalidDatum("the character is nontrivial on the killed lift of %s" %(rho,))

    def evaluate(self, z, k=0):
        """
        The value on ``(t_z, zeta^k)``, in Q/Z
        """
        a = self.domain.coordinates(z)
        out = QmodZ(int(k) - section_defect(self.quotient, self.basis, a), self.quotient.n)
        for aj, v in zip(a, self.values):
            if aj:
                out = out + v * int(aj)
        return out

    def __call__(self, element):
        return self.evaluate(element.z, element.k)

    def restrict(self, sub):
        """
        The restriction to the subgroup over the lattice ``sub``
        """
        return GenuineCharacter(self.quotient, sub, [self.evaluate(b) for b in sub.basis])

    def is_trivial_on(self, sub):
        return all(self.evaluate(b).is_zero() for b in sub.basis)

    def __eq__(self, other):
        if not isinstance(other, GenuineCharacter):
            return NotImplemented
        return (self.quotient is other.quotient and self.domain == other.domain
                and self.values == other.values)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.domain, self.values))

    def to_dict(self):
        return {'domain': self.domain.to_list(), 'values': [str(v) for v in self.values]}

    def __repr__(self):
        return "GenuineCharacter(%s on %s)" %([str(v) for v in self.values], self.domain.to_list())


def unit_sublattice(quotient):
    """
    The lattice ``0 + Z^r`` of unit coordinates
    """
    r = quotient.rank
    return Lattice([[1 if j == r + i else 0 for j in range(2*r)] for i in range(r)], ambient_rank=2*r)


def extend_character(G, H_gens, values):
    """
    Extend a finite-order character from a subgroup to ``G``

    Generators of ``G`` are added one at a time; for a generator ``e`` of
    order ``m`` modulo the current subgroup the value is the smallest
    nonnegative ``a/m`` with ``a`` the value on ``m e``. Generators of
    infinite order modulo the subgroup get the value 0.

    Parameters
    ----------
    G : AbelianGroup
    H_gens : list of tuple
        generators of the subgroup, in the coordinates of ``G``
    values : list
        the character values on ``H_gens``, in Q/Z

    Returns
    -------
    tuple of QmodZ
        the values on the generators of ``G``
    """
    k = G.ngens
    gens = [G.normalize(h) for h in H_gens]
    vals = [QmodZ(v) for v in values]
    relations = []
    for i, d in enumerate(G.invariant_factors):
        v = [0] * k
        v[i] = d
        relations.append(tuple(v))

    out = []
    for j in range(k):
        e = [0] * k
        e[j] = 1
        cols = gens + relations
        A = numpy.array(cols, dtype=object).T if cols else numpy.zeros((k, 0), dtype=object)
        cok = cokernel(A)
        m = cok.group.element_order(cok.project(e))
        if m == 0:
            v = QmodZ(0)
        else:
            x = solve_integer(A, [m * c for c in e])
            if x is None:
                raise InternalInvariantViolation("%d e_%d lies in the subgroup but has no coordinates" %(m, j))
            a = QmodZ(0)
            for xi, vi in zip(x[:len(gens)], vals):
                a = a + vi * int(xi)
            v = a.divide(m)
        out.append(v)
        gens.append(tuple(e))
        vals.append(v)
    return tuple(out)

def presentation_relations(quotient, domain):
    """
    The relation columns of the subgroup of ``G_W`` over ``domain`` in its
    linear presentation ``Z^m + Z/n`` (the ``zeta`` coordinate last)
    """
    basis = [tuple(int(x) for x in row) for row in domain.basis]
    m = len(basis)
    cols = []
    for rho in quotient.relation_vectors:
        a = list(domain.coordinates(rho))
        cols.append(a + [-section_defect(quotient, basis, a)])
    cols.append([0] * m + [quotient.n])
    return numpy.array(cols, dtype=object).T

def genuine_characters(quotient, unramified=False):
    """
    Every genuine character of the center of ``G_W``

    The center ``Z~`` is presented as ``Z^m + Z/n`` modulo its relations;
    its characters are read off the invariant factors of that quotient
    and the genuine ones kept.

    Parameters
    ----------
    quotient : FiniteQuotient
    unramified : bool, optional
        keep only characters trivial on the central units

    Returns
    -------
    list of GenuineCharacter
    """
    zdag = quotient.center.zdag
    m = zdag.rank
    cok = cokernel(presentation_relations(quotient, zdag))
    if cok.free_rank:
        raise InternalInvariantViolation("the center of G_W came out infinite")
    P = cok.projection.matrix
    factors = cok.torsion.invariant_factors
    target = QmodZ(1, quotient.n)

    units = zdag.intersection(unit_sublattice(quotient)) if unramified else None

    out = []
    for psi in itertools.product(*[range(d) for d in factors]):
        phi = []
        for j in range(m + 1):
            val = QmodZ(0)
            for i, d in enumerate(factors):
                val = val + QmodZ(psi[i] * int(P[i][j]), d)
            phi.append(val)
        if phi[-1] != target:
            continue
        chi = GenuineCharacter(quotient, zdag, phi[:m])
        if units is not None and not chi.is_trivial_on(units):
            continue
        out.append(chi)
    logger.debug("%d genuine%s characters of the center" %(len(out), " unramified" if unramified else ""))
    return out

def character_from_values(quotient, values):
    """
    The genuine central character with the given values on the basis of ``Z#``
    """
    return GenuineCharacter(quotient, quotient.center.zdag, values)
