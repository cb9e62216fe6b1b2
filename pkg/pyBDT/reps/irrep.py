"""
Genuine irreducible representations of a split cover, as monomial
representations induced from a maximal abelian subgroup

Given a genuine central character ``chi`` and a Lagrangian decomposition
``L x L*`` of ``T/Z#``, the preimage ``M~`` of ``L`` is maximal abelian,
``chi`` extends to ``chi_M`` on it, and ``pi = Ind chi_M`` has a basis
indexed by the cosets of ``M~``, represented by the lifts of ``L*``.
"""
from ..errors import InvalidDatum, InternalInvariantViolation
from ..lattice import QmodZ, Lattice, AbelianGroup
from ..cover import subgroup_elements
from ..hecke import Cyclotomic
from .characters import GenuineCharacter, extend_character, section_defect

from fractions import Fraction
import logging

logger = logging.getLogger('bdt.irrep')

class MonomialMatrix(object):
    """
    A monomial matrix, stored by columns: column ``i`` has the single
    entry ``exp(2 pi i v)`` in row ``j`` for ``columns[i] = (j, v)``
    """
    __slots__ = ('columns',)

    def __init__(self, columns):
        self.columns = tuple((int(j), QmodZ(v)) for j, v in columns)

    @classmethod
    def scalar(cls, d, v):
        return cls([(i, v) for i in range(d)])

    def __mul__(self, other):
        out = []
        for j, v in other.columns:
            i, w = self.columns[j]
            out.append((i, v + w))
        return MonomialMatrix(out)

    def inverse(self):
        out = [None] * len(self.columns)
        for i, (j, v) in enumerate(self.columns):
            out[j] = (i, -v)
        return MonomialMatrix(out)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** -e
        out = MonomialMatrix.scalar(len(self.columns), 0)
        for _ in range(e):
            out = out * self
        return out

    def trace(self):
        out = Cyclotomic.zero()
        for i, (j, v) in enumerate(self.columns):
            if i == j:
                out = out + Cyclotomic.from_qmodz(v)
        return out

    def __eq__(self, other):
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        return self.columns == other.columns

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.columns)

    def to_dict(self):
        """
        The permutation and the phases of the nonzero entries
        """
        return {'permutation': [j for j, _ in self.columns],
                'phases': [str(v) for _, v in self.columns]}


class GenuineIrrep(object):
    """
    The representation ``Ind_{M~}^{G_W} chi_M``

    Parameters
    ----------
    quotient : FiniteQuotient
    chi : GenuineCharacter
        a genuine character of the center, on the lattice ``Z#``
    lagrangian : LagrangianPair, optional
        default is the canonical decomposition of ``T/Z#``
    """
    def __init__(self, quotient, chi, lagrangian=None):
        self.quotient = quotient
        center = quotient.center
        if chi.domain != center.zdag:
            raise InvalidDatum("the central character must be given on Z# = %s" %center.zdag.to_list())
        self.chi = chi
        self.lagrangian = lagrangian if lagrangian is not None else center.lagrangian()

        r2 = 2 * quotient.rank
        lifts = [center.quotient.lift(x) for x in self.lagrangian.L_gens]
        rows = [list(b) for b in center.zdag.to_list()] + [list(v) for v in lifts]
        self.M = Lattice(rows, ambient_rank=r2) if rows else Lattice.zero(r2)
        self.chi_M = self._extend(chi)

        reps = set()
        for a in subgroup_elements(center.A, self.lagrangian.Lstar_gens):
            reps.add(quotient.reduce(center.quotient.lift(a)))
        self.coset_reps = sorted(reps)
        self._cosets = Lattice.full(r2).quotient(self.M) if r2 else None
        self._index = dict((self._coset_key(z), i) for i, z in enumerate(self.coset_reps))
        if len(self._index) != len(self.coset_reps):
            raise InternalInvariantViolation("coset representatives are not distinct modulo M")
        logger.debug("irrep of dimension %d induced from M = %s" %(self.dimension, self.M.to_list()))

    def _extend(self, chi):
        """
        Extend ``chi`` from ``Z~`` to ``M~`` through the linear presentation of ``M~``
        """
        q, n = self.quotient, self.quotient.n
        basis = [tuple(int(x) for x in row) for row in self.M.basis]
        k = len(basis)
        # coordinates (zeta, a_1..a_k)
        G = AbelianGroup((n,) if n > 1 else (), k)
        offset = 1 if n > 1 else 0
        gens, vals = [], []
        for b, v in zip(chi.basis, chi.values):
            a = list(self.M.coordinates(b))
            c = -section_defect(q, basis, a)
            gens.append(((c,) if offset else ()) + tuple(a))
            vals.append(v)
        if offset:
            gens.append((1,) + (0,) * k)
            vals.append(QmodZ(1, n))
        ext = extend_character(G, gens, vals)
        return GenuineCharacter(q, self.M, ext[offset:])

    def _coset_key(self, z):
        if self._cosets is None:
            return ()
        return tuple(self._cosets.project(z))

    @property
    def dimension(self):
        return len(self.coset_reps)

    @property
    def central_character(self):
        return self.chi

    def action(self, g):
        """
        The monomial matrix of the element ``g`` of ``G_W``
        """
        q = self.quotient
        cols = []
        for r in self.coset_reps:
            h = q.multiply(g, q.element(r))
            j = self._index[self._coset_key(h.z)]
            m = q.multiply(q.inverse(q.element(self.coset_reps[j])), h)
            cols.append((j, self.chi_M(m)))
        return MonomialMatrix(cols)

    def trace(self, g):
        return self.action(g).trace()

    @property
    def generators(self):
        """
        The generators of ``G_W``: the effective basis lifts, then ``zeta``
        """
        q = self.quotient
        return [q.generator(i) for i in range(2 * q.rank)] + [q.zeta()]

    def matrices(self):
        return [self.action(g) for g in self.generators]

    def check_relations(self):
        """
        Verify the power relations of the generators and the commutator
        relations ``pi(a) pi(b) pi(a)^-1 pi(b)^-1 = eps(Comm(a, b))``

        Raises
        ------
        InternalInvariantViolation
            on the first failing relation
        """
        q = self.quotient
        d = self.dimension
        gens = self.generators
        mats = [self.action(g) for g in gens]
        orders = list(q.moduli) + [q.n]
        for g, A, o in zip(gens, mats, orders):
            power = q.power(g, o)
            if A ** o != self.action(power):
                raise InternalInvariantViolation("power relation fails for a generator",
                                                 witness={'generator': list(g.z), 'zeta': g.k, 'order': o})
        for i, (a, A) in enumerate(zip(gens, mats)):
            for b, B in zip(gens[i+1:], mats[i+1:]):
                k = q.commutator(a, b).k
                expected = MonomialMatrix.scalar(d, QmodZ(k, q.n))
                if A * B * A.inverse() * B.inverse() != expected:
                    raise InternalInvariantViolation("commutator relation fails",
                                                     witness={'a': list(a.z), 'b': list(b.z), 'zeta_exponent': k})
        return True

    def character_table(self):
        """
        The nonzero values of the character on the points ``(t_z, 1)``
        """
        out = []
        for z in self.quotient.points():
            tr = self.trace(self.quotient.element(z))
            if not tr.is_zero():
                out.append({'point': list(z), 'trace': tr.to_list(), 'level': tr.N})
        return out

    def to_dict(self):
        return {'dimension': self.dimension,
                'coset_reps': [list(r) for r in self.coset_reps],
                'central_character': self.chi.to_dict(),
                'generators': [m.to_dict() for m in self.matrices()],
                'character': self.character_table()}

    def __repr__(self):
        return "<GenuineIrrep: dimension %d>" %self.dimension


def build_irrep(spec, chi):
    """
    The genuine irreducible representation with central character ``chi``,
    built on the default Lagrangian decomposition

    Parameters
    ----------
    spec : CoverSpec or FiniteQuotient
        the cover of ``chi``, or the finite quotient carrying it
    chi : GenuineCharacter
    """
    quotient = chi.quotient
    if spec is not quotient and spec is not quotient.cover:
        raise InvalidDatum("the character is defined on a different cover")
    return GenuineIrrep(quotient, chi)

def character_fn(pi, g):
    """
    The character ``Tr pi(g)``, exact in ``Q(zeta)``
    """
    return pi.trace(g)

def character_norm(pi):
    """
    ``(1/#G_W) sum_g |Tr pi(g)|^2``

    The scalar ``zeta`` does not change ``|Tr|``, so the sum runs over the
    points ``(t_z, 1)`` and is divided by their number.
    """
    q = pi.quotient
    total = Cyclotomic.zero()
    for z in q.points():
        total = total + pi.trace(q.element(z)).abs2()
    return total * Cyclotomic.rational(Fraction(1, q.point_count))

def same_character(pi1, pi2):
    """
    Whether two representations of the same ``G_W`` have equal characters
    on every point
    """
    q = pi1.quotient
    if pi2.quotient is not q:
        raise InvalidDatum("the representations live on different quotients")
    return all(pi1.trace(q.element(z)) == pi2.trace(q.element(z)) for z in q.points())
