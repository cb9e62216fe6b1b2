"""
Finitely generated abelian groups, lattices and the homomorphisms
between them

Every group is presented on a fixed list of generators; an element is a
tuple of integers in those generators, reduced modulo the generator
orders. An order of ``0`` marks a free generator.
"""
from .. import numpy
from ..errors import InvalidDatum
from .snf import (as_int_matrix, as_int_vector, smith_decomposition, hermite_normal_form,
                  kernel_basis, solve_integer, matmul, identity)
from .qmodz import QmodZ

from collections import namedtuple
from fractions import Fraction
import itertools
import functools
from math import gcd
import logging

logger = logging.getLogger('bdt.groups')

def _lcm(a, b):
    return a * b // gcd(a, b) if a and b else 0

#------------------------------------------------------------------------------
# NotInImage
#------------------------------------------------------------------------------
class _NotInImage(object):
    """
    Verdict returned by :func:`solve_in_image` when no preimage exists
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __bool__(self):
        return False
    __nonzero__ = __bool__

    def __repr__(self):
        return "NotInImage"

NotInImage = _NotInImage()

#------------------------------------------------------------------------------
# groups
#------------------------------------------------------------------------------
class AbelianGroup(object):
    """
    The group ``Z/d1 x ... x Z/dk x Z^f`` in invariant-factor form

    Parameters
    ----------
    invariant_factors : list of int
        ``d1 | d2 | ... | dk``, each at least 2
    free_rank : int, optional
        the number ``f`` of free generators
    """
    def __init__(self, invariant_factors=(), free_rank=0):
        factors = tuple(int(d) for d in invariant_factors)
        for i, d in enumerate(factors):
            if d < 2:
                raise InvalidDatum("invariant factors must be at least 2, got %d" %d)
            if i and d % factors[i-1] != 0:
                raise InvalidDatum("invariant factors %s do not form a divisibility chain" %(list(factors),))
        if free_rank < 0:
            raise InvalidDatum("free rank must be nonnegative")
        self.invariant_factors = factors
        self.free_rank = int(free_rank)

    @property
    def orders(self):
        """Generator orders, ``0`` for the free generators"""
        return self.invariant_factors + (0,)*self.free_rank

    @property
    def ngens(self):
        return len(self.invariant_factors) + self.free_rank

    def is_finite(self):
        return self.free_rank == 0

    def is_trivial(self):
        return self.ngens == 0

    @property
    def order(self):
        """The group order, ``None`` when the group is infinite"""
        if not self.is_finite():
            return None
        return functools.reduce(lambda a, b: a*b, self.invariant_factors, 1)

    @property
    def exponent(self):
        if not self.is_finite():
            return 0
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def normalize(self, x):
        x = list(x)
        if len(x) != self.ngens:
            raise InvalidDatum("element %s has %d coordinates, expected %d" %(x, len(x), self.ngens))
        return tuple(int(a) % d if d else int(a) for a, d in zip(x, self.orders))

    def zero(self):
        return (0,)*self.ngens

    def add(self, x, y):
        return self.normalize([a+b for a, b in zip(x, y)])

    def neg(self, x):
        return self.normalize([-a for a in x])

    def scale(self, k, x):
        return self.normalize([k*a for a in x])

    def element_order(self, x):
        """
        Order of an element; ``0`` for elements of infinite order
        """
        x = self.normalize(x)
        order = 1
        for a, d in zip(x, self.orders):
            if d == 0:
                if a != 0: return 0
                continue
            order = _lcm(order, d // gcd(a, d))
        return order

    def elements(self):
        """
        Iterate over all elements in lexicographic order
        """
        if not self.is_finite():
            raise InvalidDatum("cannot enumerate the elements of an infinite group")
        return itertools.product(*[range(d) for d in self.invariant_factors])

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.orders == other.orders

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.orders)

    def __str__(self):
        parts = ["Z/%d" %d for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z^%d" %self.free_rank)
        return " x ".join(parts) if parts else "0"

    def __repr__(self):
        return "<%s: %s>" %(self.__class__.__name__, str(self))


class FiniteAbelianGroup(AbelianGroup):
    """
    A finite abelian group ``Z/d1 x ... x Z/dk``, ``d1 | ... | dk``
    """
    def __init__(self, invariant_factors=()):
        super(FiniteAbelianGroup, self).__init__(invariant_factors, free_rank=0)

    @classmethod
    def trivial(cls):
        return cls(())

    @classmethod
    def from_orders(cls, orders):
        """
        The invariant-factor form of ``Z/o1 x Z/o2 x ...``
        """
        orders = [int(o) for o in orders]
        if any(o <= 0 for o in orders):
            raise InvalidDatum("cyclic factor orders must be positive")
        if not orders:
            return cls.trivial()
        S = smith_decomposition(numpy.diag(numpy.array(orders, dtype=object)))
        return cls([d for d in S.diagonal if d > 1])

    def torsion_order(self, n):
        """
        Order of the ``n``-torsion subgroup
        """
        return functools.reduce(lambda a, d: a*gcd(d, n), self.invariant_factors, 1)


class DualGroup(FiniteAbelianGroup):
    """
    The character group of a finite abelian group, presented on the dual
    generators, with the evaluation pairing into Q/Z
    """
    def __init__(self, group):
        if not group.is_finite():
            raise InvalidDatum("character groups are only formed for finite groups")
        super(DualGroup, self).__init__(group.invariant_factors)
        self.group = group

    def pairing(self, chi, g):
        """
        Evaluate the character ``chi`` on the element ``g``
        """
        chi = self.normalize(chi)
        g = self.group.normalize(g)
        return sum((QmodZ(a*b, d) for a, b, d in zip(chi, g, self.invariant_factors)), QmodZ(0))

    def character(self, chi):
        """
        The character ``chi`` as a function on the group
        """
        return functools.partial(self.pairing, chi)


def character_group(G):
    """
    The Pontrjagin dual of ``G`` with its evaluation pairing
    """
    return DualGroup(G)

#------------------------------------------------------------------------------
# lattices
#------------------------------------------------------------------------------
class Lattice(AbelianGroup):
    """
    A sublattice of ``Z^r`` (or of ``(1/denominator) Z^r``)

    Parameters
    ----------
    basis : array_like
        generators as rows, in ambient coordinates; they are reduced to
        Hermite normal form so that equal lattices have equal bases
    ambient_rank : int, optional
        the rank ``r`` of the ambient lattice, required when ``basis`` is empty
    denominator : int, optional
        the vectors of the lattice are ``basis / denominator``
    """
    def __init__(self, basis, ambient_rank=None, denominator=1):
        B = as_int_matrix(basis, cols=ambient_rank)
        if ambient_rank is None:
            ambient_rank = B.shape[1]
        if B.shape[1] != ambient_rank:
            raise InvalidDatum("lattice generators have %d coordinates, expected %d" %(B.shape[1], ambient_rank))
        self.ambient_rank = int(ambient_rank)
        self.denominator = int(denominator)
        self.basis = hermite_normal_form(B)
        super(Lattice, self).__init__((), free_rank=self.basis.shape[0])

    @classmethod
    def full(cls, r, denominator=1):
        return cls(identity(r), ambient_rank=r, denominator=denominator)

    @classmethod
    def zero(cls, r, denominator=1):
        return cls(numpy.zeros((0, r), dtype=object), ambient_rank=r, denominator=denominator)

    @property
    def rank(self):
        return self.basis.shape[0]

    def is_full(self):
        if self.rank != self.ambient_rank:
            return False
        return bool((self.basis == identity(self.ambient_rank)).all())

    def _check_ambient(self, other):
        if self.ambient_rank != other.ambient_rank or self.denominator != other.denominator:
            raise InvalidDatum("lattices live in different ambient spaces")

    def coordinates(self, v):
        """
        Coordinates of the ambient vector ``v`` in this lattice's basis;
        raises ``InvalidDatum`` if ``v`` is not in the lattice
        """
        x = solve_integer(self.basis.T, as_int_vector(v, length=self.ambient_rank))
        if x is None:
            raise InvalidDatum("vector %s does not lie in the lattice" %(list(v),))
        return tuple(x)

    def contains(self, v):
        return solve_integer(self.basis.T, as_int_vector(v, length=self.ambient_rank)) is not None

    def contains_lattice(self, other):
        self._check_ambient(other)
        return all(self.contains(row) for row in other.basis)

    def vector(self, coords):
        """
        The ambient vector with the given coordinates
        """
        return tuple(matmul(as_int_vector(coords, length=self.rank), self.basis)) if self.rank else (0,)*self.ambient_rank

    def intersection(self, other):
        """
        The intersection of two lattices in the same ambient space
        """
        self._check_ambient(other)
        if self.rank == 0 or other.rank == 0:
            return Lattice.zero(self.ambient_rank, self.denominator)
        M = numpy.hstack([self.basis.T, -other.basis.T])
        K = kernel_basis(M)
        if K.shape[0] == 0:
            return Lattice.zero(self.ambient_rank, self.denominator)
        vectors = matmul(K[:, :self.rank], self.basis)
        return Lattice(vectors, ambient_rank=self.ambient_rank, denominator=self.denominator)

    def __add__(self, other):
        self._check_ambient(other)
        return Lattice(numpy.vstack([self.basis, other.basis]), ambient_rank=self.ambient_rank,
                       denominator=self.denominator)

    def quotient(self, sub):
        """
        The quotient ``self / sub`` as a :class:`Cokernel`; the projection
        acts on coordinates in ``self``'s basis
        """
        self._check_ambient(sub)
        cols = [self.coordinates(row) for row in sub.basis]
        A = numpy.array(cols, dtype=object).T if cols else numpy.zeros((self.rank, 0), dtype=object)
        return cokernel(A)

    def index(self, sub):
        """
        The index ``[self : sub]``, or ``None`` when it is infinite
        """
        return self.quotient(sub).order

    def project(self, quotient, v):
        """
        The class of the ambient vector ``v`` in ``quotient = self.quotient(sub)``
        """
        return quotient.project(self.coordinates(v))

    def to_list(self):
        return [[int(a) for a in row] for row in self.basis]

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.ambient_rank == other.ambient_rank and self.denominator == other.denominator
                and self.basis.shape == other.basis.shape and bool((self.basis == other.basis).all()))

    def __hash__(self):
        return hash((self.ambient_rank, self.denominator, tuple(map(tuple, self.to_list()))))

    def __repr__(self):
        den = "" if self.denominator == 1 else ", denominator=%d" %self.denominator
        return "<Lattice: rank %d in Z^%d%s, basis=%s>" %(self.rank, self.ambient_rank, den, self.to_list())


def kernel_lattice(M):
    """
    The lattice ``{x : M.x = 0}``
    """
    M = as_int_matrix(M)
    return Lattice(kernel_basis(M), ambient_rank=M.shape[1])

#------------------------------------------------------------------------------
# homomorphisms
#------------------------------------------------------------------------------
class GroupHom(object):
    """
    A homomorphism between presented abelian groups

    Parameters
    ----------
    domain, codomain : AbelianGroup
        the source and target (lattices act through their basis coordinates)
    matrix : array_like
        the ``codomain.ngens x domain.ngens`` integer matrix whose columns
        are the images of the domain generators
    """
    def __init__(self, domain, codomain, matrix):
        self.domain = domain
        self.codomain = codomain
        self.matrix = as_int_matrix(matrix, rows=codomain.ngens, cols=domain.ngens)
        if self.matrix.shape != (codomain.ngens, domain.ngens):
            raise InvalidDatum("homomorphism matrix has shape %s, expected %s"
                                %(self.matrix.shape, (codomain.ngens, domain.ngens)))
        for j, o in enumerate(domain.orders):
            if o and any(codomain.normalize(o * self.matrix[:, j])):
                raise InvalidDatum("homomorphism is not well defined on generator %d of order %d" %(j, o))

    def __call__(self, x):
        x = self.domain.normalize(x)
        if not self.domain.ngens:
            return self.codomain.zero()
        return self.codomain.normalize(matmul(self.matrix, numpy.array(x, dtype=object)))

    def compose(self, other):
        """
        The composite ``self o other``
        """
        return GroupHom(other.domain, self.codomain, matmul(self.matrix, other.matrix))

    def relation_matrix(self):
        """
        The matrix ``[A | diag(codomain orders)]`` whose column span is the
        preimage of the image in the free cover of the codomain
        """
        rel = [[o if i == j else 0 for i in range(self.codomain.ngens)]
               for j, o in enumerate(self.codomain.orders) if o]
        cols = [self.matrix]
        if rel:
            cols.append(numpy.array(rel, dtype=object).T)
        return numpy.hstack(cols) if len(cols) > 1 else self.matrix

    def cokernel(self):
        return cokernel(self)

    def is_surjective(self):
        return self.cokernel().group.is_trivial()

    def image_order(self):
        if not self.codomain.is_finite():
            raise InvalidDatum("image order requires a finite codomain")
        return self.codomain.order // self.cokernel().order

    def kernel(self):
        """
        The kernel as a :class:`Cokernel` of the domain relations inside
        the lattice of integer solutions
        """
        k = self.domain.ngens
        K = kernel_basis(self.relation_matrix())
        K = Lattice(K[:, :k], ambient_rank=k) if K.shape[0] else Lattice.zero(k)
        rel = [[o if i == j else 0 for i in range(k)] for j, o in enumerate(self.domain.orders) if o]
        R = Lattice(rel, ambient_rank=k) if rel else Lattice.zero(k)
        return K.quotient(R)

    def kernel_order(self):
        return self.kernel().order

    def is_injective(self):
        return self.kernel().group.is_trivial()

    def is_bijective(self):
        return self.is_injective() and self.is_surjective()

    def solve(self, b):
        return solve_in_image(self, b)

    def __repr__(self):
        return "<GroupHom: %r -> %r>" %(self.domain, self.codomain)


class Cokernel(namedtuple('Cokernel', ['torsion', 'free_rank', 'projection', 'lifts'])):
    """
    The cokernel of an integer matrix or homomorphism

    Attributes
    ----------
    torsion : FiniteAbelianGroup
        the torsion part in invariant factors
    free_rank : int
        the rank of the free part
    projection : GroupHom
        from the free cover ``Z^m`` of the target onto ``group``
    lifts : list of tuple
        a preimage in ``Z^m`` of each generator of ``group``
    """
    @property
    def group(self):
        return AbelianGroup(self.torsion.invariant_factors, self.free_rank)

    @property
    def order(self):
        return self.torsion.order if not self.free_rank else None

    def project(self, x):
        return self.projection(x)

    def lift(self, a):
        """
        A preimage in ``Z^m`` of the element ``a`` of ``group``
        """
        a = self.group.normalize(a)
        m = self.projection.domain.ngens
        out = [0]*m
        for coeff, vec in zip(a, self.lifts):
            for i in range(m):
                out[i] += coeff * vec[i]
        return tuple(out)


def cokernel(f):
    """
    The cokernel of a homomorphism or of an integer matrix (as a map
    ``Z^k -> Z^m``), in invariant factors with an explicit projection

    Parameters
    ----------
    f : GroupHom or array_like

    Returns
    -------
    Cokernel
    """
    if isinstance(f, GroupHom):
        A = f.relation_matrix()
        m = f.codomain.ngens
    else:
        A = as_int_matrix(f)
        m = A.shape[0]
    S = smith_decomposition(A)

    torsion, free, factors = [], [], []
    for i in range(m):
        d = S.diagonal[i] if i < len(S.diagonal) else 0
        if i < S.rank:
            if d > 1:
                torsion.append(i)
                factors.append(d)
        else:
            free.append(i)
    keep = torsion + free

    group = AbelianGroup(factors, len(free))
    rows = [S.Uinv[i] for i in keep]
    P = numpy.array(rows, dtype=object) if rows else numpy.zeros((0, m), dtype=object)
    projection = GroupHom(Lattice.full(m), group, P)
    lifts = [tuple(S.U[:, i]) for i in keep]
    logger.debug("cokernel of a %dx%d matrix: %s" %(A.shape[0], A.shape[1], group))
    return Cokernel(FiniteAbelianGroup(factors), len(free), projection, lifts)


def solve_in_image(f, b):
    """
    Some ``x`` with ``f(x) = b``, or ``NotInImage``

    The verdict is exact: ``b`` is tested against the column span of
    ``[A | diag(codomain orders)]`` through the Smith normal form.
    """
    b = f.codomain.normalize(b)
    x = solve_integer(f.relation_matrix(), b)
    if x is None:
        return NotInImage
    return f.domain.normalize(x[:f.domain.ngens])


def coinvariants(G, action):
    """
    The coinvariants ``G / (action - 1) G`` of a finite group under an
    endomorphism given on its generators
    """
    action = as_int_matrix(action, rows=G.ngens, cols=G.ngens)
    hom = GroupHom(G, G, action - identity(G.ngens))
    return cokernel(hom).torsion


def pairing_matrix_value(P, denominators, x, y):
    """
    ``sum_ij x_i P_ij y_j / denominators`` in Q/Z, for a pairing given by an
    integer matrix over a common denominator
    """
    total = Fraction(0)
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            if a and b:
                total += Fraction(a * P[i][j] * b, denominators)
    return QmodZ(total)
