"""
Torus data and Brylinski-Deligne data, the inputs of every computation
"""
from .. import numpy
from .._cache import Cache, parameter, cached_property
from ..errors import InvalidDatum
from ..lattice import as_int_matrix, as_int_vector, matmul, smith_decomposition, Lattice
from ..lattice.snf import identity
from ..lattice.cohomology import check_automorphism, fixed_sublattice

from fractions import Fraction
import logging

logger = logging.getLogger('bdt.datum')

class TorusDatum(Cache):
    """
    An unramified torus of rank ``r``, described by the Frobenius action
    on its cocharacter lattice ``Y = Z^r``

    The character lattice ``X`` is the dual of ``Y`` in the dual basis,
    with Frobenius acting by the inverse transpose.

    Parameters
    ----------
    rank : int
        the rank ``r``
    frobenius : array_like, optional
        the ``r x r`` unimodular Frobenius matrix; default is the identity
    order : int, optional
        an order ``d`` of the Frobenius, ``frobenius**d = 1``; default 1
    """
    @staticmethod
    def help():
        """
        Print out the help information for the initialization parameters
        """
        print("Initialization Parameters for TorusDatum" + '\n' + '-'*50)
        for name in sorted(TorusDatum._param_names):
            par = getattr(TorusDatum, name)
            doc = name+" :\n"+par.__doc__
            if hasattr(par, '_default'):
                doc += "\n\n\tDefault: %s\n" %str(par._default)
            print(doc)

    def __init__(self, rank, frobenius=None, order=1):
        self.rank = rank
        self.frobenius = identity(self.rank) if frobenius is None else frobenius
        self.order = order
        self.validate()

    @classmethod
    def split(cls, rank):
        return cls(rank)

    def update(self, **kwargs):
        super(TorusDatum, self).update(**kwargs)
        self.validate()

    def validate(self):
        """
        Check the Frobenius matrix against the rank and its order
        """
        if self.frobenius.shape != (self.rank, self.rank):
            raise InvalidDatum("frobenius has shape %s but the rank is %d" %(self.frobenius.shape, self.rank))
        check_automorphism(self.frobenius, self.order)

    @parameter
    def rank(self, val):
        """
        The rank of the torus
        """
        if isinstance(val, bool) or int(val) != val or val < 0:
            raise InvalidDatum("rank must be a nonnegative integer, got %r" %(val,))
        return int(val)

    @parameter
    def frobenius(self, val):
        """
        The Frobenius action on the cocharacter lattice, as a square integer matrix
        """
        M = as_int_matrix(val, rows=0, cols=0)
        if M.shape[0] != M.shape[1]:
            raise InvalidDatum("frobenius must be a square matrix")
        return M

    @parameter(default=1)
    def order(self, val):
        """
        An order of the Frobenius matrix
        """
        if isinstance(val, bool) or int(val) != val or val < 1:
            raise InvalidDatum("frobenius order must be a positive integer, got %r" %(val,))
        return int(val)

    @cached_property('frobenius')
    def is_split(self):
        """
        Whether Frobenius acts trivially
        """
        return bool((self.frobenius == identity(self.rank)).all())

    @cached_property('frobenius')
    def frobenius_inverse(self):
        S = smith_decomposition(self.frobenius)
        return matmul(S.Vinv, S.Uinv)

    @cached_property('frobenius_inverse')
    def dual_frobenius(self):
        """
        The Frobenius action on the character lattice, the inverse transpose
        """
        return self.frobenius_inverse.T.copy()

    @cached_property('frobenius')
    def fixed_cocharacters(self):
        """
        The lattice ``Y^Fr`` of Frobenius-fixed cocharacters
        """
        return fixed_sublattice(self.frobenius)

    def to_dict(self):
        return {'rank': self.rank, 'frobenius': self.frobenius.tolist(), 'order': self.order}

    def __repr__(self):
        kind = "split" if self.is_split else "order-%d Frobenius" %self.order
        return "<TorusDatum: rank %d, %s>" %(self.rank, kind)


class BDDatum(Cache):
    """
    A Brylinski-Deligne datum: a torus, an incarnation matrix ``C`` with
    quadratic form ``Q(y) = y.C.y`` on ``Y``, and the degree ``n`` of the cover

    Parameters
    ----------
    torus : TorusDatum
    C : array_like
        the ``r x r`` incarnation matrix
    n : int
        the degree of the cover
    """
    def __init__(self, torus, C, n):
        self.torus = torus
        self.C = C
        self.n = n
        self.validate()

    @classmethod
    def split(cls, C, n):
        """
        A datum on the split torus of the matching rank
        """
        C = as_int_matrix(C)
        return cls(TorusDatum.split(C.shape[0]), C, n)

    @classmethod
    def from_dict(cls, d):
        """
        Build from the flat keys ``rank``, ``frobenius``, ``order``, ``C`` and ``n``
        """
        rank = d['rank']
        torus = TorusDatum(rank, d.get('frobenius'), d.get('order', 1))
        return cls(torus, d['C'], d['n'])

    def update(self, **kwargs):
        super(BDDatum, self).update(**kwargs)
        self.validate()

    def validate(self):
        """
        Check shapes and the Frobenius invariance of ``Q``
        """
        r = self.torus.rank
        if self.C.shape != (r, r):
            raise InvalidDatum("incarnation matrix has shape %s, expected (%d, %d)" %(self.C.shape, r, r))
        sigma = self.torus.frobenius
        if not bool((matmul(matmul(sigma.T, self.B), sigma) == self.B).all()):
            raise InvalidDatum("the quadratic form is not Frobenius-invariant")

    @parameter
    def torus(self, val):
        """
        The underlying :class:`TorusDatum`
        """
        if not isinstance(val, TorusDatum):
            raise InvalidDatum("torus must be a TorusDatum")
        return val

    @parameter
    def C(self, val):
        """
        The incarnation matrix, ``Q(y) = y.C.y``
        """
        M = as_int_matrix(val, rows=0, cols=0)
        if M.shape[0] != M.shape[1]:
            raise InvalidDatum("the incarnation matrix must be square")
        return M

    @parameter
    def n(self, val):
        """
        The degree of the cover, a positive integer
        """
        if isinstance(val, bool) or int(val) != val or val < 1:
            raise InvalidDatum("the degree n must be a positive integer, got %r" %(val,))
        return int(val)

    @property
    def rank(self):
        return self.torus.rank

    @cached_property('C')
    def B(self):
        """
        The symmetric integer form ``C + C^T``, equal to ``n * beta``
        """
        return self.C + self.C.T

    def Q(self, y):
        """
        The quadratic form ``y.C.y``
        """
        y = as_int_vector(y, length=self.rank)
        return int(matmul(y, matmul(self.C, y))) if self.rank else 0

    @cached_property('B', 'n')
    def sharp(self):
        """
        The :class:`SharpData` of this datum
        """
        from .invariants import sharp_lattices
        return sharp_lattices(self)

    @cached_property('sharp', 'torus')
    def finite(self):
        """
        The :class:`FiniteInvariants` of this datum
        """
        from .invariants import finite_invariants
        return finite_invariants(self)

    @cached_property('sharp', 'torus')
    def Lambda(self):
        """
        The lattice ``(Y#)^Fr`` supporting the spherical Hecke algebra
        """
        return self.sharp.Ysharp.intersection(self.torus.fixed_cocharacters)

    def restrict(self, S):
        """
        The split datum with incarnation ``S.C.S^T`` on the lattice with
        basis rows ``S``
        """
        S = as_int_matrix(S, cols=self.rank)
        return BDDatum.split(matmul(matmul(S, self.C), S.T), self.n)

    def to_dict(self):
        d = self.torus.to_dict()
        d.update({'C': self.C.tolist(), 'n': self.n})
        return d

    def __repr__(self):
        return "<BDDatum: rank %d, n=%d, C=%s>" %(self.rank, self.n, self.C.tolist())
