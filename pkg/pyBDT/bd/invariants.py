"""
Lattice-level invariants of a Brylinski-Deligne datum

Vectors of ``Y`` are integer columns. The character lattice ``X`` and its
enlargements inside ``n^{-1} X`` are stored in scaled coordinates
``x' = n x``, so that ``X`` itself is ``n Z^r`` and ``n^{-1} X`` is ``Z^r``
with denominator ``n``.
"""
from .. import numpy
from ..errors import InternalInvariantViolation
from ..lattice import (Lattice, GroupHom, FiniteAbelianGroup, as_int_vector, matmul,
                       kernel_basis, coinvariants, tate_h1_cyclic)
from ..lattice.snf import identity

from collections import namedtuple
from fractions import Fraction
import logging

logger = logging.getLogger('bdt.invariants')

SharpData = namedtuple('SharpData', ['B', 'Ysharp', 'Xsharp', 'delta'])
FiniteInvariants = namedtuple('FiniteInvariants', ['mu', 'mu_hat', 'nu', 'nu_hat', 't_n', 't_hat_n'])
IndexBounds = namedtuple('IndexBounds', ['h1_n', 'rt_ratio'])

def beta(d, y1, y2):
    """
    The symmetric form ``(Q(y1+y2) - Q(y1) - Q(y2)) / n``
    """
    y1 = as_int_vector(y1, length=d.rank)
    y2 = as_int_vector(y2, length=d.rank)
    if not d.rank:
        return Fraction(0)
    return Fraction(int(matmul(y1, matmul(d.B, y2))), d.n)

def delta(d, y):
    """
    The image of ``y`` under ``delta : Y -> n^{-1} X``, in scaled coordinates
    """
    y = as_int_vector(y, length=d.rank)
    return tuple(matmul(d.B, y)) if d.rank else ()

#------------------------------------------------------------------------------
# the standard lattices
#------------------------------------------------------------------------------
def Y_lattice(d):
    return Lattice.full(d.rank)

def nY_lattice(d):
    return Lattice(d.n * identity(d.rank), ambient_rank=d.rank)

def X_lattice(d):
    """``X`` in scaled coordinates"""
    return Lattice(d.n * identity(d.rank), ambient_rank=d.rank, denominator=d.n)

def Xdual_lattice(d):
    """``n^{-1} X`` in scaled coordinates"""
    return Lattice.full(d.rank, denominator=d.n)

def _first_block(K, r):
    return K[:, :r] if K.shape[0] else numpy.zeros((0, r), dtype=object)

def sharp_lattices(d):
    """
    The lattices ``Y#`` and ``X#`` of a datum

    ``Y# = {y : B.y = 0 mod n}`` is read off from the integer kernel of
    ``[B | -n I]``; ``X#`` is the annihilator of ``Y#`` inside ``n^{-1} X``.
    The zero form has ``Y# = Y`` and so ``X# = X``.

    Returns
    -------
    SharpData
    """
    r, n, B = d.rank, d.n, d.B
    K = kernel_basis(numpy.hstack([B, -n * identity(r)]))
    Ysharp = Lattice(_first_block(K, r), ambient_rank=r)

    S = Ysharp.basis
    k = S.shape[0]
    K = kernel_basis(numpy.hstack([S, -n * identity(k)]))
    Xsharp = Lattice(_first_block(K, r), ambient_rank=r, denominator=n)

    delta_matrix = numpy.array([[Fraction(int(b), n) for b in row] for row in B], dtype=object).reshape(r, r)
    logger.debug("Y# basis %s, X# basis %s (over %d)" %(Ysharp.to_list(), Xsharp.to_list(), n))
    return SharpData(B, Ysharp, Xsharp, delta_matrix)

def is_sharp(d):
    """
    Whether ``beta`` is integral on all of ``Y``
    """
    return d.sharp.Ysharp.is_full()

def xqn_isomorphism(d):
    """
    The isomorphism ``Y/Y# -> X#/X`` induced by ``delta``

    Raises
    ------
    InternalInvariantViolation
        if the induced map is not bijective
    """
    sharp = d.sharp
    Y = Y_lattice(d)
    source = Y.quotient(sharp.Ysharp)
    target = sharp.Xsharp.quotient(X_lattice(d))

    cols = []
    for lift in source.lifts:
        image = delta(d, Y.vector(lift))
        cols.append(target.project(sharp.Xsharp.coordinates(image)))
    m = target.torsion.ngens
    matrix = numpy.array(cols, dtype=object).T if cols else numpy.zeros((m, 0), dtype=object)
    f = GroupHom(source.torsion, target.torsion, matrix.reshape(m, len(cols)))

    if not f.is_bijective():
        raise InternalInvariantViolation("delta does not induce an isomorphism Y/Y# -> X#/X",
                                         witness=d.to_dict())
    return f

def finite_invariants(d):
    """
    The finite groups attached to a datum, by their character lattices:
    ``mu = X#/X``, ``mu_hat = Y/Y#``, ``nu = n^{-1}X/X#``, ``nu_hat = Y#/nY``,
    ``t_n = n^{-1}X/X`` and ``t_hat_n = Y/nY``

    Returns
    -------
    FiniteInvariants
    """
    sharp = d.sharp
    Y, Xd = Y_lattice(d), Xdual_lattice(d)
    return FiniteInvariants(mu=sharp.Xsharp.quotient(X_lattice(d)).torsion,
                            mu_hat=Y.quotient(sharp.Ysharp).torsion,
                            nu=Xd.quotient(sharp.Xsharp).torsion,
                            nu_hat=sharp.Ysharp.quotient(nY_lattice(d)).torsion,
                            t_n=Xd.quotient(X_lattice(d)).torsion,
                            t_hat_n=Y.quotient(nY_lattice(d)).torsion)

def zind_lattice(d):
    """
    The central index ``#(Y^Fr / (Y#)^Fr)``
    """
    return d.torus.fixed_cocharacters.index(d.Lambda)

#------------------------------------------------------------------------------
# F-points and the core index bound
#------------------------------------------------------------------------------
def _quotient_action(parent, sub, sigma):
    """
    The finite group ``parent/sub`` with the action induced by ``sigma``
    on ambient coordinates
    """
    Q = parent.quotient(sub)
    cols = []
    for lift in Q.lifts:
        image = matmul(sigma, numpy.array(parent.vector(lift), dtype=object))
        cols.append(Q.project(parent.coordinates(image)))
    m = Q.torsion.ngens
    action = numpy.array(cols, dtype=object).T if cols else numpy.zeros((m, 0), dtype=object)
    return Q.torsion, action.reshape(m, len(cols))

def f_points(parent, sub, sigma):
    """
    The number of F-points of the finite multiplicative group whose
    character module is ``parent/sub`` with Frobenius ``sigma``; it is the
    order of the Frobenius coinvariants
    """
    G, action = _quotient_action(parent, sub, sigma)
    return coinvariants(G, action).order

def index_bounds(d):
    """
    The factors ``#H^1(F,T)_[n]`` and ``#nu(F) #mu(F) / #T^_[n](F)`` bounding
    ``#(Z# / Im R)`` and ``#(Im R / C#)``

    Returns
    -------
    IndexBounds
    """
    torus, sharp = d.torus, d.sharp
    sigma, sigma_dual = torus.frobenius, torus.dual_frobenius

    h1 = tate_h1_cyclic(Y_lattice(d), sigma, torus.order)
    h1_n = h1.torsion_order(d.n)

    nu_F = f_points(Xdual_lattice(d), sharp.Xsharp, sigma_dual)
    mu_F = f_points(sharp.Xsharp, X_lattice(d), sigma_dual)
    that_F = f_points(Y_lattice(d), nY_lattice(d), sigma)

    ratio = Fraction(nu_F * mu_F, that_F)
    if ratio.denominator != 1:
        raise InternalInvariantViolation("#nu(F) #mu(F) / #T^_[n](F) = %s is not an integer" %ratio,
                                         witness=d.to_dict())
    logger.debug("index bounds: H1_n = %d, nu(F)=%d, mu(F)=%d, T^_n(F)=%d" %(h1_n, nu_F, mu_F, that_F))
    return IndexBounds(h1_n, int(ratio))

def cind_bound(d):
    """
    The upper bound ``#H^1(F,T)_[n] #nu(F) #mu(F) / #T^_[n](F)`` on the
    core index; it is 1 for split tori
    """
    bounds = index_bounds(d)
    return bounds.h1_n * bounds.rt_ratio
