"""
Fixed points and Tate cohomology of a lattice with a finite-order
automorphism
"""
from .. import numpy
from ..errors import InvalidDatum, InternalInvariantViolation
from .snf import as_int_matrix, is_unimodular, matmul, matrix_power, identity
from .groups import Lattice, kernel_lattice

import logging

logger = logging.getLogger('bdt.cohomology')

def check_automorphism(sigma, order=None):
    """
    Validate that ``sigma`` is unimodular and, if ``order`` is given, that
    ``sigma**order`` is the identity
    """
    sigma = as_int_matrix(sigma)
    if not is_unimodular(sigma):
        raise InvalidDatum("the action matrix %s is not unimodular" %sigma.tolist())
    if order is not None:
        if order < 1:
            raise InvalidDatum("the order of the action must be positive")
        r = sigma.shape[0]
        if not bool((matrix_power(sigma, order) == identity(r)).all()):
            raise InvalidDatum("the action matrix does not satisfy sigma^%d = 1" %order)
    return sigma

def fixed_sublattice(sigma):
    """
    The lattice ``ker(sigma - 1)`` of vectors fixed by ``sigma``
    """
    sigma = check_automorphism(sigma)
    return kernel_lattice(sigma - identity(sigma.shape[0]))

def restrict_action(L, sigma):
    """
    The matrix of ``sigma`` on the basis of a ``sigma``-stable lattice ``L``

    Columns are the coordinates of ``sigma(b_i)`` in the basis ``b_i``.
    """
    sigma = as_int_matrix(sigma)
    cols = []
    for b in L.basis:
        image = matmul(sigma, b)
        if not L.contains(image):
            raise InvalidDatum("lattice is not stable under the action")
        cols.append(L.coordinates(image))
    if not cols:
        return numpy.zeros((0, 0), dtype=object)
    return numpy.array(cols, dtype=object).T

def tate_h1_cyclic(L, sigma, d):
    """
    The first Tate cohomology ``ker(N) / im(sigma - 1)`` of the cyclic group
    of order ``d`` generated by ``sigma``, acting on ``L``

    Parameters
    ----------
    L : Lattice
        a ``sigma``-stable lattice
    sigma : array_like
        the action on the ambient coordinates
    d : int
        an order of ``sigma``, ``sigma**d = 1``

    Returns
    -------
    FiniteAbelianGroup
    """
    sigma = check_automorphism(sigma, d)
    s = restrict_action(L, sigma)
    k = L.rank
    norm = numpy.zeros((k, k), dtype=object)
    for i in range(d):
        norm = norm + matrix_power(s, i)

    K = kernel_lattice(norm)
    image = Lattice((s - identity(k)).T, ambient_rank=k)
    H = K.quotient(image)
    if H.free_rank:
        raise InternalInvariantViolation("Tate cohomology of a finite cyclic action came out infinite",
                                         witness={'sigma': sigma.tolist(), 'order': d})
    logger.debug("H^1 of order-%d action on rank-%d lattice: %s" %(d, k, H.torsion))
    return H.torsion
