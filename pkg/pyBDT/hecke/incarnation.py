"""
Changing the incarnation of a fixed quadratic form, and Baer sums of
incarnations
"""
from ..errors import InvalidDatum
from ..lattice import as_int_matrix, as_int_vector, matmul
from ..bd import BDDatum
from ..localfield import MuN
from .cocycles import HeckeSpec, cocycle_closed, cocycle_oracle

import logging

logger = logging.getLogger('bdt.incarnation')

def with_incarnation(spec, C):
    """
    A :class:`HeckeSpec` on the same field and torus with incarnation ``C``
    and the same ``Lambda``
    """
    datum = BDDatum(spec.datum.torus, C, spec.n)
    return HeckeSpec(spec.field, datum, forced_lattice=spec.Lambda)

def _upper_difference(spec, C0):
    C0 = as_int_matrix(C0, rows=spec.datum.rank, cols=spec.datum.rank)
    A = spec.datum.C - C0
    r = spec.datum.rank
    if A.shape != (r, r) or not bool((A + A.T == 0).all()):
        raise InvalidDatum("the incarnations %s and %s define different quadratic forms"
                           %(C0.tolist(), spec.datum.C.tolist()))
    U = A.copy()
    for i in range(r):
        for j in range(i + 1):
            U[i, j] = 0
    return C0, U

def incarnation_change(spec, C0, y, zeta):
    """
    The isomorphism from the extension incarnated by ``C0`` to the one
    incarnated by ``spec.datum.C``, on the element ``(y, zeta)``

    With ``A = C - C0`` alternating and ``U`` its strictly upper part, the
    map is ``(y, zeta) -> (y, zeta prod_{i<j} Hilb(varpi^y_i, varpi^y_j)^a_ij)``.

    Returns
    -------
    MuN
        the new central coordinate; ``y`` is unchanged
    """
    C0, U = _upper_difference(spec, C0)
    spec.coordinates(y)
    y = as_int_vector(y, length=spec.datum.rank)
    N = int(matmul(y, matmul(U, y))) if len(y) else 0
    return zeta * spec.field.minus_one_power(N * spec.field.zeta_step)

def check_incarnation_change(spec, C0, y1, y2):
    """
    Whether :func:`incarnation_change` carries the product of ``(y1, 1)``
    and ``(y2, 1)`` for ``C0`` to the product of their images for ``C``
    """
    C0, _ = _upper_difference(spec, C0)
    source = with_incarnation(spec, C0)
    one = MuN.one(spec.n)
    y12 = [a + b for a, b in zip(y1, y2)]
    lhs = incarnation_change(spec, C0, y12, cocycle_closed(source, y1, y2))
    rhs = (incarnation_change(spec, C0, y1, one) * incarnation_change(spec, C0, y2, one)
           * cocycle_closed(spec, y1, y2))
    return lhs == rhs

def baer_sum_check(spec, C_prime, y1, y2):
    """
    Whether the cocycle for ``C + C'`` is the product of the cocycles for
    ``C`` and ``C'``, all read off the cover
    """
    C_prime = as_int_matrix(C_prime, rows=spec.datum.rank, cols=spec.datum.rank)
    other = with_incarnation(spec, C_prime)
    total = with_incarnation(spec, spec.datum.C + C_prime)
    base = spec if spec.forced_lattice is not None else with_incarnation(spec, spec.datum.C)
    ok = cocycle_oracle(total, y1, y2) == cocycle_oracle(base, y1, y2) * cocycle_oracle(other, y1, y2)
    if not ok:
        logger.info("Baer sum fails at y1=%s, y2=%s" %(list(y1), list(y2)))
    return ok
