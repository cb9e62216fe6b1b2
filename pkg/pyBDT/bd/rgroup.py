"""
The group of multiplicative type ``R`` of a Brylinski-Deligne datum,
through its character lattice

``V = (X + Y) / <(n delta(y), -n y)>`` is the character lattice of ``R``;
``p : X -> V`` and ``e : V -> X#`` are the character maps of the
sequences ``T^_[n] -> R -> T`` and ``T# -> R -> pi_0 R``.
"""
from .. import numpy
from ..errors import InternalInvariantViolation
from ..lattice import Lattice, GroupHom, cokernel, kernel_basis, matmul
from ..lattice.snf import identity

import logging

logger = logging.getLogger('bdt.rgroup')

class RGroupData(object):
    """
    The presentation of ``V`` and the maps ``p`` and ``e``

    Attributes
    ----------
    relations : numpy.ndarray
        the ``2r x r`` relation matrix with columns ``(B e_j, -n e_j)`` in ``X + Y``
    V : Cokernel
        the presented character lattice
    free_rank : int
    component_group : FiniteAbelianGroup
        the torsion of ``V``, the character group of ``pi_0 R``
    map_p : GroupHom
        ``X -> V``, ``x -> (x, 0)``
    map_e : GroupHom
        ``V -> X#``, ``(x, y) -> x + delta(y)``, into the basis of ``X#``
    """
    def __init__(self, datum):
        self.datum = datum
        r, n, B = datum.rank, datum.n, datum.B
        self.relations = numpy.vstack([B, -n * identity(r)])
        self.V = cokernel(self.relations)
        self.free_rank = self.V.free_rank
        self.component_group = self.V.torsion

        P = self.V.projection.matrix
        self.map_p = GroupHom(Lattice.full(r), self.V.group, P[:, :r] if r else P[:, :0])

        Xsharp = datum.sharp.Xsharp
        cols = []
        for lift in self.V.lifts:
            x, y = numpy.array(lift[:r], dtype=object), numpy.array(lift[r:], dtype=object)
            image = n * x + (matmul(B, y) if r else x)
            cols.append(Xsharp.coordinates(image))
        k = Xsharp.rank
        E = numpy.array(cols, dtype=object).T if cols else numpy.zeros((k, 0), dtype=object)
        self.map_e = GroupHom(self.V.group, Xsharp, E.reshape(k, len(cols)))
        logger.debug("V = %s, component group %s" %(self.V.group, self.component_group))

    def kernel_of_e(self):
        """
        ``{(x, y) : n x + B y = 0} / relations``, computed directly from the
        kernel lattice
        """
        r, n, B = self.datum.rank, self.datum.n, self.datum.B
        K = Lattice(kernel_basis(numpy.hstack([n * identity(r), B])), ambient_rank=2*r)
        rel = Lattice(self.relations.T, ambient_rank=2*r)
        return K.quotient(rel).torsion

    def check_exactness(self):
        """
        Verify ``#coker(p) = n^r``, that ``e`` is onto ``X#`` and that its
        kernel is ``nu_hat = Y#/nY``

        Returns
        -------
        dict
            the orders that were compared
        """
        d = self.datum
        coker_p = cokernel(self.map_p)
        nu_hat = d.finite.nu_hat
        report = {'coker_p': coker_p.order, 'n^r': d.n**d.rank,
                  'e_surjective': self.map_e.is_surjective(),
                  'ker_e': list(self.map_e.kernel().torsion.invariant_factors),
                  'nu_hat': list(nu_hat.invariant_factors)}

        if self.free_rank != d.rank:
            raise InternalInvariantViolation("V has free rank %d, expected %d" %(self.free_rank, d.rank),
                                             witness=d.to_dict())
        if coker_p.order != d.n**d.rank:
            raise InternalInvariantViolation("coker(X -> V) has order %s, expected n^r" %coker_p.order,
                                             witness=report)
        if not report['e_surjective'] or report['ker_e'] != report['nu_hat']:
            raise InternalInvariantViolation("T# -> R -> pi_0 R is not exact on characters", witness=report)
        if self.component_group != nu_hat or self.kernel_of_e() != nu_hat:
            raise InternalInvariantViolation("pi_0 R does not match nu_hat", witness=report)
        return report


def r_group(d):
    """
    The :class:`RGroupData` of a datum
    """
    return RGroupData(d)

def r_group_decomposition(d):
    """
    For a split datum, ``R = G_m^r x prod_i mu_{n_i}``; returns ``(r, [n_i])``
    """
    R = RGroupData(d)
    return R.free_rank, list(R.component_group.invariant_factors)
