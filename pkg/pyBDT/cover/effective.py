"""
The effective group ``T_eff = (Z + Z/(q-1))^r`` of a split torus

A point is recorded by ``z = (val_1..val_r, unit_1..unit_r)``. The cover
cocycle and the commutator are bilinear in these coordinates, given by
integer matrices read modulo ``n``.
"""
from .. import numpy
from ..errors import InternalInvariantViolation
from ..lattice import Lattice, AbelianGroup, as_int_vector, matmul, kernel_basis
from ..lattice.snf import identity
from ..localfield import MuN

import logging

logger = logging.getLogger('bdt.effective')

class EffectiveGroup(object):
    """
    ``T_eff`` with the bilinear forms of the cover

    Attributes
    ----------
    cocycle_form : numpy.ndarray
        ``Sigma`` with ``sigma_C(z1, z2) = zeta^(z1.Sigma.z2)``
    commutator_form : numpy.ndarray
        ``Omega = Sigma - Sigma^T``, alternating
    """
    def __init__(self, spec):
        self.spec = spec
        self.rank = spec.rank
        self.unit_order = spec.field.q - 1
        self.n = spec.n
        r = self.rank

        field = spec.field
        H = field.half_order if field.tame_sign else 0
        s = 1 if field.symbol_convention == 'standard' else -1
        C = spec.datum.C
        Sigma = numpy.zeros((2*r, 2*r), dtype=object)
        Sigma[:r, :r] = H * C
        Sigma[:r, r:] = -s * C
        Sigma[r:, :r] = s * C
        self.cocycle_form = Sigma
        self.commutator_form = Sigma - Sigma.T

    @property
    def group(self):
        """``Z^r x (Z/(q-1))^r`` as a presented group (units listed first)"""
        return AbelianGroup((self.unit_order,)*self.rank if self.unit_order > 1 else (), self.rank)

    def normalize(self, z):
        z = [int(a) for a in z]
        r = self.rank
        return tuple(z[:r]) + tuple(a % self.unit_order for a in z[r:])

    def relation_vectors(self):
        """
        The vectors ``(0, (q-1) e_i)`` killed in ``T_eff``
        """
        r = self.rank
        return [tuple([0]*r + [self.unit_order if j == i else 0 for j in range(r)]) for i in range(r)]

    def _form(self, M, z1, z2):
        z1 = as_int_vector(z1, length=2*self.rank)
        z2 = as_int_vector(z2, length=2*self.rank)
        if not self.rank:
            return MuN.one(self.n)
        return MuN(int(matmul(z1, matmul(M, z2))), self.n)

    def cocycle(self, z1, z2):
        return self._form(self.cocycle_form, z1, z2)

    def pairing(self, z1, z2):
        """
        The commutator pairing of two points in effective coordinates
        """
        return self._form(self.commutator_form, z1, z2)

    def radical(self):
        """
        The lattice ``{z : Omega.z = 0 mod n}``, the effective center
        """
        r2 = 2 * self.rank
        K = kernel_basis(numpy.hstack([self.commutator_form, -self.n * identity(r2)]))
        rows = K[:, :r2] if K.shape[0] else numpy.zeros((0, r2), dtype=object)
        return Lattice(rows, ambient_rank=r2)

    def core(self):
        """
        The image of ``T#_eff``: ``Y# + (Y# + (q-1) Z^r)``
        """
        r = self.rank
        S = self.spec.datum.sharp.Ysharp.basis
        gens = []
        for y in S:
            gens.append(list(y) + [0]*r)
            gens.append([0]*r + list(y))
        gens.extend(self.relation_vectors())
        return Lattice(gens, ambient_rank=2*r) if gens else Lattice.zero(2*r)

    def check_tame_factorization(self):
        """
        Verify that the commutator form kills the dropped unit relations
        """
        for v in self.relation_vectors():
            for k in range(2*self.rank):
                e = [0]*(2*self.rank)
                e[k] = 1
                if not self.pairing(v, e).is_one() or not self.pairing(e, v).is_one():
                    raise InternalInvariantViolation("the commutator does not factor through T_eff",
                                                     witness={'relation': list(v), 'against': e})
        return True
