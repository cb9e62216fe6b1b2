"""
Lagrangian decompositions of a finite abelian group with a nondegenerate
alternating pairing
"""
from ..errors import DegeneratePairing
from ..lattice import QmodZ

import logging

logger = logging.getLogger('bdt.lagrangian')

def subgroup_elements(A, gens):
    """
    The sorted list of elements of the subgroup of ``A`` generated by ``gens``
    """
    seen = {A.zero()}
    frontier = [A.zero()]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = A.add(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


class LagrangianPair(object):
    """
    Isotropic subgroups ``L`` and ``L*`` of ``A`` in duality, ``L x L* = A``

    Parameters
    ----------
    A : FiniteAbelianGroup
    pairing : callable
        ``pairing(a, b)`` in Q/Z
    L_gens, Lstar_gens : list of tuple
        the hyperbolic pairs ``(x_k, y_k)`` split off by the greedy
        construction; ``L`` is spanned by the ``x_k`` and ``L*`` by the ``y_k``
    """
    def __init__(self, A, pairing, L_gens, Lstar_gens):
        self.A = A
        self.pairing = pairing
        self.L_gens = list(L_gens)
        self.Lstar_gens = list(Lstar_gens)

    def L(self):
        return subgroup_elements(self.A, self.L_gens)

    def Lstar(self):
        return subgroup_elements(self.A, self.Lstar_gens)

    def swapped(self):
        """
        The decomposition with the roles of ``L`` and ``L*`` exchanged
        """
        return LagrangianPair(self.A, self.pairing, self.Lstar_gens, self.L_gens)

    def check(self):
        """
        Verify isotropy, ``#L #L* = #A``, and that ``L* -> Hom(L, Q/Z)`` is bijective

        Returns
        -------
        bool
        """
        L, Ls = self.L(), self.Lstar()
        zero = QmodZ(0)
        if any(self.pairing(a, b) != zero for a in L for b in L):
            return False
        if any(self.pairing(a, b) != zero for a in Ls for b in Ls):
            return False
        if len(L) * len(Ls) != self.A.order:
            return False
        characters = set(tuple(self.pairing(a, y) for a in L) for y in Ls)
        return len(characters) == len(Ls) == len(L)

    def __repr__(self):
        return "<LagrangianPair: L=%s, L*=%s>" %(self.L_gens, self.Lstar_gens)


def lagrangian_decomposition(A, pairing):
    """
    A Lagrangian decomposition by the greedy Darboux procedure

    Repeatedly take the lexicographically smallest element ``x`` of
    maximal order in the remaining subgroup, the smallest ``y`` pairing
    with ``x`` to a value of the same order, and pass to the common
    orthogonal complement of ``x`` and ``y``.

    Parameters
    ----------
    A : FiniteAbelianGroup
    pairing : callable
        an alternating, nondegenerate Q/Z-valued pairing on ``A``

    Raises
    ------
    DegeneratePairing
        if no partner ``y`` exists for some ``x``
    """
    zero = QmodZ(0)
    remaining = sorted(A.elements())
    L_gens, Lstar_gens = [], []
    while len(remaining) > 1:
        orders = dict((a, A.element_order(a)) for a in remaining)
        top = max(orders.values())
        x = next(a for a in remaining if orders[a] == top)
        y = next((b for b in remaining if pairing(x, b).order == top), None)
        if y is None:
            raise DegeneratePairing("element %s has no partner of order %d" %(x, top))
        L_gens.append(x)
        Lstar_gens.append(y)
        remaining = [a for a in remaining if pairing(x, a) == zero and pairing(y, a) == zero]
    if any(pairing(a, a) != zero for a in L_gens + Lstar_gens):
        raise DegeneratePairing("the pairing is not alternating")
    logger.debug("Lagrangian decomposition of %s: L = <%s>, L* = <%s>" %(A, L_gens, Lstar_gens))
    return LagrangianPair(A, pairing, L_gens, Lstar_gens)
