"""
Points of a split torus over the tame model
"""
from ..errors import InvalidDatum
from ..lattice import as_int_vector
from .elements import MuN

import functools

class TorusPoint(object):
    """
    A point of the split torus of rank ``r``, by its coordinates in the
    basis dual to ``Y``

    Parameters
    ----------
    coords : sequence of TameElement
    """
    __slots__ = ('coords',)

    def __init__(self, coords):
        self.coords = tuple(coords)
        if len(set(c.unit_order for c in self.coords)) > 1:
            raise InvalidDatum("torus coordinates come from different residue fields")

    @classmethod
    def identity(cls, spec, rank):
        return cls([spec.one() for _ in range(rank)])

    @classmethod
    def from_cocharacter(cls, spec, y):
        """
        The point ``y(varpi)``
        """
        return cls([spec.element(v, 0) for v in y])

    @classmethod
    def from_vector(cls, spec, z):
        """
        The point with effective coordinates ``z = (val_1..val_r, unit_1..unit_r)``
        """
        z = list(z)
        if len(z) % 2:
            raise InvalidDatum("effective coordinates come in (val, unit) pairs")
        r = len(z) // 2
        return cls([spec.element(z[i], z[r+i]) for i in range(r)])

    @property
    def rank(self):
        return len(self.coords)

    def as_vector(self):
        """
        The effective coordinates ``(val_1..val_r, unit_1..unit_r)``
        """
        return tuple(c.val for c in self.coords) + tuple(c.unit_exp for c in self.coords)

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise InvalidDatum("rank mismatch: %d vs %d" %(self.rank, other.rank))

    def __mul__(self, other):
        self._check_rank(other)
        return TorusPoint([a * b for a, b in zip(self.coords, other.coords)])

    def __pow__(self, k):
        return TorusPoint([a ** k for a in self.coords])

    def inverse(self):
        return self ** -1

    def is_identity(self):
        return all(c.is_one() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, TorusPoint):
            return NotImplemented
        return self.coords == other.coords

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.coords)

    def to_dict(self):
        return [c.to_dict() for c in self.coords]

    def __repr__(self):
        return "TorusPoint(%s)" %", ".join("(%d, %d)" %(c.val, c.unit_exp) for c in self.coords)


def val_T(t):
    """
    The valuation map ``T -> Y``
    """
    return tuple(c.val for c in t.coords)

def evaluate_character(x, t):
    """
    The value ``x(t) = prod_i t_i^{x_i}`` of a character ``x`` in ``X``
    """
    x = as_int_vector(x, length=t.rank)
    if not t.rank:
        raise InvalidDatum("cannot evaluate a character on a rank-0 torus without a field")
    out = t.coords[0] ** 0
    for xi, c in zip(x, t.coords):
        out = out * c ** int(xi)
    return out

def hilbert_pairing_T(spec, t, t_hat):
    """
    The Hilbert pairing ``T x T^ -> mu_n``, ``prod_i Hilb(t_i, t^_i)``
    """
    if t.rank != t_hat.rank:
        raise InvalidDatum("rank mismatch in the Hilbert pairing: %d vs %d" %(t.rank, t_hat.rank))
    return functools.reduce(lambda acc, ab: acc * spec.hilbert(*ab),
                            zip(t.coords, t_hat.coords), MuN.one(spec.n))
