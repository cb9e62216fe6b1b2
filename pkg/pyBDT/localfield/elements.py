"""
Elements of ``F^x / (1 + m)`` and of ``mu_n``
"""
from ..errors import InvalidDatum
from ..lattice import QmodZ

import numbers

def _as_int(val, name):
    if isinstance(val, bool) or not isinstance(val, numbers.Integral):
        if isinstance(val, numbers.Number) and int(val) == val:
            return int(val)
        raise InvalidDatum("%s must be an integer, got %r" %(name, val))
    return int(val)

class TameElement(object):
    """
    The class of ``varpi^val * Theta(g)^unit_exp`` in ``F^x / (1 + m)``

    Parameters
    ----------
    val : int
        the valuation
    unit_exp : int
        the exponent of the fixed generator ``g`` of ``F_q^x``, reduced mod ``q - 1``
    unit_order : int
        ``q - 1``
    """
    __slots__ = ('val', 'unit_exp', 'unit_order')

    def __init__(self, val, unit_exp, unit_order):
        self.val = _as_int(val, 'val')
        self.unit_order = _as_int(unit_order, 'unit_order')
        self.unit_exp = _as_int(unit_exp, 'unit_exp') % self.unit_order

    def is_unit(self):
        return self.val == 0

    def is_one(self):
        return self.val == 0 and self.unit_exp == 0

    def __mul__(self, other):
        if not isinstance(other, TameElement):
            return NotImplemented
        return TameElement(self.val + other.val, self.unit_exp + other.unit_exp, self.unit_order)

    def __pow__(self, k):
        return TameElement(k * self.val, k * self.unit_exp, self.unit_order)

    def inverse(self):
        return self ** -1

    def __eq__(self, other):
        if not isinstance(other, TameElement):
            return NotImplemented
        return (self.val, self.unit_exp, self.unit_order) == (other.val, other.unit_exp, other.unit_order)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.val, self.unit_exp, self.unit_order))

    def to_dict(self):
        return {'val': self.val, 'unit_exp': self.unit_exp}

    def __repr__(self):
        return "TameElement(val=%d, unit_exp=%d)" %(self.val, self.unit_exp)


class MuN(object):
    """
    The root of unity ``zeta^exponent`` in ``mu_n``, ``zeta = g^((q-1)/n)``

    The fixed injective character ``epsilon`` sends it to ``exponent/n`` in Q/Z.
    """
    __slots__ = ('exponent', 'n')

    def __init__(self, exponent, n):
        self.n = _as_int(n, 'n')
        self.exponent = _as_int(exponent, 'exponent') % self.n

    @classmethod
    def one(cls, n):
        return cls(0, n)

    def is_one(self):
        return self.exponent == 0

    def __mul__(self, other):
        if not isinstance(other, MuN):
            return NotImplemented
        if other.n != self.n:
            raise InvalidDatum("cannot multiply roots of unity of different levels %d and %d" %(self.n, other.n))
        return MuN(self.exponent + other.exponent, self.n)

    def __pow__(self, k):
        return MuN(k * self.exponent, self.n)

    def inverse(self):
        return MuN(-self.exponent, self.n)

    def epsilon(self):
        """
        The value of the fixed injective character, in Q/Z
        """
        return QmodZ(self.exponent, self.n)

    def __eq__(self, other):
        if not isinstance(other, MuN):
            return NotImplemented
        return self.exponent == other.exponent and self.n == other.n

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(('MuN', self.exponent, self.n))

    def to_dict(self):
        return {'zeta_exponent': self.exponent}

    def __repr__(self):
        return "MuN(%d mod %d)" %(self.exponent, self.n)
