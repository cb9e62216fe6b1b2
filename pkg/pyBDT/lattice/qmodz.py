"""
The additive group Q/Z, the value group of every finite-order character
"""
from fractions import Fraction
import functools
import numbers

@functools.total_ordering
class QmodZ(object):
    """
    An element of Q/Z, stored as its representative in [0, 1)

    Parameters
    ----------
    num : int, Fraction, str, or QmodZ
        the numerator, a rational number, or a string ``'a/b'``
    den : int, optional
        the denominator when ``num`` is an integer
    """
    __slots__ = ('_value',)

    def __init__(self, num=0, den=1):
        if isinstance(num, QmodZ):
            value = num._value
        elif isinstance(num, str):
            value = Fraction(num)
        else:
            if den == 0:
                raise ZeroDivisionError("QmodZ denominator must be nonzero")
            value = Fraction(num, den)
        self._value = value - (value.numerator // value.denominator)

    @property
    def numerator(self):
        return self._value.numerator

    @property
    def denominator(self):
        return self._value.denominator

    @property
    def order(self):
        """The order of this element in Q/Z"""
        return self._value.denominator

    def as_fraction(self):
        return self._value

    def is_zero(self):
        return self._value == 0

    def __add__(self, other):
        return QmodZ(self._value + QmodZ(other)._value)
    __radd__ = __add__

    def __sub__(self, other):
        return QmodZ(self._value - QmodZ(other)._value)

    def __rsub__(self, other):
        return QmodZ(QmodZ(other)._value - self._value)

    def __neg__(self):
        return QmodZ(-self._value)

    def __mul__(self, k):
        if not isinstance(k, numbers.Integral):
            raise TypeError("Q/Z only admits multiplication by integers")
        return QmodZ(self._value * int(k))
    __rmul__ = __mul__

    def divide(self, d):
        """
        The smallest nonnegative ``x`` in [0, 1) with ``d*x == self``
        """
        return QmodZ(self._value / d)

    def __eq__(self, other):
        if isinstance(other, QmodZ):
            return self._value == other._value
        if isinstance(other, (numbers.Rational, str)):
            return self == QmodZ(other)
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return self._value < QmodZ(other)._value

    def __hash__(self):
        return hash(('QmodZ', self._value))

    def __str__(self):
        if self._value.denominator == 1:
            return "0"
        return "%d/%d" %(self._value.numerator, self._value.denominator)

    def __repr__(self):
        return "QmodZ(%s)" %str(self)
