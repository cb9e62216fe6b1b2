"""
Exact elements of the cyclotomic fields ``Q(zeta_N)``

An element is a polynomial over ``QQ`` in ``x = zeta_N`` reduced modulo the
``N``-th cyclotomic polynomial. Elements of different levels are compared
and combined in the field of the least common level.
"""
from ..lattice import QmodZ

from fractions import Fraction
from math import gcd
import functools
import numbers
from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly

x = Symbol('x')

@functools.lru_cache(maxsize=None)
def cyclotomic_modulus(N):
    """
    The ``N``-th cyclotomic polynomial as a ``Poly`` over ``QQ``
    """
    return Poly(cyclotomic_poly(N, x), x, domain=QQ)

def _lcm(a, b):
    return a * b // gcd(a, b)

class Cyclotomic(object):
    """
    An element of ``Q(zeta_N)``

    Parameters
    ----------
    N : int
        the level
    poly : sympy.Poly or expression
        a polynomial in ``x = zeta_N``
    """
    __slots__ = ('N', 'poly')

    def __init__(self, N, poly):
        self.N = int(N)
        if not isinstance(poly, Poly):
            poly = Poly(poly, x, domain=QQ)
        self.poly = poly.rem(cyclotomic_modulus(self.N))

    @classmethod
    def zero(cls, N=1):
        return cls(N, 0)

    @classmethod
    def one(cls, N=1):
        return cls(N, 1)

    @classmethod
    def rational(cls, c, N=1):
        c = Fraction(c)
        return cls(N, Poly(Rational(c.numerator, c.denominator), x, domain=QQ))

    @classmethod
    def root_of_unity(cls, k, N):
        """
        ``zeta_N^k``
        """
        return cls(N, Poly(x**(int(k) % int(N)), x, domain=QQ))

    @classmethod
    def from_qmodz(cls, a, N=None):
        """
        ``exp(2 pi i a)`` for ``a`` in Q/Z, at level ``N`` (a multiple of the
        order of ``a``) or at the order of ``a``
        """
        a = QmodZ(a)
        if N is None:
            N = a.denominator
        if N % a.denominator:
            raise ValueError("level %d is not a multiple of the order %d" %(N, a.denominator))
        return cls.root_of_unity(a.numerator * (N // a.denominator), N)

    def lift(self, M):
        """
        The same element at level ``M``, a multiple of ``N``
        """
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError("cannot lift level %d to level %d" %(self.N, M))
        k = M // self.N
        return Cyclotomic(M, self.poly.compose(Poly(x**k, x, domain=QQ)))

    def _common(self, other):
        if isinstance(other, (numbers.Rational, Fraction)):
            other = Cyclotomic.rational(other, self.N)
        if not isinstance(other, Cyclotomic):
            return None, None
        M = _lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.N, a.poly + b.poly)
    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.N, a.poly - b.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Cyclotomic(self.N, -self.poly)

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.N, a.poly * b.poly)
    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("only nonnegative powers are supported")
        out = Cyclotomic.one(self.N)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self):
        """
        Complex conjugation, ``zeta -> zeta^-1``
        """
        coeffs = self.coefficients()
        expr = sum(Rational(c.numerator, c.denominator) * x**((self.N - i) % self.N)
                   for i, c in enumerate(coeffs) if c)
        return Cyclotomic(self.N, Poly(expr, x, domain=QQ) if coeffs else 0)

    def abs2(self):
        return self * self.conjugate()

    def coefficients(self):
        """
        The rational coefficients, lowest degree first, without trailing zeros
        """
        if self.poly.is_zero:
            return []
        coeffs = [Rational(c) for c in reversed(self.poly.all_coeffs())]
        return [Fraction(int(c.p), int(c.q)) for c in coeffs]

    def is_zero(self):
        return self.poly.is_zero

    def is_rational(self):
        return self.poly.degree() <= 0

    def to_rational(self):
        if not self.is_rational():
            raise ValueError("%r is not rational" %self)
        coeffs = self.coefficients()
        return coeffs[0] if coeffs else Fraction(0)

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return (a.poly - b.poly).is_zero

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def to_list(self):
        return [str(c) for c in self.coefficients()]

    def __repr__(self):
        return "Cyclotomic(N=%d, %s)" %(self.N, self.poly.as_expr())
