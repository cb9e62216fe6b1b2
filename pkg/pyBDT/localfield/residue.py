"""
Explicit finite residue fields ``F_q``

Elements are dense polynomials over ``F_p`` (highest degree first, as in
``sympy.polys.galoistools``) reduced modulo a fixed monic irreducible
polynomial of degree ``k``, ``q = p^k``. They are encoded by the integer
``sum_i c_i p^i`` of their coefficients, low degree first.
"""
from ..errors import InvalidDatum

import itertools
import logging
from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem, gf_add, gf_sub, gf_pow_mod, gf_strip

logger = logging.getLogger('bdt.residue')

def prime_power(q):
    """
    ``(p, k)`` with ``q = p^k``; raises ``InvalidDatum`` if ``q`` is not a prime power
    """
    if isinstance(q, bool) or int(q) != q or q < 2:
        raise InvalidDatum("q must be a prime power, got %r" %(q,))
    f = factorint(int(q))
    if len(f) != 1:
        raise InvalidDatum("q = %d is not a prime power" %q)
    (p, k), = f.items()
    return int(p), int(k)

class ResidueField(object):
    """
    The finite field with ``q`` elements, with a fixed primitive element
    and discrete logarithms

    The modulus is the first monic irreducible polynomial of degree ``k``
    in lexicographic coefficient order, and the generator ``g`` is the first
    primitive element in encoding order, so both are reproducible.

    Parameters
    ----------
    q : int
        a prime power
    """
    def __init__(self, q):
        self.p, self.k = prime_power(q)
        self.q = int(q)
        self.modulus = self._find_modulus()
        self.generator = self._find_generator()

        self._exp = []
        self._log = {}
        power = self.one
        for i in range(self.q - 1):
            self._exp.append(power)
            self._log[power] = i
            power = self.mul(power, self.generator)
        if power != self.one or len(self._log) != self.q - 1:
            raise InvalidDatum("failed to build the discrete log table of F_%d" %self.q)
        logger.debug("F_%d: modulus %s, generator %s" %(self.q, self.modulus, self.generator))

    def _find_modulus(self):
        p, k = self.p, self.k
        if k == 1:
            return [1, 0]
        for coeffs in itertools.product(range(p), repeat=k):
            f = [1] + list(coeffs)
            if gf_irreducible_p(f, p, ZZ):
                return f
        raise InvalidDatum("no irreducible polynomial of degree %d over F_%d" %(k, p))

    def _find_generator(self):
        primes = sorted(factorint(self.q - 1))
        for code in range(1, self.q):
            a = self.decode(code)
            if all(self.pow(a, (self.q - 1) // l) != self.one for l in primes):
                return a
        raise InvalidDatum("no primitive element found in F_%d" %self.q)

    def _reduce(self, f):
        return tuple(int(c) for c in gf_strip(gf_rem(list(f), self.modulus, self.p, ZZ)))

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (1,)

    def decode(self, code):
        """
        The element encoded by the integer ``code``
        """
        coeffs = []
        for i in range(self.k):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return self._reduce(reversed(coeffs))

    def encode(self, a):
        code = 0
        for c in a:
            code = code * self.p + int(c)
        return code

    def elements(self):
        return [self.decode(code) for code in range(self.q)]

    def add(self, a, b):
        return self._reduce(gf_add(list(a), list(b), self.p, ZZ))

    def sub(self, a, b):
        return self._reduce(gf_sub(list(a), list(b), self.p, ZZ))

    def mul(self, a, b):
        return self._reduce(gf_mul(list(a), list(b), self.p, ZZ))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inverse(a), -e)
        return self._reduce(gf_pow_mod(list(a), e, self.modulus, self.p, ZZ))

    def inverse(self, a):
        return self.exp(-self.log(a))

    def exp(self, e):
        """
        ``g^e``
        """
        return self._exp[e % (self.q - 1)]

    def log(self, a):
        """
        The discrete logarithm of a nonzero element to the base ``g``
        """
        a = tuple(int(c) for c in a)
        if a not in self._log:
            raise InvalidDatum("zero has no discrete logarithm")
        return self._log[a]

    @property
    def minus_one(self):
        return self.sub(self.zero, self.one)

    def __repr__(self):
        return "<ResidueField: F_%d>" %self.q
