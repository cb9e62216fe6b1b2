"""
A tame model of a nonarchimedean local field with residue field ``F_q``

Principal units are uniquely ``n``-divisible when ``n | q - 1``, so every
symbol and power class factors through ``F^x / (1 + m)``, which is
``Z x Z/(q-1)`` on the coordinates ``(val, unit_exp)``.
"""
from .._cache import Cache, parameter, cached_property
from ..errors import InvalidDatum
from .elements import TameElement, MuN
from .residue import ResidueField, prime_power

import logging

logger = logging.getLogger('bdt.localfield')

SYMBOL_CONVENTIONS = ['standard', 'inverse']

class LocalFieldSpec(Cache):
    """
    The field data ``(q, n)`` together with the orientation of the Hilbert symbol

    With ``tame = v(a) v(b) (q-1)/2 + e(a) v(b) - e(b) v(a)`` the exponent of
    the tame symbol of ``(a, b)`` to the base ``g``, the ``standard``
    symbol is ``zeta^tame(a, b)`` and the ``inverse`` symbol is
    ``zeta^tame(b, a)``. Only the ``inverse`` orientation has both
    ``Hilb(varpi, varpi) = (-1)^((q-1)/n)`` and
    ``Hilb(varpi, w) = Theta(w)^((q-1)/n)``.

    Parameters
    ----------
    q : int
        the residue field order, a prime power
    n : int
        the degree, dividing ``q - 1``
    symbol_convention : str, optional
        ``'standard'`` or ``'inverse'`` (default)
    tame_sign : bool, optional
        include the ``(-1)^(v(a) v(b))`` factor of the tame symbol; turning it
        off yields a deliberately wrong symbol used for mutation checks
    """
    @staticmethod
    def help():
        """
        Print out the help information for the initialization parameters
        """
        print("Initialization Parameters for LocalFieldSpec" + '\n' + '-'*50)
        for name in sorted(LocalFieldSpec._param_names):
            par = getattr(LocalFieldSpec, name)
            doc = name+" :\n"+par.__doc__
            if hasattr(par, '_default'):
                doc += "\n\n\tDefault: %s\n" %str(par._default)
            print(doc)

    def __init__(self, q, n, symbol_convention='inverse', tame_sign=True):
        self.q = q
        self.n = n
        self.symbol_convention = symbol_convention
        self.tame_sign = tame_sign
        self.validate()

    def update(self, **kwargs):
        super(LocalFieldSpec, self).update(**kwargs)
        self.validate()

    def validate(self):
        if (self.q - 1) % self.n != 0:
            raise InvalidDatum("n = %d does not divide q - 1 = %d" %(self.n, self.q - 1))

    @parameter
    def q(self, val):
        """
        The order of the residue field
        """
        prime_power(val)
        return int(val)

    @parameter
    def n(self, val):
        """
        The degree of the cover; must divide ``q - 1``
        """
        if isinstance(val, bool) or int(val) != val or val < 1:
            raise InvalidDatum("n must be a positive integer, got %r" %(val,))
        return int(val)

    @parameter(default='inverse')
    def symbol_convention(self, val):
        """
        The orientation of the Hilbert symbol, 'standard' or 'inverse'
        """
        if val not in SYMBOL_CONVENTIONS:
            raise InvalidDatum("symbol_convention should be one of %s, not %r" %(SYMBOL_CONVENTIONS, val))
        return val

    @parameter(default=True)
    def tame_sign(self, val):
        """
        Whether the tame symbol carries its ``(-1)^(v(a) v(b))`` factor
        """
        return bool(val)

    @cached_property('q')
    def residue_field(self):
        """
        The explicit :class:`ResidueField` ``F_q``
        """
        return ResidueField(self.q)

    @cached_property('q')
    def half_order(self):
        """
        The exponent ``H`` with ``g^H = -1``: ``(q-1)/2`` for odd ``q``, 0 in characteristic 2
        """
        return (self.q - 1) // 2 if self.q % 2 else 0

    @cached_property('q', 'n')
    def zeta_step(self):
        """
        ``(q-1)/n``, so that ``zeta = g^zeta_step``
        """
        return (self.q - 1) // self.n

    #--------------------------------------------------------------------------
    # elements
    #--------------------------------------------------------------------------
    def element(self, val=0, unit_exp=0):
        return TameElement(val, unit_exp, self.q - 1)

    def from_dict(self, d):
        try:
            return self.element(d['val'], d.get('unit_exp', 0))
        except (KeyError, TypeError):
            raise InvalidDatum("an element needs the keys 'val' and 'unit_exp'")

    @property
    def uniformizer(self):
        return self.element(1, 0)

    @property
    def generator(self):
        """The Teichmuller lift of the fixed generator ``g``"""
        return self.element(0, 1)

    def one(self):
        return self.element(0, 0)

    def mu(self, exponent):
        return MuN(exponent, self.n)

    def minus_one_power(self, N):
        """
        ``(-1)^N`` as an element of ``mu_n``
        """
        e = (N * self.half_order) % (self.q - 1)
        if e % self.zeta_step:
            raise InvalidDatum("(-1)^%d is not an n-th root of unity for n = %d" %(N, self.n))
        return MuN(e // self.zeta_step, self.n)

    #--------------------------------------------------------------------------
    # symbols
    #--------------------------------------------------------------------------
    def tame_exponent(self, a, b):
        """
        The exponent to the base ``g`` of the tame symbol
        ``(-1)^(v(a) v(b)) a^v(b) / b^v(a)`` reduced to ``F_q``
        """
        e = a.unit_exp * b.val - b.unit_exp * a.val
        if self.tame_sign:
            e += a.val * b.val * self.half_order
        return e

    def hilbert(self, a, b):
        """
        The degree-``n`` Hilbert symbol of ``a`` and ``b``
        """
        if self.symbol_convention == 'inverse':
            a, b = b, a
        return MuN(self.tame_exponent(a, b), self.n)

    def is_nth_power(self, a):
        """
        Whether ``a`` is an ``n``-th power in ``F^x``
        """
        return a.val % self.n == 0 and a.unit_exp % self.n == 0

    def h_n(self, w):
        """
        The residue pushout ``Theta(w)^((q-1)/n)`` of a unit
        """
        if not w.is_unit():
            raise InvalidDatum("h_n is only defined on units, got valuation %d" %w.val)
        return MuN(w.unit_exp, self.n)

    def one_minus(self, a):
        """
        The class of ``1 - a`` in ``F^x / (1 + m)``, or ``None`` when the
        model does not determine it (``a`` a unit with residue 1)
        """
        if a.val > 0:
            return self.one()
        if a.val < 0:
            # 1 - a = -a (1 - 1/a)
            return self.element(a.val, a.unit_exp + self.half_order)
        F = self.residue_field
        residue = F.exp(a.unit_exp)
        if residue == F.one:
            return None
        return self.element(0, F.log(F.sub(F.one, residue)))

    def to_dict(self):
        return {'q': self.q, 'n': self.n}

    def __repr__(self):
        return "<LocalFieldSpec: q=%d, n=%d, %s symbol>" %(self.q, self.n, self.symbol_convention)


def hilbert(spec, a, b):
    """
    The degree-``n`` Hilbert symbol in the orientation of ``spec``
    """
    return spec.hilbert(a, b)

def is_nth_power(spec, a):
    return spec.is_nth_power(a)

def h_n(spec, w):
    return spec.h_n(w)
