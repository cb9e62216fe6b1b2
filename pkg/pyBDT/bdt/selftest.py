"""
The property suites behind ``bdt selftest``

Every property is a function of a :class:`Grid` returning a
:class:`PropertyResult`: the number of instances checked and the first
failing instance, if any. The test-suite calls the same functions on
reduced grids.
"""
from .. import numpy
from ..errors import BDTError, InternalInvariantViolation
from ..bd import BDDatum, TorusDatum, finite_invariants, xqn_isomorphism, zind_lattice
from ..localfield import LocalFieldSpec, MuN, TorusPoint
from ..cover import CoverSpec, commutator, commutator_formula, center, center_equality_report
from ..hecke import (HeckeSpec, Cyclotomic, cocycle_closed, cocycle_oracle, cocycle_bd, delta, convolve,
                     lattice_box, is_commutative, automorphism_action, support_witness,
                     check_incarnation_change, baer_sum_check)
from ..reps import (FiniteQuotient, GenuineIrrep, genuine_characters, character_norm, same_character,
                    spherical_fixed_dim, is_unramified, pouch_map, GlobalBoundInput,
                    global_multiplicity_bound)

from collections import namedtuple, OrderedDict
import itertools
import logging

logger = logging.getLogger('bdt.selftest')

# ``q``, ``n`` and ``rank`` span the covers; the Hilbert laws run over every
# ``n | q - 1`` for each ``q`` in ``hilbert_q``
GRIDS = {'small': {'q': [5, 7], 'n': [2, 4], 'rank': [1], 'coeff': 2, 'samples': 20, 'bound': 2,
                   'hilbert_q': [5, 7], 'pairs': 20, 'xqn_coeff': 2},
         'full': {'q': [5, 7, 13], 'n': [2, 3, 4, 6], 'rank': [1, 2], 'coeff': 3, 'samples': 200, 'bound': 4,
                  'hilbert_q': [5, 7, 9, 11, 13], 'pairs': 1000, 'xqn_coeff': 5}}

# the covers on which representations are built exhaustively
IRREP_CASES = {'small': [(5, 4, [[1]])],
               'full': [(5, 4, [[1]]), (7, 2, [[1]]), (7, 3, [[1]]), (5, 2, [[1, 1], [0, 1]])]}

PropertyResult = namedtuple('PropertyResult', ['name', 'checked', 'witness'])

class Grid(object):
    """
    The parameters of a self-test run

    Parameters
    ----------
    name : str
        ``'small'`` or ``'full'``
    overrides : dict, optional
        replacements for the grid entries
    symbol_convention : str, optional
    tame_sign : bool, optional
        ``False`` injects a sign flip into the tame symbol
    seed : int, optional
    """
    def __init__(self, name='small', overrides=None, symbol_convention='inverse', tame_sign=True, seed=42):
        if name not in GRIDS:
            raise ValueError("grid should be one of %s, not %r" %(sorted(GRIDS), name))
        self.name = name
        params = dict(GRIDS[name])
        params.update(overrides or {})
        self.params = params
        self.symbol_convention = symbol_convention
        self.tame_sign = tame_sign
        self.seed = seed

    def __getattr__(self, key):
        try:
            return self.__dict__['params'][key]
        except KeyError:
            raise AttributeError(key)

    def rng(self):
        return numpy.random.RandomState(self.seed)

    def field(self, q, n):
        return LocalFieldSpec(q, n, symbol_convention=self.symbol_convention, tame_sign=self.tame_sign)

    def fields(self):
        """
        Every ``(q, n)`` of the grid with ``n | q - 1``
        """
        for q in self.q:
            for n in self.n:
                if n >= 1 and (q - 1) % n == 0:
                    yield self.field(q, n)

    def hilbert_fields(self):
        """
        Every ``(q, n)`` with ``q`` in ``hilbert_q`` and ``n`` a divisor of ``q - 1``
        """
        for q in self.hilbert_q:
            for n in range(1, q):
                if (q - 1) % n == 0:
                    yield self.field(q, n)

    def is_empty(self):
        return not (self.q and self.n and self.rank)

    def matrices(self, r):
        """
        Every ``r x r`` matrix with entries in ``[-coeff, coeff]``, for ``r <= 1``,
        and a seeded sample of them otherwise
        """
        c = self.coeff
        if r == 0:
            return [[]]
        if r == 1:
            return [[[a]] for a in range(-c, c + 1)]
        rng = self.rng()
        return [rng.randint(-c, c + 1, size=(r, r)).tolist() for _ in range(self.samples)]

    def split_data(self, n):
        for r in self.rank:
            for C in self.matrices(r):
                yield BDDatum.split(C, n)

    def nonsplit_data(self, n):
        """
        Data on the rank-2 torus with Frobenius swapping the coordinates
        """
        if 2 not in self.rank:
            return
        c = self.coeff
        torus = TorusDatum(2, [[0, 1], [1, 0]], 2)
        for a, b, e in itertools.product(range(-c, c + 1), repeat=3):
            yield BDDatum(torus, [[a, b], [e, a]], n)

    def random_data(self):
        """
        Seeded random split data with ``r <= 4``, ``n <= 12`` and
        ``|C_ij| <= xqn_coeff``
        """
        rng = self.rng()
        c = max(self.xqn_coeff, 0)
        for _ in range(self.samples):
            r = int(rng.randint(1, 5))
            n = int(rng.randint(1, 13))
            yield BDDatum.split(rng.randint(-c, c + 1, size=(r, r)).tolist(), n)


def _result(name, checked, witness):
    if witness is not None:
        logger.error("property '%s' fails: %s" %(name, witness))
    elif not checked:
        logger.warning("property '%s' checked no instances: the grid is empty" %name)
    return PropertyResult(name, checked, witness)

#------------------------------------------------------------------------------
# lattice invariants
#------------------------------------------------------------------------------
def check_xqn(grid):
    """
    ``delta: Y/Y# -> X#/X`` is bijective
    """
    checked = 0
    for d in grid.random_data():
        try:
            xqn_isomorphism(d)
        except InternalInvariantViolation as e:
            return _result('xqn', checked, {'datum': d.to_dict(), 'error': str(e)})
        checked += 1
    return _result('xqn', checked, None)

def check_cardinalities(grid):
    """
    ``#mu = #mu_hat``, ``#nu = #nu_hat``, ``#mu #nu = #t_n``, ``#mu_hat #nu_hat = #t_hat_n``
    """
    checked = 0
    for n in grid.n:
        if n < 1:
            continue
        for d in itertools.chain(grid.split_data(n), grid.nonsplit_data(n)):
            f = finite_invariants(d)
            ok = (f.mu.order == f.mu_hat.order and f.nu.order == f.nu_hat.order
                  and f.mu.order * f.nu.order == f.t_n.order
                  and f.mu_hat.order * f.nu_hat.order == f.t_hat_n.order)
            if not ok:
                return _result('cardinalities', checked, {'datum': d.to_dict()})
            checked += 1
    return _result('cardinalities', checked, None)

#------------------------------------------------------------------------------
# Hilbert symbols
#------------------------------------------------------------------------------
def _classes(field):
    """
    Representatives ``varpi^v g^e`` of the classes ``(v mod n, e mod q - 1)``
    """
    return [field.element(v, e) for v in range(field.n) for e in range(field.q - 1)]

def _steinberg_pairs(field):
    """
    Every ``(a, 1 - a)`` whose second entry the tame model determines:
    all units with residue other than 1, and valuations ``0 < |v| <= n``
    """
    units = [field.element(0, e) for e in range(field.q - 1)]
    others = [field.element(v, e) for v in range(-field.n, field.n + 1) if v
              for e in range(field.q - 1)]
    for a in units + others:
        b = field.one_minus(a)
        if b is not None:
            yield a, b

def check_hilbert_laws(grid):
    """
    Bimultiplicativity in each argument, skew-symmetry, the Steinberg
    relation, nondegeneracy modulo ``n``-th powers and the two displayed
    values, exhaustively over the classes of every field of the grid
    """
    checked = 0
    for field in grid.hilbert_fields():
        h, n = field.hilbert, field.n
        elts = _classes(field)
        table = [[h(a, b) for b in elts] for a in elts]
        def fail(law, **elements):
            witness = dict((k, v.to_dict()) for k, v in elements.items())
            witness.update(field=field.to_dict(), law=law)
            return _result('hilbert_laws', checked, witness)

        for i, a in enumerate(elts):
            for j, b in enumerate(elts):
                if table[i][j] * table[j][i] != MuN.one(n):
                    return fail('skew', a=a, b=b)
        for i, a in enumerate(elts):
            for k, c in enumerate(elts):
                ac = a * c
                for j, b in enumerate(elts):
                    if h(ac, b) != table[i][j] * table[k][j]:
                        return fail('bimultiplicative', a=a, b=b, c=c)
                    if h(b, ac) != table[j][i] * table[j][k]:
                        return fail('bimultiplicative', a=b, b=a, c=c)
                    checked += 1

        for a, b in _steinberg_pairs(field):
            if not (h(a, b).is_one() and h(b, a).is_one()):
                return fail('steinberg', a=a, b=b)
            checked += 1

        for i, a in enumerate(elts):
            power = field.is_nth_power(a)
            left = all(m.is_one() for m in table[i])
            right = all(row[i].is_one() for row in table)
            if left != power or right != power:
                return fail('nondegenerate', a=a)
            checked += 1

        varpi = field.uniformizer
        if h(varpi, varpi) != field.minus_one_power(field.zeta_step):
            return fail('Hilb(varpi, varpi)')
        expected = MuN(1, n) if field.symbol_convention == 'inverse' else MuN(-1, n)
        if h(varpi, field.generator) != expected:
            return fail('Hilb(varpi, g)')
    return _result('hilbert_laws', checked, None)

#------------------------------------------------------------------------------
# covers
#------------------------------------------------------------------------------
def _random_point(rng, field, r):
    return TorusPoint([field.element(int(rng.randint(-3, 4)), int(rng.randint(0, field.q - 1)))
                       for _ in range(r)])

def check_commutator_identity(grid):
    """
    The commutator of the cover equals ``Hilb_T(delta_j t1, t2)``, on at
    least ``pairs`` random pairs for every field and rank of the grid
    """
    rng = grid.rng()
    checked = 0
    for field in grid.fields():
        for r in grid.rank:
            data = [BDDatum.split(C, field.n) for C in grid.matrices(r)]
            per_datum = -(-grid.pairs // max(len(data), 1))
            for d in data:
                spec = CoverSpec(field, d)
                for _ in range(per_datum):
                    t1, t2 = _random_point(rng, field, r), _random_point(rng, field, r)
                    if commutator(spec, t1, t2) != commutator_formula(spec, t1, t2):
                        return _result('commutator', checked, {'spec': d.to_dict(), 'q': field.q,
                                                               't1': t1.to_dict(), 't2': t2.to_dict()})
                    checked += 1
    return _result('commutator', checked, None)

def check_center(grid):
    """
    The radical equals ``Im(T# -> T)`` on ``(Z/n)^{2r}``, and ``#(T/Z#) = zind^2``
    """
    checked = 0
    for field in grid.fields():
        for d in grid.split_data(field.n):
            spec = CoverSpec(field, d)
            try:
                report = center_equality_report(spec)
                data = center(spec)
            except InternalInvariantViolation as e:
                return _result('center', checked, {'spec': d.to_dict(), 'q': field.q, 'error': str(e),
                                                   'witness': e.witness})
            if not report['equal'] or data.A.order != zind_lattice(d) ** 2:
                return _result('center', checked, {'spec': d.to_dict(), 'q': field.q,
                                                   'witness': report['witness']})
            checked += 1
    return _result('center', checked, None)

#------------------------------------------------------------------------------
# Hecke algebras
#------------------------------------------------------------------------------
def _hecke_specs(grid):
    for field in grid.fields():
        for d in itertools.chain(grid.split_data(field.n), grid.nonsplit_data(field.n)):
            yield HeckeSpec(field, d)

def check_cocycles(grid):
    """
    The closed form, the cover oracle and the residue path agree on the box
    """
    checked = 0
    for spec in _hecke_specs(grid):
        box = lattice_box(spec, grid.bound)
        for y1, y2 in itertools.product(box, repeat=2):
            values = [cocycle_closed(spec, y1, y2), cocycle_oracle(spec, y1, y2), cocycle_bd(spec, y1, y2)]
            if values[0] != values[1] or values[0] != values[2]:
                return _result('cocycles', checked, {'q': spec.field.q, 'datum': spec.datum.to_dict(),
                                                     'y1': list(y1), 'y2': list(y2),
                                                     'closed': values[0].exponent, 'oracle': values[1].exponent,
                                                     'bd': values[2].exponent})
            checked += 1
    return _result('cocycles', checked, None)

def check_convolution(grid):
    """
    Convolution is associative, commutative and unital
    """
    checked = 0
    bound = min(grid.bound, 1)
    for spec in _hecke_specs(grid):
        box = lattice_box(spec, bound)
        zero = (0,) * spec.datum.rank
        unit = delta(spec, zero)
        for y1, y2, y3 in itertools.product(box, repeat=3):
            f1, f2, f3 = delta(spec, y1), delta(spec, y2), delta(spec, y3)
            lhs = convolve(spec, convolve(spec, f1, f2), f3)
            rhs = convolve(spec, f1, convolve(spec, f2, f3))
            if lhs != rhs or convolve(spec, unit, f1) != f1 or convolve(spec, f1, unit) != f1:
                return _result('convolution', checked, {'datum': spec.datum.to_dict(), 'y': [y1, y2, y3]})
            checked += 1
        if not is_commutative(spec, bound):
            return _result('convolution', checked, {'datum': spec.datum.to_dict(), 'law': 'commutative'})
    return _result('convolution', checked, None)

def check_automorphism(grid):
    """
    The Hilbert-symbol and residue descriptions of the automorphism agree
    """
    if grid.symbol_convention != 'inverse':
        logger.warning("the automorphism paths only agree for the inverse symbol; skipping")
        return _result('automorphism', 0, None)
    rng = grid.rng()
    checked = 0
    for spec in _hecke_specs(grid):
        box = lattice_box(spec, grid.bound)
        r = spec.datum.rank
        for _ in range(max(grid.samples // 10, 1)):
            x = [int(v) for v in rng.randint(-3, 4, size=r)]
            w = spec.field.element(0, int(rng.randint(0, spec.field.q - 1)))
            y = box[int(rng.randint(0, len(box)))]
            try:
                automorphism_action(spec, x, w, y)
            except InternalInvariantViolation as e:
                return _result('automorphism', checked, e.witness)
            checked += 1
    return _result('automorphism', checked, None)

def check_support(grid):
    """
    Points off ``Lambda`` have a unit witness, points on it have none
    """
    checked = 0
    for spec in _hecke_specs(grid):
        if not spec.datum.torus.is_split:
            continue
        r = spec.datum.rank
        for v in itertools.product(range(-grid.bound, grid.bound + 1), repeat=r):
            t = TorusPoint.from_cocharacter(spec.field, v)
            k = support_witness(spec, t)
            if (k is None) != spec.Lambda.contains(v):
                return _result('support', checked, {'datum': spec.datum.to_dict(), 'point': list(v)})
            checked += 1
    return _result('support', checked, None)

def check_incarnations(grid):
    """
    Changes of incarnation intertwine the cocycles; Baer sums multiply them
    """
    checked = 0
    for spec in _hecke_specs(grid):
        r = spec.datum.rank
        box = lattice_box(spec, min(grid.bound, 1))
        alternating = numpy.zeros((r, r), dtype=object)
        if r >= 2:
            alternating[0, 1], alternating[1, 0] = 1, -1
        C0 = spec.datum.C - alternating
        for y1, y2 in itertools.product(box, repeat=2):
            ok = check_incarnation_change(spec, C0, y1, y2) and baer_sum_check(spec, spec.datum.C, y1, y2)
            if not ok:
                return _result('incarnations', checked, {'datum': spec.datum.to_dict(), 'y1': list(y1),
                                                         'y2': list(y2)})
            checked += 1
    return _result('incarnations', checked, None)

#------------------------------------------------------------------------------
# representations
#------------------------------------------------------------------------------
def check_irreps(grid):
    """
    Dimension, relations, character formula, Schur norm, Lagrangian
    independence, spherical vectors and injectivity of the pouch map
    """
    checked = 0
    for q, n, C in IRREP_CASES[grid.name]:
        if q not in grid.q:
            continue
        quotient = FiniteQuotient(CoverSpec(grid.field(q, n), BDDatum.split(C, n)))
        data = quotient.center
        pouches = set()
        for chi in genuine_characters(quotient):
            witness = {'q': q, 'n': n, 'C': C, 'chi': chi.to_dict()}
            try:
                pi = GenuineIrrep(quotient, chi)
                pi.check_relations()
            except InternalInvariantViolation as e:
                witness['error'] = str(e)
                return _result('irreps', checked, witness)
            if pi.dimension != data.zind:
                return _result('irreps', checked, dict(witness, law='dimension'))
            for z in quotient.points():
                g = quotient.element(z)
                central = data.zdag.contains(z)
                expected = Cyclotomic.from_qmodz(chi(g)) * data.zind if central else Cyclotomic.zero()
                if pi.trace(g) != expected:
                    return _result('irreps', checked, dict(witness, law='character', point=list(z)))
            if character_norm(pi) != 1:
                return _result('irreps', checked, dict(witness, law='norm'))
            other = GenuineIrrep(quotient, chi, lagrangian=pi.lagrangian.swapped())
            if not same_character(pi, other):
                return _result('irreps', checked, dict(witness, law='lagrangian'))
            if spherical_fixed_dim(quotient, pi) != (1 if is_unramified(chi) else 0):
                return _result('irreps', checked, dict(witness, law='spherical'))
            pouch = pouch_map(quotient, chi)
            key = pouch.core_char.values
            if pouch.fiber_size != 1 or key in pouches:
                return _result('irreps', checked, dict(witness, law='pouch'))
            pouches.add(key)
            checked += 1
    return _result('irreps', checked, None)

def check_multiplicity_bound(grid):
    """
    The bound is 1 for split tori and the product of the inputs otherwise
    """
    cases = [(GlobalBoundInput(True), 1), (GlobalBoundInput(False, 1, 1), 1), (GlobalBoundInput(False, 2, 4), 8)]
    for i, (inp, expected) in enumerate(cases):
        if global_multiplicity_bound(inp) != expected:
            return _result('multiplicity_bound', i, inp.to_dict())
    return _result('multiplicity_bound', len(cases), None)


PROPERTIES = OrderedDict([('xqn', check_xqn),
                          ('cardinalities', check_cardinalities),
                          ('hilbert_laws', check_hilbert_laws),
                          ('commutator', check_commutator_identity),
                          ('center', check_center),
                          ('cocycles', check_cocycles),
                          ('convolution', check_convolution),
                          ('automorphism', check_automorphism),
                          ('support', check_support),
                          ('incarnations', check_incarnations),
                          ('irreps', check_irreps),
                          ('multiplicity_bound', check_multiplicity_bound)])

def run_selftest(grid, names=None):
    """
    Run the property suites

    Returns
    -------
    dict
        ``passed`` (bool) and one record per property with its name,
        the number of instances checked and the failing instance
    """
    if grid.is_empty():
        logger.warning("the grid has an empty parameter list; the run is vacuous")
    results = []
    for name, check in PROPERTIES.items():
        if names is not None and name not in names:
            continue
        try:
            res = check(grid)
        except (BDTError, ValueError) as e:
            res = _result(name, 0, {'error': "%s: %s" %(e.__class__.__name__, e)})
        results.append(res)
    records = [{'name': r.name, 'checked': r.checked, 'passed': r.witness is None,
                'witness': r.witness} for r in results]
    return {'grid': grid.name, 'passed': all(r['passed'] for r in records), 'properties': records}
