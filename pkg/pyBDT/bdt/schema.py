"""
Validation of the JSON input documents, one schema per command

Errors in the shape or type of a field raise :class:`SchemaError` with a
JSON pointer to the field; mathematically inconsistent but well-formed
input is left to the library, which raises ``InvalidDatum``.
"""
from ..bd import TorusDatum, BDDatum
from ..localfield import LocalFieldSpec
from ..cover import CoverSpec
from ..hecke import HeckeSpec
from ..lattice import QmodZ
from ..reps import GlobalBoundInput, CARDINALITIES
from .util.bdt_io import SchemaError

import numbers

TORUS_KEYS = ['rank', 'frobenius', 'order']
DATUM_KEYS = TORUS_KEYS + ['C', 'n']
FIELD_KEYS = ['q', 'n']
ELEMENT_KEYS = ['val', 'unit_exp']

GRID_KEYS = ['q', 'n', 'rank', 'coeff', 'samples', 'bound', 'hilbert_q', 'pairs', 'xqn_coeff']

def _check_keys(doc, allowed, required, pointer=''):
    if not isinstance(doc, dict):
        raise SchemaError(pointer, "expected a JSON object")
    for k in sorted(doc):
        if k not in allowed:
            raise SchemaError(pointer + '/' + k, "unknown field; allowed fields are %s" %sorted(allowed))
    for k in required:
        if k not in doc:
            raise SchemaError(pointer + '/' + k, "required field is missing")

def _int(val, pointer, minimum=None):
    if isinstance(val, bool) or not isinstance(val, numbers.Integral):
        raise SchemaError(pointer, "expected an integer, got %s" %type(val).__name__)
    if minimum is not None and val < minimum:
        raise SchemaError(pointer, "expected an integer >= %d, got %d" %(minimum, val))
    return int(val)

def _int_list(val, pointer, minimum=None):
    if not isinstance(val, list):
        raise SchemaError(pointer, "expected a list of integers")
    return [_int(v, "%s/%d" %(pointer, i), minimum) for i, v in enumerate(val)]

def _matrix(val, pointer, rows, cols):
    if not isinstance(val, list) or len(val) != rows:
        raise SchemaError(pointer, "expected a list of %d rows" %rows)
    out = []
    for i, row in enumerate(val):
        if not isinstance(row, list) or len(row) != cols:
            raise SchemaError("%s/%d" %(pointer, i), "expected a row of %d integers" %cols)
        out.append([_int(v, "%s/%d/%d" %(pointer, i, j)) for j, v in enumerate(row)])
    return out

def parse_datum(doc, extra=()):
    """
    A :class:`BDDatum` from the flat keys ``rank``, ``frobenius``, ``order``, ``C`` and ``n``
    """
    _check_keys(doc, DATUM_KEYS + list(extra), ['rank', 'C', 'n'])
    r = _int(doc['rank'], '/rank', minimum=0)
    frobenius = _matrix(doc['frobenius'], '/frobenius', r, r) if 'frobenius' in doc else None
    order = _int(doc.get('order', 1), '/order', minimum=1)
    C = _matrix(doc['C'], '/C', r, r)
    n = _int(doc['n'], '/n', minimum=1)
    return BDDatum(TorusDatum(r, frobenius, order), C, n)

def parse_field(doc, symbol_convention='inverse', tame_sign=True):
    """
    A :class:`LocalFieldSpec` from the keys ``q`` and ``n``
    """
    for k in FIELD_KEYS:
        if k not in doc:
            raise SchemaError('/' + k, "required field is missing")
    q = _int(doc['q'], '/q', minimum=2)
    n = _int(doc['n'], '/n', minimum=1)
    return LocalFieldSpec(q, n, symbol_convention=symbol_convention, tame_sign=tame_sign)

def parse_element(doc, pointer, field):
    _check_keys(doc, ELEMENT_KEYS, ELEMENT_KEYS, pointer)
    return field.element(_int(doc['val'], pointer + '/val'), _int(doc['unit_exp'], pointer + '/unit_exp'))

def parse_cover(doc, symbol_convention='inverse', extra=()):
    """
    A split :class:`CoverSpec` from a datum document with the extra key ``q``
    """
    datum = parse_datum(doc, extra=('q',) + tuple(extra))
    return CoverSpec(parse_field(doc, symbol_convention), datum)

def parse_hecke(doc, symbol_convention='inverse'):
    datum = parse_datum(doc, extra=('q',))
    return HeckeSpec(parse_field(doc, symbol_convention), datum)

def parse_hilbert(doc, symbol_convention='inverse'):
    """
    The field and the two elements of a ``hilbert`` request
    """
    _check_keys(doc, FIELD_KEYS + ['a', 'b'], FIELD_KEYS + ['a', 'b'])
    field = parse_field(doc, symbol_convention)
    return field, parse_element(doc['a'], '/a', field), parse_element(doc['b'], '/b', field)

def parse_irrep(doc, symbol_convention='inverse'):
    """
    The cover of an ``irrep`` request and the optional central character
    values ``chi`` on the basis of ``Z#``
    """
    cover = parse_cover(doc, symbol_convention, extra=('chi',))
    chi = None
    if 'chi' in doc:
        if not isinstance(doc['chi'], list):
            raise SchemaError('/chi', "expected a list of rationals such as \"1/4\"")
        chi = []
        for i, v in enumerate(doc['chi']):
            try:
                chi.append(QmodZ(v) if isinstance(v, str) else QmodZ(_int(v, '/chi/%d' %i)))
            except (ValueError, ZeroDivisionError):
                raise SchemaError('/chi/%d' %i, "expected a rational number, got %r" %(v,))
    return cover, chi

def parse_bound(doc):
    """
    A :class:`GlobalBoundInput`
    """
    _check_keys(doc, ['is_split'] + CARDINALITIES, ['is_split'])
    if not isinstance(doc['is_split'], bool):
        raise SchemaError('/is_split', "expected a boolean")
    kwargs = dict((k, _int(doc[k], '/' + k, minimum=1)) for k in CARDINALITIES if k in doc)
    return GlobalBoundInput(doc['is_split'], **kwargs)

def parse_grid(doc):
    """
    Overrides of the self-test grid: lists for ``q``, ``n``, ``rank`` and
    ``hilbert_q``, integers for the other keys
    """
    if doc is None:
        return {}
    _check_keys(doc, GRID_KEYS, [])
    out = {}
    for k in ['q', 'n', 'rank', 'hilbert_q']:
        if k in doc:
            out[k] = _int_list(doc[k], '/' + k, minimum=0)
    for k in ['coeff', 'samples', 'bound', 'pairs', 'xqn_coeff']:
        if k in doc:
            out[k] = _int(doc[k], '/' + k, minimum=0)
    return out
