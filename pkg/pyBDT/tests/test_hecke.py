from . import pytest, seeded_rng, reduced_grid

from pyBDT.errors import InvalidDatum, Unsupported, InternalInvariantViolation
from pyBDT.lattice import Lattice, QmodZ
from pyBDT.bd import TorusDatum, BDDatum
from pyBDT.localfield import LocalFieldSpec, TorusPoint, MuN
from pyBDT.hecke import (Cyclotomic, HeckeSpec, cocycle_closed, cocycle_oracle, cocycle_bd,
                         automorphism_action, support_witness, HeckeElement, delta, convolve,
                         lattice_box, is_commutative, structure_table, with_incarnation,
                         incarnation_change, check_incarnation_change, baer_sum_check)
from pyBDT.bdt.selftest import (check_cocycles, check_convolution, check_automorphism, check_support,
                                check_incarnations)

from fractions import Fraction
import itertools

@pytest.fixture(scope='module')
def spec72():
    """
    q = 7, n = 2, C = [[1]]: Lambda = Y and the cocycle is a sign
    """
    return HeckeSpec(LocalFieldSpec(7, 2), BDDatum.split([[1]], 2))

def test_cyclotomic():
    z = Cyclotomic.root_of_unity(1, 4)
    assert z**4 == Cyclotomic.one()
    assert Cyclotomic.one(4) + z + z**2 + z**3 == 0
    assert Cyclotomic.from_qmodz(QmodZ(1, 2)) == -1
    assert Cyclotomic.root_of_unity(2, 4) == Cyclotomic.root_of_unity(1, 2)
    assert z * z.conjugate() == 1
    assert (z + z.conjugate()).to_rational() == 0
    assert Cyclotomic.rational(Fraction(3, 2)).coefficients() == [Fraction(3, 2)]
    with pytest.raises(ValueError):
        Cyclotomic.from_qmodz(QmodZ(1, 3), N=4)

def test_hecke_spec(spec72):
    assert spec72.Lambda == Lattice.full(1)
    assert spec72.C_Lambda.tolist() == [[1]]
    assert spec72.quadratic([1], [2]) == 2

    spec = HeckeSpec(LocalFieldSpec(5, 4), BDDatum.split([[1]], 4))
    assert spec.Lambda == Lattice([[2]])
    assert spec.C_Lambda.tolist() == [[4]]
    with pytest.raises(InvalidDatum):
        spec.coordinates([1])

def test_cocycle_values(spec72):
    assert cocycle_closed(spec72, (1,), (1,)) == MuN(1, 2)
    assert cocycle_closed(spec72, (1,), (2,)) == MuN(0, 2)
    for y1, y2 in itertools.product(lattice_box(spec72, 2), repeat=2):
        expected = cocycle_closed(spec72, y1, y2)
        assert cocycle_oracle(spec72, y1, y2) == expected
        assert cocycle_oracle(spec72, y1, y2, units=((1,), (4,))) == expected
        assert cocycle_bd(spec72, y1, y2) == expected

@pytest.mark.parametrize("convention", ['standard', 'inverse'])
def test_cocycle_agreement(convention):
    grid = reduced_grid(symbol_convention=convention, q=[5, 7, 13], n=[2, 4, 6], rank=[1, 2], coeff=1)
    res = check_cocycles(grid)
    assert res.witness is None
    assert res.checked > 0

def test_sign_flip_is_caught():
    res = check_cocycles(reduced_grid(tame_sign=False, q=[7], n=[2]))
    assert res.witness is not None
    assert res.witness['closed'] != res.witness['oracle']

def test_convolution(spec72):
    d0, d1, d2 = delta(spec72, (0,)), delta(spec72, (1,)), delta(spec72, (2,))
    assert convolve(spec72, d1, d1) == -d2
    assert convolve(spec72, d0, d1) == d1
    assert convolve(spec72, d1, d2) == convolve(spec72, d2, d1)

    # every cocycle path gives the same product
    f = d1 + d2.scale(Cyclotomic.rational(3))
    for path in ['closed', 'oracle', 'bd']:
        assert convolve(spec72, f, f, path=path) == convolve(spec72, f, f)
    with pytest.raises(InvalidDatum):
        convolve(spec72, d1, d1, path='other')

    # delta of zeta varpi^y is eps(zeta)^-1 delta_y
    assert delta(spec72, (1,), zeta=MuN(1, 2)) == -d1
    assert (d1 - d1).is_zero()
    assert d1.to_dict() == [{'y': [1], 'coefficients': ['1']}]

def test_convolution_property():
    res = check_convolution(reduced_grid(q=[5, 7, 13], n=[2, 3, 4], coeff=2))
    assert res.witness is None

def test_noncommutative_control():
    """
    Forcing the support to all of Y breaks commutativity with the units
    """
    field = LocalFieldSpec(5, 4)
    spec = HeckeSpec(field, BDDatum.split([[1]], 4), forced_lattice=Lattice.full(1))
    assert not is_commutative(spec, 1)
    assert is_commutative(HeckeSpec(field, BDDatum.split([[1]], 4)), 2)

def test_structure_table(spec72):
    table = structure_table(spec72, 1)
    assert len(table) == 9
    keys = [(row['y1'], row['y2']) for row in table]
    assert keys == sorted(keys)
    assert {'y1': [1], 'y2': [1], 'zeta_exponent': 1} in table

def test_automorphism():
    field = LocalFieldSpec(5, 4)
    spec = HeckeSpec(field, BDDatum.split([[0]], 4))
    assert automorphism_action(spec, [1], field.generator, (1,)) == MuN(1, 4)
    with pytest.raises(InvalidDatum):
        automorphism_action(spec, [1], field.uniformizer, (1,))

    # the two descriptions only match for the inverse orientation
    std = HeckeSpec(LocalFieldSpec(5, 4, symbol_convention='standard'), BDDatum.split([[0]], 4))
    with pytest.raises(InternalInvariantViolation):
        automorphism_action(std, [1], std.field.generator, (1,))

def test_automorphism_property():
    res = check_automorphism(reduced_grid(q=[5, 13], n=[2, 4], rank=[1, 2], samples=20))
    assert res.witness is None
    assert res.checked > 0

    # skipped, not failed, for the standard orientation
    res = check_automorphism(reduced_grid(symbol_convention='standard'))
    assert res.checked == 0 and res.witness is None

def test_support_witness():
    field = LocalFieldSpec(5, 4)
    spec = HeckeSpec(field, BDDatum.split([[1]], 4))
    assert support_witness(spec, TorusPoint.from_cocharacter(field, [2])) is None

    k = support_witness(spec, TorusPoint.from_cocharacter(field, [1]))
    assert k.as_vector() == (0, 1)

    res = check_support(reduced_grid(q=[5, 7, 13], n=[2, 3, 4], rank=[1, 2], coeff=1))
    assert res.witness is None

def test_nonsplit_hecke():
    torus = TorusDatum(2, [[0, 1], [1, 0]], 2)
    field = LocalFieldSpec(5, 2)
    spec = HeckeSpec(field, BDDatum(torus, [[1, 0], [0, 1]], 2))
    assert spec.Lambda == Lattice([[1, 1]])
    assert spec.C_Lambda.tolist() == [[2]]
    for y1, y2 in itertools.product(lattice_box(spec, 2), repeat=2):
        assert cocycle_oracle(spec, y1, y2) == cocycle_closed(spec, y1, y2) == cocycle_bd(spec, y1, y2)

    with pytest.raises(Unsupported):
        spec.full_cover
    with pytest.raises(Unsupported):
        support_witness(spec, TorusPoint.from_cocharacter(field, [1, 0]))

def test_incarnations():
    field = LocalFieldSpec(5, 2)
    spec = HeckeSpec(field, BDDatum.split([[1, 1], [0, 1]], 2))
    C0 = [[1, 0], [1, 1]]
    assert with_incarnation(spec, C0).Lambda == spec.Lambda
    for y1, y2 in itertools.product(lattice_box(spec, 1), repeat=2):
        assert check_incarnation_change(spec, C0, y1, y2)
        assert baer_sum_check(spec, [[0, 1], [0, 1]], y1, y2)

    assert incarnation_change(spec, C0, (2, 2), MuN(0, 2)) == MuN(0, 2)
    with pytest.raises(InvalidDatum):
        incarnation_change(spec, [[0, 0], [0, 0]], (2, 2), MuN(0, 2))

    res = check_incarnations(reduced_grid(q=[5, 7, 13], n=[2, 4], rank=[1, 2], coeff=1))
    assert res.witness is None
    assert res.checked > 0
