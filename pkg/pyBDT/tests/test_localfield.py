from . import pytest, reduced_grid

from pyBDT.errors import InvalidDatum
from pyBDT.localfield import (ResidueField, prime_power, LocalFieldSpec, MuN, TorusPoint, val_T,
                              evaluate_character, hilbert_pairing_T, hilbert, is_nth_power, h_n)
from pyBDT.bdt.selftest import Grid, check_hilbert_laws

@pytest.mark.parametrize("q", [2, 5, 8, 9, 25])
def test_residue_field(q):
    F = ResidueField(q)
    nonzero = [a for a in F.elements() if a != F.zero]
    assert len(nonzero) == q - 1
    for a in nonzero:
        assert F.exp(F.log(a)) == a
        assert F.mul(a, F.inverse(a)) == F.one
    if q % 2:
        assert F.log(F.minus_one) == (q - 1) // 2
    else:
        assert F.minus_one == F.one

def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(InvalidDatum):
        prime_power(12)
    with pytest.raises(InvalidDatum):
        ResidueField(1)

def test_field_validation():
    with pytest.raises(InvalidDatum):
        LocalFieldSpec(7, 4)
    with pytest.raises(InvalidDatum):
        LocalFieldSpec(7, 2, symbol_convention='other')

    field = LocalFieldSpec(13, 4)
    assert field.zeta_step == 3
    assert field.half_order == 6
    with pytest.raises(InvalidDatum):
        field.update(n=5)

def test_displayed_values():
    field = LocalFieldSpec(7, 2)
    varpi = field.uniformizer
    assert hilbert(field, varpi, varpi).to_dict() == {'zeta_exponent': 1}

    field = LocalFieldSpec(13, 4)
    varpi = field.uniformizer
    assert field.hilbert(varpi, varpi) == MuN(2, 4)
    assert field.hilbert(varpi, field.generator) == MuN(1, 4)
    assert field.hilbert(varpi, field.generator) == h_n(field, field.generator)

    # the standard orientation inverts the second value
    std = LocalFieldSpec(13, 4, symbol_convention='standard')
    assert std.hilbert(std.uniformizer, std.generator) == MuN(-1, 4)

@pytest.mark.parametrize("convention", ['standard', 'inverse'])
def test_hilbert_laws(convention):
    grid = reduced_grid(symbol_convention=convention, hilbert_q=[5, 7, 9])
    res = check_hilbert_laws(grid)
    assert res.witness is None

    # every class triple, every Steinberg pair and every class for nondegeneracy
    expected = 0
    for q in [5, 7, 9]:
        for n in [d for d in range(1, q) if (q - 1) % d == 0]:
            N = n * (q - 1)
            expected += N**3 + (q - 2) + 2 * n * (q - 1) + N
    assert res.checked == expected

def test_full_grid_fields():
    grid = Grid('full')
    fields = set((f.q, f.n) for f in grid.hilbert_fields())
    for q, n in [(9, 2), (9, 4), (9, 8), (11, 5), (11, 10), (13, 12), (5, 4), (7, 6)]:
        assert (q, n) in fields
    assert (11, 4) not in fields
    assert grid.pairs == 1000

    coefficients = set()
    for d in grid.random_data():
        assert d.rank <= 4 and d.n <= 12
        coefficients.update(abs(int(c)) for c in d.C.flat)
    assert max(coefficients) == 5

def test_sign_flip_breaks_steinberg():
    grid = reduced_grid(tame_sign=False, hilbert_q=[7])
    res = check_hilbert_laws(grid)
    assert res.witness is not None

def test_nth_powers_and_residues():
    field = LocalFieldSpec(13, 4)
    assert is_nth_power(field, field.element(4, 8))
    assert not is_nth_power(field, field.element(4, 2))
    assert h_n(field, field.element(0, 5)) == MuN(5, 4)
    with pytest.raises(InvalidDatum):
        h_n(field, field.uniformizer)

def test_one_minus():
    field = LocalFieldSpec(7, 2)
    assert field.one_minus(field.element(2, 3)).is_one()
    assert field.one_minus(field.element(0, 0)) is None

    # 1 - 1/varpi = -(1/varpi)(1 - varpi)
    assert field.one_minus(field.element(-1, 0)) == field.element(-1, field.half_order)

    F = field.residue_field
    a = field.element(0, 2)
    b = field.one_minus(a)
    assert F.add(F.exp(a.unit_exp), F.exp(b.unit_exp)) == F.one

def test_torus_points():
    field = LocalFieldSpec(5, 4)
    t = TorusPoint.from_vector(field, [1, -2, 3, 1])
    assert val_T(t) == (1, -2)
    assert t.as_vector() == (1, -2, 3, 1)
    assert (t * t.inverse()).is_identity()
    assert evaluate_character([1, 1], t) == field.element(-1, 0)

    s = TorusPoint.from_cocharacter(field, [1, 0])
    assert hilbert_pairing_T(field, s, s) == field.hilbert(field.uniformizer, field.uniformizer)

    with pytest.raises(InvalidDatum):
        TorusPoint.from_vector(field, [1, 2, 3])
    with pytest.raises(InvalidDatum):
        t * TorusPoint.from_cocharacter(field, [1])
