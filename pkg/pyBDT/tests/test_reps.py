from . import pytest, seeded_rng, reduced_grid

from pyBDT.errors import InvalidDatum
from pyBDT.lattice import Lattice, AbelianGroup, QmodZ
from pyBDT.bd import BDDatum
from pyBDT.localfield import LocalFieldSpec
from pyBDT.cover import CoverSpec
from pyBDT.hecke import Cyclotomic
from pyBDT.reps import (FiniteQuotient, QuotientElement, GenuineCharacter, extend_character,
                        genuine_characters, character_from_values, MonomialMatrix, GenuineIrrep,
                        build_irrep, character_fn, character_norm, same_character, spherical_fixed_dim,
                        is_unramified, pouch_map, pouch_members, pouch_character_sum, GlobalBoundInput,
                        global_multiplicity_bound, stage_bound, split_multiplicity_argument)
from pyBDT.bdt.selftest import check_irreps, check_multiplicity_bound

@pytest.fixture(scope='module')
def characters(quotient):
    return genuine_characters(quotient)

@pytest.fixture(scope='module')
def irreps(quotient, characters):
    return [GenuineIrrep(quotient, chi) for chi in characters]

def random_element(rng, q):
    z = tuple(int(rng.randint(0, m)) for m in q.moduli)
    return QuotientElement(z, int(rng.randint(0, q.n)))

def test_quotient_sizes(quotient):
    """
    q = 5, n = 4, C = [[1]] with the default window
    """
    assert quotient.window == 4
    assert quotient.moduli == (4, 4)
    assert quotient.point_count == 16
    assert quotient.order == 64
    assert len(list(quotient.elements())) == 64
    assert len(list(quotient.unit_points())) == 4

def test_window(cover):
    q = FiniteQuotient(cover, window=8)
    assert q.point_count == 32
    with pytest.raises(InvalidDatum):
        FiniteQuotient(cover, window=6)

def test_group_law(quotient):
    q = quotient
    rng = seeded_rng()
    for _ in range(50):
        a, b, c = [random_element(rng, q) for _ in range(3)]
        assert q.multiply(q.multiply(a, b), c) == q.multiply(a, q.multiply(b, c))
        assert q.multiply(a, q.inverse(a)) == q.identity()

    # killed lifts reduce to the identity
    assert q.element((4, 0)) == q.identity()
    assert q.power(q.generator(0), 4) == q.identity()

    # the commutator of the generators is zeta^2
    assert q.commutator(q.generator(0), q.generator(1)) == q.zeta(2)
    assert q.commutator_exponent((1, 0), (0, 1)) == 2

def test_genuine_characters(quotient, characters):
    assert len(characters) == 4
    assert len(set(characters)) == 4
    assert len(genuine_characters(quotient, unramified=True)) == 2

    for chi in characters:
        assert chi(quotient.zeta()) == QmodZ(1, 4)
        assert chi(quotient.identity()).is_zero()
        for rho in quotient.relation_vectors:
            assert chi.evaluate(rho).is_zero()

    chi = characters[0]
    again = character_from_values(quotient, chi.values)
    assert again == chi

def test_invalid_characters(quotient):
    zdag = quotient.center.zdag
    with pytest.raises(InvalidDatum):
        GenuineCharacter(quotient, zdag, [0, 0], zeta=QmodZ(1, 2))
    with pytest.raises(InvalidDatum):
        GenuineCharacter(quotient, zdag, [0])

    # not abelian in the cover
    with pytest.raises(InvalidDatum):
        GenuineCharacter(quotient, Lattice.full(2), [0, 0])

    # misses the relation (4, 0)
    with pytest.raises(InvalidDatum):
        GenuineCharacter(quotient, Lattice([[8, 0], [0, 4]]), [0, 0])

def test_extend_character():
    G = AbelianGroup((4,))
    assert extend_character(G, [(2,)], [QmodZ(1, 2)]) == (QmodZ(1, 4),)

    G = AbelianGroup((), 2)
    assert extend_character(G, [(2, 0)], [QmodZ(1, 3)]) == (QmodZ(1, 6), QmodZ(0))

def test_irreps(quotient, characters, irreps):
    zdag = quotient.center.zdag
    for chi, pi in zip(characters, irreps):
        assert pi.dimension == 2
        assert pi.check_relations()
        assert character_norm(pi) == 1

        for z in quotient.points():
            g = quotient.element(z)
            if zdag.contains(z):
                assert character_fn(pi, g) == Cyclotomic.from_qmodz(chi(g)) * 2
            else:
                assert pi.trace(g).is_zero()

        # zeta acts by the scalar eps(zeta)
        assert pi.action(quotient.zeta()) == MonomialMatrix.scalar(2, QmodZ(1, 4))

    # distinct central characters give inequivalent representations
    assert not same_character(irreps[0], irreps[1])

def test_lagrangian_independence(quotient, characters, irreps):
    for chi, pi in zip(characters, irreps):
        other = GenuineIrrep(quotient, chi, lagrangian=pi.lagrangian.swapped())
        assert same_character(pi, other)

def test_build_irrep(cover, quotient, characters):
    pi = build_irrep(cover, characters[0])
    assert pi.dimension == 2
    assert same_character(pi, build_irrep(quotient, characters[0]))
    d = pi.to_dict()
    assert len(d['generators']) == 3
    assert len(d['coset_reps']) == 2

    other = CoverSpec(LocalFieldSpec(5, 4), BDDatum.split([[1]], 4))
    with pytest.raises(InvalidDatum):
        build_irrep(other, characters[0])

    # the central character must live on Z#
    with pytest.raises(InvalidDatum):
        GenuineIrrep(quotient, characters[0].restrict(quotient.relation_lattice))

def test_spherical(cover, quotient, characters, irreps):
    dims = [spherical_fixed_dim(cover, pi) for pi in irreps]
    assert dims == [1 if is_unramified(chi) else 0 for chi in characters]
    assert sum(dims) == 2
    assert [spherical_fixed_dim(quotient, pi) for pi in irreps] == dims

    other = CoverSpec(LocalFieldSpec(5, 4), BDDatum.split([[1]], 4))
    with pytest.raises(InvalidDatum):
        spherical_fixed_dim(other, irreps[0])

def test_pouches(quotient, characters, irreps):
    seen = set()
    for chi, pi in zip(characters, irreps):
        pouch = pouch_map(quotient, pi)
        assert pouch.fiber_size == 1
        assert pouch == pouch_map(quotient, chi)
        assert pouch_members(quotient, pouch.core_char) == [chi]
        seen.add(pouch.core_char.values)

        central = quotient.element((2, 0))
        expected = Cyclotomic.from_qmodz(chi(central)) * 2
        assert pouch_character_sum(quotient, pouch.core_char, central) == expected
        assert pouch_character_sum(quotient, pouch.core_char, quotient.element((1, 0))).is_zero()
    assert len(seen) == len(characters)

    other = FiniteQuotient(quotient.cover, window=8)
    with pytest.raises(InvalidDatum):
        pouch_map(other, characters[0])

def test_irreps_property():
    res = check_irreps(reduced_grid(q=[5]))
    assert res.witness is None
    assert res.checked == 4

def test_rank_two_cover():
    cover = CoverSpec(LocalFieldSpec(7, 2), BDDatum.split([[1, 1], [0, 1]], 2))
    q = FiniteQuotient(cover)
    data = q.center
    for chi in genuine_characters(q)[:2]:
        pi = GenuineIrrep(q, chi)
        assert pi.dimension == data.zind
        assert pi.check_relations()
        assert character_norm(pi) == 1

def test_global_bound():
    assert global_multiplicity_bound(GlobalBoundInput(True)) == 1
    assert global_multiplicity_bound(GlobalBoundInput(False, ker_sha=2, sha_n=3)) == 6
    with pytest.raises(InvalidDatum):
        global_multiplicity_bound(GlobalBoundInput(False, ker_sha=2))
    with pytest.raises(InvalidDatum):
        GlobalBoundInput('yes')
    with pytest.raises(InvalidDatum):
        GlobalBoundInput(False, sha_n=0)

    inp = GlobalBoundInput.from_dict({'is_split': False, 'ker_sha': 1, 'sha_n': 2,
                                      'sha_T_index': 2, 'sha_That_index': 3})
    assert inp.to_dict()['sha_That_index'] == 3
    assert stage_bound(inp) == 2 * 3 * 1

    res = check_multiplicity_bound(reduced_grid())
    assert res.witness is None

def test_split_argument(datum):
    argument = split_multiplicity_argument(datum)
    assert argument['bound'] == 1
    assert argument['r'] == 1
    assert argument['factors'] == [2]
