from . import numpy, pytest, reduced_grid

from pyBDT.errors import InvalidDatum
from pyBDT.lattice import Lattice
from pyBDT.bd import (TorusDatum, BDDatum, beta, delta, finite_invariants, zind_lattice, index_bounds,
                      cind_bound, is_sharp, xqn_isomorphism, r_group, r_group_decomposition)
from pyBDT.bd.invariants import Y_lattice, nY_lattice, X_lattice, Xdual_lattice
from pyBDT.bdt.selftest import check_xqn, check_cardinalities

from fractions import Fraction

def swap_torus():
    return TorusDatum(2, [[0, 1], [1, 0]], 2)

def test_rank_one_example(datum):
    """
    C = [[1]], n = 4
    """
    assert datum.B.tolist() == [[2]]
    assert datum.sharp.Ysharp.to_list() == [[2]]
    assert datum.sharp.Xsharp.to_list() == [[2]]
    assert datum.sharp.Xsharp.denominator == 4
    assert zind_lattice(datum) == 2
    assert not is_sharp(datum)

    fin = finite_invariants(datum)
    assert fin.mu.invariant_factors == (2,)
    assert fin.mu_hat.invariant_factors == (2,)
    assert fin.nu_hat.invariant_factors == (2,)
    assert fin.t_n.invariant_factors == (4,)

    assert beta(datum, [1], [1]) == Fraction(1, 2)
    assert delta(datum, [3]) == (6,)

def test_zero_form():
    d = BDDatum.split([[0, 0], [0, 0]], 3)
    fin = finite_invariants(d)
    assert d.sharp.Ysharp.is_full()
    assert fin.mu.is_trivial()
    assert fin.nu_hat.invariant_factors == (3, 3)
    assert zind_lattice(d) == 1

    # Y# = Y forces X# = X, stored over the denominator n
    assert d.sharp.Xsharp == X_lattice(d)
    assert d.sharp.Xsharp.to_list() == [[3, 0], [0, 3]]
    assert d.sharp.Xsharp.denominator == 3
    assert fin.mu.is_trivial() and fin.nu.invariant_factors == (3, 3)

def test_degree_one():
    # the trivial cover: everything is sharp
    d = BDDatum.split([[1, 1], [0, 1]], 1)
    assert is_sharp(d)
    assert zind_lattice(d) == 1
    assert cind_bound(d) == 1
    fin = finite_invariants(d)
    assert fin.t_n.is_trivial()
    assert fin.nu_hat.is_trivial()

def test_split_index_bound(datum):
    bounds = index_bounds(datum)
    assert bounds.h1_n == 1
    assert cind_bound(datum) == 1

def test_r_group(datum):
    assert r_group_decomposition(datum) == (1, [2])
    report = r_group(datum).check_exactness()
    assert report['coker_p'] == 4
    assert report['e_surjective']

@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_r_group_factors_divide_n(n):
    d = BDDatum.split([[1, 2], [0, 3]], n)
    r, factors = r_group_decomposition(d)
    assert r == 2
    assert all(n % f == 0 for f in factors)
    r_group(d).check_exactness()

def test_xqn_property():
    res = check_xqn(reduced_grid(samples=30))
    assert res.witness is None
    assert res.checked == 30

def test_cardinalities_property():
    res = check_cardinalities(reduced_grid(n=[2, 3, 4], rank=[1, 2], coeff=1, samples=10))
    assert res.witness is None
    assert res.checked > 0

def test_xqn_explicit():
    d = BDDatum.split([[1, 1], [0, 2]], 6)
    f = xqn_isomorphism(d)
    assert f.is_bijective()

def test_nonsplit_datum():
    d = BDDatum(swap_torus(), [[1, 0], [0, 1]], 2)
    assert not d.torus.is_split
    assert d.torus.fixed_cocharacters == Lattice([[1, 1]])
    assert d.Lambda == Lattice([[1, 1]])
    assert zind_lattice(d) == 1
    assert cind_bound(d) >= 1

    # the trace form of the permutation torus
    d = BDDatum(swap_torus(), [[0, 1], [0, 0]], 2)
    assert d.Lambda.rank == 1

def test_invalid_data():

    # Q must be Frobenius invariant
    with pytest.raises(InvalidDatum):
        BDDatum(swap_torus(), [[1, 0], [0, 0]], 2)

    # Frobenius must be unimodular of the stated order
    with pytest.raises(InvalidDatum):
        TorusDatum(1, [[2]], 1)
    with pytest.raises(InvalidDatum):
        TorusDatum(1, [[-1]], 1)

    with pytest.raises(InvalidDatum):
        BDDatum.split([[1]], 0)
    with pytest.raises(InvalidDatum):
        BDDatum.split([[1, 2]], 2)

def test_update_invalidates_cache():
    d = BDDatum.split([[1]], 4)
    assert zind_lattice(d) == 2
    d.update(C=[[2]])
    assert d.sharp.Ysharp.is_full()
    assert zind_lattice(d) == 1

def test_from_dict_round_trip():
    d = BDDatum.from_dict({'rank': 2, 'frobenius': [[0, 1], [1, 0]], 'order': 2, 'C': [[1, 0], [0, 1]], 'n': 2})
    again = BDDatum.from_dict(d.to_dict())
    assert again.C.tolist() == d.C.tolist()
    assert again.torus.frobenius.tolist() == [[0, 1], [1, 0]]

SPLIT_DATA = [([[1]], 2), ([[1]], 4), ([[3]], 9), ([[2]], 4), ([[0, 0], [0, 0]], 3), ([[1, 1], [0, 2]], 6),
              ([[1, 2], [0, 3]], 4), ([[2, 1], [0, -1]], 2), ([[1, 0, 1], [0, 2, 0], [0, 0, 3]], 12),
              ([[1, 1], [0, 1]], 1)]

def all_data():
    data = [BDDatum.split(C, n) for C, n in SPLIT_DATA]
    data.append(BDDatum(swap_torus(), [[1, 0], [0, 1]], 2))
    data.append(BDDatum(swap_torus(), [[1, 2], [0, 1]], 4))
    return data

@pytest.mark.parametrize("d", all_data())
def test_sandwich(d):
    sharp = d.sharp
    Y, X = Y_lattice(d), X_lattice(d)

    # nY in Y# in Y and X in X# in n^{-1} X
    assert Y.contains_lattice(sharp.Ysharp)
    assert sharp.Ysharp.contains_lattice(nY_lattice(d))
    assert sharp.Xsharp.contains_lattice(X)
    assert Xdual_lattice(d).contains_lattice(sharp.Xsharp)

    # delta(Y#) in X and delta(Y) in X#
    for y in sharp.Ysharp.basis:
        assert X.contains(delta(d, y))
    for y in Y.basis:
        assert sharp.Xsharp.contains(delta(d, y))

@pytest.mark.parametrize("C, n", SPLIT_DATA)
def test_sharp_iff_trivial_index(C, n):
    d = BDDatum.split(C, n)
    assert is_sharp(d) == (zind_lattice(d) == 1)

@pytest.mark.parametrize("C, n", SPLIT_DATA)
def test_r_group_components_are_nu_hat(C, n):
    d = BDDatum.split(C, n)
    r, factors = r_group_decomposition(d)
    assert factors == list(finite_invariants(d).nu_hat.invariant_factors)
    assert r == d.rank
