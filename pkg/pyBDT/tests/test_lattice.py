from . import numpy, pytest, seeded_rng
from .utils import random_matrix

from pyBDT.errors import InvalidDatum
from pyBDT.lattice import (smith_decomposition, hermite_normal_form, kernel_basis, solve_integer,
                           determinant, is_unimodular, as_int_matrix, matmul, QmodZ, Lattice,
                           AbelianGroup, FiniteAbelianGroup, GroupHom, NotInImage, cokernel,
                           solve_in_image, coinvariants, tate_h1_cyclic, fixed_sublattice,
                           smith_normal_form, character_group, kernel_lattice)

@pytest.mark.parametrize("shape", [(1, 1), (2, 2), (2, 3), (3, 2), (4, 4)])
def test_smith_decomposition(shape):

    rng = seeded_rng(shape[0] * 10 + shape[1])
    for _ in range(20):
        M = as_int_matrix(random_matrix(rng, *shape))
        S = smith_decomposition(M)

        # M = U D V with unimodular transformations
        numpy.testing.assert_array_equal(matmul(matmul(S.U, S.D), S.V), M)
        numpy.testing.assert_array_equal(matmul(S.U, S.Uinv), numpy.eye(shape[0], dtype=object))
        numpy.testing.assert_array_equal(matmul(S.V, S.Vinv), numpy.eye(shape[1], dtype=object))

        # divisibility chain, zeros last
        nonzero = [d for d in S.diagonal if d]
        assert nonzero == S.diagonal[:S.rank]
        assert all(d > 0 for d in nonzero)
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))

def test_smith_empty():
    S = smith_decomposition(numpy.zeros((0, 3), dtype=object))
    assert S.rank == 0
    assert S.V.shape == (3, 3)

def test_hermite_is_canonical():
    a = hermite_normal_form([[2, 2], [0, 2]])
    b = hermite_normal_form([[2, 0], [4, 2], [0, 2]])
    numpy.testing.assert_array_equal(a, b)
    assert Lattice([[2, 2], [0, 2]]) == Lattice([[2, 0], [0, 2]])

def test_kernel_and_solve():
    K = kernel_basis([[1, 1]])
    assert K.tolist() == [[1, -1]]
    assert kernel_basis([[1, 0], [0, 1]]).shape == (0, 2)

    assert solve_integer([[2]], [3]) is None
    assert list(solve_integer([[2]], [4])) == [2]
    x = solve_integer([[2, 3]], [1])
    assert 2 * x[0] + 3 * x[1] == 1

def test_determinant():
    assert determinant([[2, 1], [1, 1]]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[2, 0], [0, 3]]) == 6
    assert determinant([[1, 2], [2, 4]]) == 0
    assert is_unimodular([[0, 1], [1, 0]])
    assert not is_unimodular([[2]])

    with pytest.raises(InvalidDatum):
        determinant([[1, 2]])

def test_non_integer_entries():
    with pytest.raises(InvalidDatum):
        as_int_matrix([[0.5]])
    assert as_int_matrix([[2.0]]).tolist() == [[2]]

def test_qmodz():
    assert QmodZ(3, 4) + QmodZ(1, 2) == QmodZ(1, 4)
    assert QmodZ('5/4') == QmodZ(1, 4)
    assert -QmodZ(1, 3) == QmodZ(2, 3)
    assert QmodZ(1, 2).divide(2) == QmodZ(1, 4)
    assert QmodZ(3, 6).order == 2
    assert (QmodZ(1, 4) * 4).is_zero()
    assert str(QmodZ(7, 7)) == "0"

def test_lattice_operations():

    L1, L2 = Lattice([[2]]), Lattice([[3]])
    assert L1.intersection(L2) == Lattice([[6]])
    assert (L1 + L2) == Lattice.full(1)

    L = Lattice([[2, 0], [0, 3]])
    assert Lattice.full(2).index(L) == 6
    assert L.contains([4, 3]) and not L.contains([1, 0])
    assert L.coordinates([4, 3]) == (2, 1)
    with pytest.raises(InvalidDatum):
        L.coordinates([1, 0])

    # an infinite quotient has no index
    assert Lattice.full(2).index(Lattice([[1, 0]])) is None

def test_cokernel():
    Q = cokernel([[2, 0], [0, 3]])
    assert Q.torsion.invariant_factors == (6,)
    assert Q.free_rank == 0

    Q = cokernel([[2], [0]])
    assert Q.torsion.invariant_factors == (2,)
    assert Q.free_rank == 1

    # lifts project back to the generators
    for i, lift in enumerate(Q.lifts):
        e = [0] * Q.group.ngens
        e[i] = 1
        assert Q.group.normalize(Q.project(lift)) == tuple(e)

def test_group_hom():

    G = FiniteAbelianGroup((4,))
    H = FiniteAbelianGroup((2,))
    f = GroupHom(G, H, [[1]])
    assert f.is_surjective() and not f.is_injective()
    assert f.kernel_order() == 2

    g = GroupHom(H, G, [[2]])
    assert g.is_injective()
    assert solve_in_image(g, (1,)) is NotInImage
    assert not NotInImage
    assert solve_in_image(g, (2,)) == (1,)

def test_abelian_group():
    with pytest.raises(InvalidDatum):
        AbelianGroup((4, 6))

    G = AbelianGroup((2,), free_rank=1)
    assert G.element_order((1, 0)) == 2
    assert G.element_order((0, 1)) == 0
    assert G.order is None
    assert FiniteAbelianGroup.from_orders([2, 3]).invariant_factors == (6,)

def test_coinvariants():
    G = FiniteAbelianGroup((4,))
    assert coinvariants(G, [[-1]]).invariant_factors == (2,)
    assert coinvariants(G, [[1]]).invariant_factors == (4,)

def test_tate_cohomology():

    # sign action on Z
    H = tate_h1_cyclic(Lattice.full(1), [[-1]], 2)
    assert H.invariant_factors == (2,)

    # the permutation module is cohomologically trivial
    H = tate_h1_cyclic(Lattice.full(2), [[0, 1], [1, 0]], 2)
    assert H.is_trivial()

    assert fixed_sublattice([[0, 1], [1, 0]]) == Lattice([[1, 1]])

    with pytest.raises(InvalidDatum):
        tate_h1_cyclic(Lattice.full(1), [[-1]], 1)

def test_smith_normal_form():
    U, D, V = smith_normal_form([[2, 4], [6, 8]])
    numpy.testing.assert_array_equal(D, numpy.array([[2, 0], [0, 4]], dtype=object))
    numpy.testing.assert_array_equal(matmul(matmul(U, D), V), numpy.array([[2, 4], [6, 8]], dtype=object))

    _, D, _ = smith_normal_form([[0]])
    assert D[0, 0] == 0

def test_character_group():
    G = FiniteAbelianGroup((2, 4))
    dual = character_group(G)
    assert dual.invariant_factors == (2, 4)
    assert dual.pairing((0, 1), (0, 1)) == QmodZ(1, 4)
    assert dual.pairing((1, 0), (1, 0)) == QmodZ(1, 2)

    # the pairing separates points
    for g in G.elements():
        if any(g):
            assert any(not dual.pairing(chi, g).is_zero() for chi in dual.elements())

    assert character_group(FiniteAbelianGroup.trivial()).is_trivial()

def test_kernel_lattice_and_image():
    K = kernel_lattice([[1, 1]])
    assert K.rank == 1
    assert K.contains((1, -1))
    assert not K.contains((1, 0))

    f = GroupHom(FiniteAbelianGroup((4,)), FiniteAbelianGroup((2,)), [[1]])
    assert f.image_order() == 2
    g = GroupHom(FiniteAbelianGroup((2,)), FiniteAbelianGroup((4,)), [[2]])
    assert g.image_order() == 2

@pytest.mark.parametrize("rank", [1, 2, 3, 4, 5])
def test_smith_normal_form_random(rank):
    rng = seeded_rng(100 + rank)
    for cols in [rank, rank + 1]:
        for _ in range(10):
            M = as_int_matrix(random_matrix(rng, rank, cols, bound=9))
            U, D, V = smith_normal_form(M)
            numpy.testing.assert_array_equal(matmul(matmul(U, D), V), M)
            assert is_unimodular(U) and is_unimodular(V)

            diagonal = [D[i, i] for i in range(rank)]
            assert all(D[i, j] == 0 for i in range(rank) for j in range(cols) if i != j)
            nonzero = [d for d in diagonal if d]
            assert nonzero == diagonal[:len(nonzero)]
            assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
            if cols == rank:
                assert numpy.prod(diagonal) == abs(determinant(M))

def invariant_factor_lists(bound):
    """
    Every chain ``d1 | d2 | ...`` of factors ``> 1`` with product at most ``bound``
    """
    out = [()]
    def extend(prefix, order):
        last = prefix[-1] if prefix else 1
        for d in range(max(last, 2), bound // order + 1):
            if d % last == 0:
                out.append(prefix + (d,))
                extend(prefix + (d,), order * d)
    extend((), 1)
    return out

def test_invariant_factor_lists():
    groups = invariant_factor_lists(64)
    assert len(set(groups)) == len(groups)
    assert sum(1 for f in groups if numpy.prod(f) == 64) == 11
    assert sum(1 for f in groups if numpy.prod(f) == 16) == 5

@pytest.mark.parametrize("factors", invariant_factor_lists(64))
def test_character_group_bilinear(factors):
    G = FiniteAbelianGroup(factors)
    dual = character_group(G)
    gens = [tuple(1 if i == j else 0 for i in range(G.ngens)) for j in range(G.ngens)]

    # additivity along every generator in each argument gives bilinearity
    elements = list(G.elements())
    for chi in elements:
        for g in elements:
            value = dual.pairing(chi, g)
            for e in gens:
                assert dual.pairing(dual.add(chi, e), g) == value + dual.pairing(e, g)
                assert dual.pairing(chi, G.add(g, e)) == value + dual.pairing(chi, e)

    # and it is perfect
    for g in elements:
        if any(g):
            assert any(not dual.pairing(e, g).is_zero() for e in gens)
    assert dual.order == G.order

@pytest.mark.parametrize("sigma, d, fixed, h1", [
    ([[-1]], 2, [], (2,)),
    ([[0, 1], [1, 0]], 2, [[1, 1]], ()),
    ([[-1, 0], [0, 1]], 2, [[0, 1]], (2,)),
    ([[-1, 0], [0, -1]], 2, [], (2, 2)),
    ([[0, -1], [1, 0]], 4, [], (2,)),
    ([[0, -1], [1, -1]], 3, [], (3,)),
    ([[0, 0, 1], [1, 0, 0], [0, 1, 0]], 3, [[1, 1, 1]], ()),
])
def test_fixed_sublattice_and_tate(sigma, d, fixed, h1):
    r = len(sigma)
    L = fixed_sublattice(sigma)
    assert L == Lattice(fixed, ambient_rank=r)

    # sigma-stable, and fixed pointwise
    for b in L.basis:
        image = matmul(as_int_matrix(sigma), b)
        assert L.contains(image)
        assert tuple(image) == tuple(b)

    H = tate_h1_cyclic(Lattice.full(r), sigma, d)
    assert H.invariant_factors == h1
    assert all(d % f == 0 for f in H.invariant_factors)

@pytest.mark.parametrize("domain, codomain", [
    (Lattice.full(2), FiniteAbelianGroup((2, 6))),
    (Lattice.full(3), AbelianGroup((3,), free_rank=2)),
    (FiniteAbelianGroup((4,)), FiniteAbelianGroup((2, 4))),
    (FiniteAbelianGroup((2, 4)), FiniteAbelianGroup((8,))),
    (FiniteAbelianGroup((6,)), FiniteAbelianGroup((3, 9))),
])
def test_solve_in_image_of_images(domain, codomain):
    rng = seeded_rng(7)
    homs = 0
    for _ in range(1000):
        try:
            f = GroupHom(domain, codomain, random_matrix(rng, codomain.ngens, domain.ngens, bound=9))
        except InvalidDatum:
            continue
        for _ in range(5):
            x = domain.normalize(rng.randint(-20, 21, size=domain.ngens).tolist())
            b = f(x)
            y = solve_in_image(f, b)
            assert y is not NotInImage
            assert f(y) == b
        homs += 1
        if homs == 20:
            break
    assert homs == 20
