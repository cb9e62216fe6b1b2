"""
Exact integer matrix algebra: Smith and Hermite normal forms, integer
kernels and integer linear solves

All matrices are ``numpy`` arrays with ``dtype=object`` holding Python
integers, so entries never overflow.
"""
from .. import numpy
from ..errors import InvalidDatum

from collections import namedtuple
import numbers
import logging

logger = logging.getLogger('bdt.snf')

SmithForm = namedtuple('SmithForm', ['U', 'D', 'V', 'Uinv', 'Vinv', 'diagonal', 'rank'])

def as_int_matrix(data, rows=None, cols=None):
    """
    Convert ``data`` to a two-dimensional object array of Python integers

    Parameters
    ----------
    data : array_like
        nested sequence of integers
    rows, cols : int, optional
        the shape to use when ``data`` is empty

    Returns
    -------
    M : numpy.ndarray
        an integer matrix with ``dtype=object``
    """
    arr = numpy.array(data, dtype=object)
    if arr.size == 0:
        r = rows if rows is not None else (arr.shape[0] if arr.ndim >= 1 else 0)
        c = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
        return numpy.zeros((r, c), dtype=object)
    if arr.ndim != 2:
        raise InvalidDatum("expected a rectangular integer matrix, got an array of dimension %d" %arr.ndim)

    out = numpy.empty(arr.shape, dtype=object)
    for idx, v in numpy.ndenumerate(arr):
        if isinstance(v, bool) or not isinstance(v, numbers.Integral):
            if isinstance(v, numbers.Number) and int(v) == v and not isinstance(v, bool):
                v = int(v)
            else:
                raise InvalidDatum("matrix entry %r at %s is not an integer" %(v, idx))
        out[idx] = int(v)
    return out

def as_int_vector(data, length=None):
    """
    Convert ``data`` to a one-dimensional object array of Python integers
    """
    vals = list(data)
    if length is not None and len(vals) != length:
        raise InvalidDatum("expected a vector of length %d, got length %d" %(length, len(vals)))
    out = numpy.zeros(len(vals), dtype=object)
    for i, v in enumerate(vals):
        if isinstance(v, bool) or int(v) != v:
            raise InvalidDatum("vector entry %r is not an integer" %(v,))
        out[i] = int(v)
    return out

def identity(n):
    return numpy.eye(n, dtype=object)

def matmul(A, B):
    """
    Exact product of integer matrices (or matrix times vector)
    """
    A = numpy.asarray(A, dtype=object)
    B = numpy.asarray(B, dtype=object)
    if A.shape[-1] == 0:
        shape = A.shape[:-1] + B.shape[1:]
        return numpy.zeros(shape, dtype=object)
    return A.dot(B)

def matrix_power(A, e):
    """
    ``A**e`` for a square integer matrix and ``e >= 0``
    """
    result = identity(A.shape[0])
    base = A
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result

def _find_pivot(A, t):
    """
    Position of the nonzero entry of smallest absolute value in
    ``A[t:, t:]``, ties broken in row-major order
    """
    best = None
    m, k = A.shape
    for i in range(t, m):
        for j in range(t, k):
            a = A[i, j]
            if a != 0 and (best is None or abs(a) < best[0]):
                best = (abs(a), i, j)
    return None if best is None else best[1:]

def smith_decomposition(M):
    """
    Smith normal form with both transformation matrices and their
    inverses

    Parameters
    ----------
    M : array_like
        an ``m x k`` integer matrix

    Returns
    -------
    SmithForm
        named tuple with ``M = U.D.V``, ``Uinv``/``Vinv`` the exact inverses,
        ``diagonal`` the list of the first ``min(m, k)`` diagonal entries
        and ``rank`` the number of nonzero ones
    """
    A = as_int_matrix(M).copy()
    m, k = A.shape
    U, Uinv = identity(m), identity(m)
    V, Vinv = identity(k), identity(k)

    def swap_rows(i, j):
        if i == j: return
        A[[i, j]] = A[[j, i]]
        Uinv[[i, j]] = Uinv[[j, i]]
        U[:, [i, j]] = U[:, [j, i]]

    def add_row(i, j, c):
        # row_i += c * row_j
        A[i] = A[i] + c * A[j]
        Uinv[i] = Uinv[i] + c * Uinv[j]
        U[:, j] = U[:, j] - c * U[:, i]

    def negate_row(i):
        A[i] = -A[i]
        Uinv[i] = -Uinv[i]
        U[:, i] = -U[:, i]

    def swap_cols(i, j):
        if i == j: return
        A[:, [i, j]] = A[:, [j, i]]
        V[[i, j]] = V[[j, i]]
        Vinv[:, [i, j]] = Vinv[:, [j, i]]

    def add_col(i, j, c):
        # col_i += c * col_j
        A[:, i] = A[:, i] + c * A[:, j]
        V[j] = V[j] - c * V[i]
        Vinv[:, i] = Vinv[:, i] + c * Vinv[:, j]

    def move_pivot(t):
        pos = _find_pivot(A, t)
        if pos is None:
            return False
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        return True

    t = 0
    while t < min(m, k):
        if not move_pivot(t):
            break
        while True:
            clean = True
            for i in range(t+1, m):
                if A[i, t] != 0:
                    add_row(i, t, -(A[i, t] // A[t, t]))
                    if A[i, t] != 0: clean = False
            for j in range(t+1, k):
                if A[t, j] != 0:
                    add_col(j, t, -(A[t, j] // A[t, t]))
                    if A[t, j] != 0: clean = False
            if not clean:
                move_pivot(t)
                continue

            # the pivot must divide the rest of the block
            offender = None
            for i in range(t+1, m):
                for j in range(t+1, k):
                    if A[i, j] % A[t, t] != 0:
                        offender = i
                        break
                if offender is not None: break
            if offender is None:
                break
            add_row(t, offender, 1)

        if A[t, t] < 0:
            negate_row(t)
        t += 1

    diagonal = [A[i, i] for i in range(min(m, k))]
    rank = sum(1 for d in diagonal if d != 0)
    logger.debug("Smith form of a %dx%d matrix: diagonal %s" %(m, k, diagonal))
    return SmithForm(U, A, V, Uinv, Vinv, diagonal, rank)

def smith_normal_form(M):
    """
    Smith normal form ``M = U.D.V``

    Pivots are chosen by smallest absolute value, ties broken in row-major
    order, so the output is deterministic.

    Returns
    -------
    U, D, V : numpy.ndarray
        ``U`` and ``V`` unimodular, ``D`` diagonal with ``d1 | d2 | ...``
        and nonnegative entries
    """
    S = smith_decomposition(M)
    return S.U, S.D, S.V

def hermite_normal_form(M):
    """
    Row-style Hermite normal form of the row span of ``M``

    The result has linearly independent rows, each pivot positive, entries
    above a pivot reduced into ``[0, pivot)`` and zero rows removed. Two
    matrices span the same lattice iff their Hermite forms agree.
    """
    A = as_int_matrix(M).copy()
    m, k = A.shape
    row = 0
    for col in range(k):
        if row >= m:
            break
        while True:
            nz = [i for i in range(row, m) if A[i, col] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(A[i, col]), i))
            if p != row:
                A[[row, p]] = A[[p, row]]
            clean = True
            for i in range(row+1, m):
                if A[i, col] != 0:
                    A[i] = A[i] - (A[i, col] // A[row, col]) * A[row]
                    if A[i, col] != 0: clean = False
            if clean:
                break
        if A[row, col] == 0:
            continue
        if A[row, col] < 0:
            A[row] = -A[row]
        for i in range(row):
            A[i] = A[i] - (A[i, col] // A[row, col]) * A[row]
        row += 1
    return A[:row].copy() if row else numpy.zeros((0, k), dtype=object)

def kernel_basis(M):
    """
    Hermite-reduced basis (as rows) of ``{x : M.x = 0}``
    """
    M = as_int_matrix(M)
    S = smith_decomposition(M)
    k = M.shape[1]
    cols = [S.Vinv[:, i] for i in range(S.rank, k)]
    if not cols:
        return numpy.zeros((0, k), dtype=object)
    return hermite_normal_form(numpy.array(cols, dtype=object))

def solve_integer(M, b):
    """
    An integer solution of ``M.x = b``, or ``None`` when there is none
    """
    M = as_int_matrix(M)
    m, k = M.shape
    b = as_int_vector(b, length=m)
    S = smith_decomposition(M)
    c = matmul(S.Uinv, b) if m else b
    w = numpy.zeros(k, dtype=object)
    for i in range(m):
        if i < S.rank:
            d = S.diagonal[i]
            if c[i] % d != 0:
                return None
            w[i] = c[i] // d
        elif c[i] != 0:
            return None
    return matmul(S.Vinv, w) if k else w

def determinant(M):
    """
    Exact determinant of a square integer matrix, through its Smith form
    """
    M = as_int_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise InvalidDatum("determinant requires a square matrix")
    if M.shape[0] == 0:
        return 1
    S = smith_decomposition(M)
    if S.rank < M.shape[0]:
        return 0
    prod = 1
    for d in S.diagonal:
        prod *= d
    # det U and det V are +-1; recover the sign from the transformations
    sign = _unimodular_sign(S.U) * _unimodular_sign(S.V)
    return sign * prod

def _unimodular_sign(U):
    """
    The determinant (+1 or -1) of a unimodular matrix, by fraction-free
    elimination
    """
    A = [list(row) for row in U]
    n = len(A)
    sign, prev = 1, 1
    for i in range(n):
        p = next((r for r in range(i, n) if A[r][i] != 0), None)
        if p is None:
            return 0
        if p != i:
            A[i], A[p] = A[p], A[i]
            sign = -sign
        for r in range(i+1, n):
            for c in range(i+1, n):
                A[r][c] = (A[r][c] * A[i][i] - A[r][i] * A[i][c]) // prev
        prev = A[i][i]
    return sign * (1 if A[n-1][n-1] > 0 else -1) if n else 1

def is_unimodular(M):
    """
    True if ``M`` is square with determinant +1 or -1
    """
    M = as_int_matrix(M)
    if M.shape[0] != M.shape[1]:
        return False
    if M.shape[0] == 0:
        return True
    S = smith_decomposition(M)
    return S.rank == M.shape[0] and all(d == 1 for d in S.diagonal)
