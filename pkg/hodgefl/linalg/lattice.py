"""
Normal forms of integer matrices and the lattices they describe.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (hermite_normal_form as _column_hnf,
                                             invariant_factors as _invariant_factors)

from hodgefl.linalg.matrices import IntMatrix


log = logging.getLogger(__name__)


class _Reducer(object):
    """
    Working copy of a matrix that records row operations in ``U`` and column
    operations in ``V``, so that ``D = U * A * V`` holds at all times.
    """

    def __init__(self, A):
        self.m, self.n = A.shape
        self.D = [list(row) for row in A.entries]
        self.U = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.V = [[int(i == j) for j in range(self.n)] for i in range(self.n)]

    def swap_rows(self, i, j):
        if i != j:
            self.D[i], self.D[j] = self.D[j], self.D[i]
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i, j):
        if i != j:
            for row in self.D:
                row[i], row[j] = row[j], row[i]
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target, source, q):
        """row[target] += q * row[source]"""
        for M in (self.D, self.U):
            M[target] = [a + q * b for a, b in zip(M[target], M[source])]

    def add_col(self, target, source, q):
        """col[target] += q * col[source]"""
        for M in (self.D, self.V):
            for row in M:
                row[target] += q * row[source]

    def negate_row(self, i):
        for M in (self.D, self.U):
            M[i] = [-a for a in M[i]]

    def result(self):
        return (IntMatrix(self.U, self.m, self.m),
                IntMatrix(self.D, self.m, self.n),
                IntMatrix(self.V, self.n, self.n))


def _smallest_entry(D, positions):
    candidates = [(abs(D[i][j]), i, j) for i, j in positions if D[i][j] != 0]
    if not candidates:
        return None
    _, i, j = min(candidates)
    return i, j


def smith_normal_form(A):
    """
    Smith normal form ``D = U * A * V`` of an integer matrix.

    Pivots are chosen as the nonzero entry of smallest absolute value, which
    keeps intermediate entries small on desk-scale input.

    :param A: the matrix
    :type A: :class:`~hodgefl.linalg.matrices.IntMatrix`
    :returns: ``(U, D, V)`` with ``U``, ``V`` unimodular and ``D`` diagonal,
              nonnegative, each diagonal entry dividing the next
    :rtype: tuple of :class:`~hodgefl.linalg.matrices.IntMatrix`
    """
    r = _Reducer(A)
    m, n = r.m, r.n
    D = r.D

    for t in range(min(m, n)):
        pivot = _smallest_entry(D, [(i, j) for i in range(t, m) for j in range(t, n)])
        if pivot is None:
            break
        r.swap_rows(t, pivot[0])
        r.swap_cols(t, pivot[1])

        while True:
            for i in range(t + 1, m):
                if D[i][t]:
                    r.add_row(i, t, -(D[i][t] // D[t][t]))
            for j in range(t + 1, n):
                if D[t][j]:
                    r.add_col(j, t, -(D[t][j] // D[t][t]))

            # remainders are strictly smaller than the pivot
            rest = _smallest_entry(D, [(i, t) for i in range(t + 1, m)]
                                   + [(t, j) for j in range(t + 1, n)])
            if rest is not None:
                i, j = rest
                if j == t:
                    r.swap_rows(t, i)
                else:
                    r.swap_cols(t, j)
                continue

            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            r.add_row(t, bad[0], 1)

        if D[t][t] < 0:
            r.negate_row(t)

    U, D, V = r.result()
    log.debug('Smith normal form of {0}x{1} matrix: diagonal {2}'
              .format(m, n, [D[i, i] for i in range(min(m, n))]))
    return U, D, V


def invariant_factors(A):
    """
    The nonzero invariant factors of ``A`` in increasing order.
    """
    if not A.rows or not A.cols:
        return []
    return sorted(abs(int(f)) for f in _invariant_factors(A.to_domain_matrix()) if f)


def _row_hermite_basis(A):
    """
    The nonzero rows of the row-style Hermite normal form of ``A``.

    sympy reduces the column lattice, placing pivots from the bottom row up;
    on ``A`` with reversed columns, transposed, that is the row-style form
    read backwards.
    """
    m, n = A.shape
    M = DomainMatrix([[ZZ(A[i, n - 1 - j]) for i in range(m)] for j in range(n)], (n, m), ZZ)
    W = _column_hnf(M).to_list()
    r = len(W[0]) if W else 0
    return [tuple(int(W[n - 1 - j][r - 1 - a]) for j in range(n)) for a in range(r)]


def hermite_normal_form(A):
    """
    Row-style Hermite normal form ``H = U * A``.

    Pivots of ``H`` are positive and entries above a pivot lie in
    ``[0, pivot)``; zero rows are at the bottom. The rows of ``U`` for the
    nonzero rows of ``H`` are integer solutions of ``y * A = h``, the
    remaining ones a basis of the left kernel taken from the Smith form.

    :returns: ``(H, U)`` with ``U`` unimodular
    """
    m, n = A.shape
    U0, D, _ = smith_normal_form(A)
    rank = sum(1 for i in range(min(m, n)) if D[i, i] != 0)
    basis = _row_hermite_basis(A) if rank else []
    transform = [integer_solve(A, h) for h in basis]
    transform += [U0.row(i) for i in range(rank, m)]
    H = IntMatrix(basis + [(0,) * n] * (m - rank), m, n)
    return H, IntMatrix(transform, m, m)


def kernel_lattice(A):
    """
    A Z-basis of the lattice ``{l : A l = 0}``.

    The basis is read off the Smith form (the last columns of ``V``) and then
    brought into Hermite normal form, so the result does not depend on the
    pivot choices made on the way.

    :param A: the matrix
    :type A: :class:`~hodgefl.linalg.matrices.IntMatrix`
    :returns: ``cols - rank(A)`` integer vectors
    :rtype: list of tuples
    """
    _, D, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(D.rows, D.cols)) if D[i, i] != 0)
    basis = [V.column(j) for j in range(rank, A.cols)]
    if not basis:
        return []
    return _row_hermite_basis(IntMatrix(basis, len(basis), A.cols))


def integer_solve(A, b):
    """
    Find an integer row vector ``y`` with ``y * A = b``.

    With ``D = U A V`` the equation becomes ``w D = b V`` for ``w = y U^-1``,
    which is solved entry by entry.

    :param A: the matrix
    :type A: :class:`~hodgefl.linalg.matrices.IntMatrix`
    :param b: integer vector of length ``A.cols``
    :returns: the solution as a tuple, or ``None`` if there is none over Z
    """
    U, D, V = smith_normal_form(A)
    c = [sum(b[k] * V[k, j] for k in range(A.cols)) for j in range(A.cols)]
    w = [0] * A.rows
    for j in range(A.cols):
        d = D[j, j] if j < A.rows else 0
        if d == 0:
            if c[j] != 0:
                return None
        elif c[j] % d:
            return None
        else:
            w[j] = c[j] // d
    return tuple(sum(w[i] * U[i, k] for i in range(A.rows)) for k in range(A.rows))
