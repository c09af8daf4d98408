"""
Subspaces of ``Q^n`` in canonical form.

A subspace is stored by the reduced row echelon form of any spanning set.
That form is unique, so two subspaces are equal exactly when their stored
bases are equal.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
from fractions import Fraction

from hodgefl.linalg.matrices import (QMatrix, DimensionMismatchError, NotInSpanError,
                                     rref, dot, combine, vector)


class Subspace(object):
    """
    A subspace of ``Q^ambient_dim``.
    """

    def __init__(self, ambient_dim, vectors=()):
        """
        :param ambient_dim: dimension of the ambient space
        :type ambient_dim: int
        :param vectors: spanning vectors (need not be independent)
        """
        basis, pivots = rref(vectors, ambient_dim)
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, QMatrix.identity(ambient_dim).entries)

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return 'Subspace({0}, {1})'.format(
            self.ambient_dim, [[str(x) for x in row] for row in self.basis])

    def __add__(self, other):
        return subspace_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def _reduce(self, v):
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError('vector of length {0} in Q^{1}'
                                         .format(len(v), self.ambient_dim))
        return v, combine([-v[p] for p in self.pivots], self.basis, self.ambient_dim)

    def contains_vector(self, v):
        v, correction = self._reduce(v)
        return all(a + b == 0 for a, b in zip(v, correction))

    def contains(self, other):
        """
        Whether ``other`` is a subspace of ``self``.
        """
        _check_ambient(self, other)
        return all(self.contains_vector(b) for b in other.basis)

    def coordinates(self, v):
        """
        Coordinates of ``v`` in the echelon basis; these are simply the
        entries of ``v`` at the pivot columns.

        :raises: :class:`NotInSpanError` if ``v`` is not in the subspace
        """
        if not self.contains_vector(v):
            raise NotInSpanError('{0} is not in {1!r}'.format([str(x) for x in v], self))
        return tuple(vector(v)[p] for p in self.pivots)

    def annihilator(self):
        """
        Rows ``C`` such that ``v`` lies in the subspace iff ``C v = 0``.

        :rtype: list of tuples
        """
        return QMatrix(self.basis, self.dim, self.ambient_dim).nullspace()

    def complement_indices(self):
        """
        The non-pivot columns; the corresponding unit vectors span a
        complement.
        """
        return tuple(j for j in range(self.ambient_dim) if j not in self.pivots)

    def quotient_coordinates(self, v):
        """
        Coordinates of the class of ``v`` in ``Q^ambient_dim / self``.
        """
        v, correction = self._reduce(v)
        return tuple(v[j] + correction[j] for j in self.complement_indices())

    def quotient_lift(self, q):
        """
        A preimage of the quotient coordinates ``q``; inverse to
        :meth:`quotient_coordinates` on the standard complement.
        """
        lifted = [Fraction(0)] * self.ambient_dim
        for j, x in zip(self.complement_indices(), q):
            lifted[j] = x
        return tuple(lifted)

    def basis_matrix(self):
        return QMatrix(self.basis, self.dim, self.ambient_dim)


def _check_ambient(S, T):
    if S.ambient_dim != T.ambient_dim:
        raise DimensionMismatchError('subspaces of Q^{0} and Q^{1}'
                                     .format(S.ambient_dim, T.ambient_dim))


def span(ambient_dim, vectors):
    return Subspace(ambient_dim, vectors)


def subspace_sum(S, T):
    _check_ambient(S, T)
    return Subspace(S.ambient_dim, S.basis + T.basis)


def intersect(S, T):
    _check_ambient(S, T)
    constraints = T.annihilator()
    K = QMatrix([[dot(c, b) for b in S.basis] for c in constraints],
                len(constraints), S.dim)
    return Subspace(S.ambient_dim,
                    [combine(u, S.basis, S.ambient_dim) for u in K.nullspace()])


def image(M, S):
    """
    ``M(S)`` for a matrix ``M`` whose domain is the ambient space of ``S``.
    """
    if M.cols != S.ambient_dim:
        raise DimensionMismatchError('map with domain Q^{0} applied to a subspace of Q^{1}'
                                     .format(M.cols, S.ambient_dim))
    return Subspace(M.rows, [M.apply(b) for b in S.basis])


def preimage(M, S):
    """
    ``{v : M v in S}`` for a matrix ``M`` whose codomain is the ambient space
    of ``S``.
    """
    if M.rows != S.ambient_dim:
        raise DimensionMismatchError('map with codomain Q^{0} pulled back along a subspace of Q^{1}'
                                     .format(M.rows, S.ambient_dim))
    constraints = S.annihilator()
    K = QMatrix(constraints, len(constraints), S.ambient_dim) * M
    return Subspace(M.cols, K.nullspace())


def kernel(M):
    return Subspace(M.cols, M.nullspace())


def quotient_dim(S, T):
    """
    ``dim S / T`` for ``T`` contained in ``S``.
    """
    if not S.contains(T):
        raise DimensionMismatchError('{0!r} is not contained in {1!r}'.format(T, S))
    return S.dim - T.dim


def restricted_map(M, source, target):
    """
    Matrix of ``M`` restricted to ``source`` and corestricted to ``target``,
    in the echelon bases of both.

    :raises: :class:`NotInSpanError` if ``M(source)`` is not inside ``target``
    """
    columns = [target.coordinates(M.apply(b)) for b in source.basis]
    return QMatrix.from_columns(columns, target.dim) if columns else \
        QMatrix.zeros(target.dim, 0)


def quotient_map(M, sub):
    """
    Matrix of the endomorphism ``M`` induced on ``Q^n / sub`` in the
    coordinates of :meth:`Subspace.quotient_coordinates`.

    ``M`` must map ``sub`` into itself.
    """
    if not sub.contains(image(M, sub)):
        raise NotInSpanError('map does not preserve {0!r}'.format(sub))
    q = sub.ambient_dim - sub.dim
    columns = []
    for j in range(q):
        unit = [Fraction(0)] * q
        unit[j] = Fraction(1)
        columns.append(sub.quotient_coordinates(M.apply(sub.quotient_lift(unit))))
    return QMatrix.from_columns(columns, q) if columns else QMatrix.zeros(0, 0)
