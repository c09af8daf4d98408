"""
Increasing, integer-indexed, finite filtrations of ``Q^n``.

A filtration is stored by its jumps: the indices ``p`` where ``F_p`` is
strictly larger than ``F_{p-1}``, together with ``F_p`` itself. Below the
first jump every level is zero, from the last jump on every level is the
full space.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction

from hodgefl.linalg.matrices import QMatrix, kron_vectors
from hodgefl.linalg.subspace import Subspace, intersect, image, kernel


log = logging.getLogger(__name__)


class FiltrationError(Exception):
    """
    Signals levels that do not form an exhaustive increasing filtration.
    """
    pass


class Filtration(object):
    """
    An increasing filtration ``F_p`` of ``Q^ambient_dim``.
    """

    def __init__(self, ambient_dim, levels=()):
        """
        :param ambient_dim: dimension of the filtered space
        :type ambient_dim: int
        :param levels: ``(index, subspace)`` pairs or a dict; between given
                       indices the level stays constant; pairs sharing an
                       index stand for the sum of their subspaces; the
                       highest given level must be the full space
        :raises: :class:`FiltrationError` for decreasing or non-exhaustive
                 levels
        """
        if isinstance(levels, dict):
            levels = levels.items()
        merged = {}
        for index, subspace in levels:
            if subspace.ambient_dim != ambient_dim:
                raise FiltrationError('level {0} lives in Q^{1}, expected Q^{2}'
                                      .format(index, subspace.ambient_dim, ambient_dim))
            merged[index] = merged[index] + subspace if index in merged else subspace

        jumps = []
        current = Subspace.zero(ambient_dim)
        for index, subspace in sorted(merged.items(), key=lambda pair: pair[0]):
            if not subspace.contains(current):
                raise FiltrationError('level {0} does not contain the level below'
                                      .format(index))
            if subspace != current:
                jumps.append((index, subspace))
                current = subspace
        if not current.is_full():
            raise FiltrationError('filtration of Q^{0} is not exhaustive'.format(ambient_dim))

        self.ambient_dim = ambient_dim
        self._jumps = tuple(jumps)

    @classmethod
    def trivial(cls, ambient_dim, index=0):
        """
        The filtration with a single jump at ``index``.
        """
        return cls(ambient_dim, [(index, Subspace.full(ambient_dim))])

    @property
    def jumps(self):
        """
        The jump indices in increasing order.
        """
        return tuple(index for index, _ in self._jumps)

    @property
    def levels(self):
        """
        ``(index, subspace)`` for every jump.
        """
        return self._jumps

    def level(self, p):
        result = Subspace.zero(self.ambient_dim)
        for index, subspace in self._jumps:
            if index > p:
                break
            result = subspace
        return result

    def __eq__(self, other):
        return (isinstance(other, Filtration) and self.ambient_dim == other.ambient_dim
                and self._jumps == other._jumps)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient_dim, self._jumps))

    def __repr__(self):
        return 'Filtration({0}, jumps={1})'.format(
            self.ambient_dim, ['{0}:{1}'.format(i, s.dim) for i, s in self._jumps])

    def shift(self, l):
        """
        The filtration ``G_p = F_{p-l}``; jumps move up by ``l``.
        """
        return Filtration(self.ambient_dim, [(i + l, s) for i, s in self._jumps])

    def induced_on_sub(self, S):
        """
        ``F_p ∩ S`` in the echelon coordinates of ``S``.
        """
        return Filtration(S.dim, [(i, Subspace(S.dim, [S.coordinates(v)
                                                      for v in intersect(s, S).basis]))
                                  for i, s in self._jumps])

    def induced_on_quotient(self, S):
        """
        ``(F_p + S) / S`` in the quotient coordinates of ``S``.
        """
        q = self.ambient_dim - S.dim
        return Filtration(q, [(i, Subspace(q, [S.quotient_coordinates(v) for v in s.basis]))
                              for i, s in self._jumps])

    def graded_dims(self):
        """
        ``dim F_p / F_{p-1}`` at every jump.

        :returns: ``(index, dim)`` pairs
        :rtype: tuple
        """
        dims = []
        previous = 0
        for index, subspace in self._jumps:
            dims.append((index, subspace.dim - previous))
            previous = subspace.dim
        return tuple(dims)

    def direct_sum(self, other):
        n, m = self.ambient_dim, other.ambient_dim
        indices = sorted(set(self.jumps) | set(other.jumps))
        levels = []
        for p in indices:
            left = [tuple(v) + (Fraction(0),) * m for v in self.level(p).basis]
            right = [(Fraction(0),) * n + tuple(v) for v in other.level(p).basis]
            levels.append((p, Subspace(n + m, left + right)))
        return Filtration(n + m, levels)

    def tensor(self, other):
        """
        The tensor product filtration ``sum_{a+b=p} F_a ⊗ G_b`` in the
        coordinates of :func:`~hodgefl.linalg.matrices.kron_vectors`.
        """
        n = self.ambient_dim * other.ambient_dim
        indices = sorted(set(a + b for a in self.jumps for b in other.jumps))
        levels = []
        for p in indices:
            vectors = [kron_vectors(u, v)
                       for a, level in self._jumps
                       for u in level.basis
                       for v in other.level(p - a).basis]
            levels.append((p, Subspace(n, vectors)))
        return Filtration(n, levels)

    def maps_into(self, M, target, offset=0):
        """
        Check ``M(F_p) ⊆ G_{p + offset}`` for all ``p``.

        Levels are constant between jumps, so it suffices to look at the
        jumps of ``self``.

        :param M: matrix from this filtered space to the target's
        :param target: filtration of the codomain
        :returns: ``None`` if the inclusion holds, else a witness
                  ``(p, vector)`` with ``vector`` in ``F_p``
        """
        for p, subspace in self._jumps:
            goal = target.level(p + offset)
            for v in subspace.basis:
                if not goal.contains_vector(M.apply(v)):
                    return p, v
        return None

    def image_under(self, M):
        """
        The filtration ``M(F_p)`` of the codomain of an isomorphism ``M``.
        """
        return Filtration(M.rows, [(i, image(M, s)) for i, s in self._jumps])


def monodromy_filtration(N, center=0):
    """
    The weight filtration of a nilpotent endomorphism ``N`` centered at
    ``center``::

        M_{c+k} = sum over j >= max(0, k) of  ker N^(j+1) ∩ im N^(j-k)

    :param N: square nilpotent matrix
    :type N: :class:`~hodgefl.linalg.matrices.QMatrix`
    :raises: :class:`FiltrationError` if ``N`` is not nilpotent
    """
    n = N.rows
    if not N.is_nilpotent():
        raise FiltrationError('monodromy filtration of a non-nilpotent map')

    powers = [N.power(j) for j in range(n + 2)]
    kernels = [kernel(P) for P in powers]
    images = [image(P, Subspace.full(n)) for P in powers]

    levels = []
    for k in range(-n, n + 1):
        vectors = []
        for j in range(max(0, k), n + 1):
            if j - k > n + 1:
                continue
            vectors.extend(intersect(kernels[j + 1], images[j - k]).basis)
        levels.append((center + k, Subspace(n, vectors)))
    levels.append((center + n + 1, Subspace.full(n)))
    log.debug('monodromy filtration of a nilpotent {0}x{0} matrix: jumps {1}'
              .format(n, [i for i, _ in levels]))
    return Filtration(n, levels)
