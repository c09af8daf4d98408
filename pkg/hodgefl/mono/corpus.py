"""
Named and random monodromic modules.

The random modules are direct sums of blocks whose structure is known to
satisfy every invariant:

- local system blocks: ``z = 1``, ``dz = N + chi`` on one class of
  eigenvalues mod ``Z``, continuing in both directions;
- delta blocks: supported on ``chi <= 0``, ``dz = 1`` and ``z = chi``;
- polynomial blocks: supported on ``chi >= 1``, ``z = 1`` and
  ``dz = chi - 1``;
- on ``A^2``, external products of two delta or two polynomial blocks.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction

import numpy as np

from hodgefl.linalg import (QMatrix, Subspace, Filtration, kernel,
                            monodromy_filtration)
from hodgefl.mono.module import (MonodromicModule, FilteredSpace, direct_sum,
                                 external_product, extend_window, eigenvalue_grid)


log = logging.getLogger(__name__)

MAX_BLOCK_DIM = 2
MAX_EIGENSPACE_DIM = 4
MAX_DENOMINATOR = 3


def czmodel():
    """
    ``C[z]`` on ``A^1``: eigenvalues ``1, 2, 3`` of the window carry ``1,
    z, z^2``; ``z`` acts by 1 and ``dz: M^(k+1) -> M^k`` by ``k``.
    """
    one = QMatrix([[1]])
    spaces = dict((Fraction(k), FilteredSpace(1, Filtration.trivial(1, 0),
                                              Filtration.trivial(1, 1)))
                  for k in (1, 2, 3))
    zmaps = {(1, Fraction(1)): one, (1, Fraction(2)): one}
    dmaps = {(1, Fraction(2)): QMatrix([[1]]), (1, Fraction(3)): QMatrix([[2]])}
    return MonodromicModule(1, 1, (1, 3), spaces, zmaps, dmaps,
                            low_flag=False, high_flag=True)


def deltamodel():
    """
    The delta module at the origin of ``A^1``: eigenvalues ``0, -1, -2``
    carry ``delta, dz delta, dz^2 delta`` up to scaling; ``dz`` acts by 1
    and ``z`` on ``M^(-j)`` by ``-j``.
    """
    spaces = dict((Fraction(-k), FilteredSpace(1)) for k in (0, 1, 2))
    zmaps = {(1, Fraction(-1)): QMatrix([[-1]]), (1, Fraction(-2)): QMatrix([[-2]])}
    dmaps = {(1, Fraction(0)): QMatrix([[1]]), (1, Fraction(-1)): QMatrix([[1]])}
    return MonodromicModule(1, 1, (-2, 0), spaces, zmaps, dmaps,
                            low_flag=True, high_flag=False)


def _random_rational(rng):
    return Fraction(int(rng.randint(-3, 4)), int(rng.randint(1, MAX_DENOMINATOR + 1)))


def random_nilpotent(rng, dim):
    """
    A strictly upper triangular matrix with small random entries.
    """
    return QMatrix([[_random_rational(rng) if j > i else Fraction(0) for j in range(dim)]
                    for i in range(dim)], dim, dim)


def random_filtration(rng, dim, stable_under=None):
    """
    A random increasing filtration of ``Q^dim``; with ``stable_under`` it is
    built from the kernels of powers of that nilpotent map.
    """
    start = int(rng.randint(-1, 2))
    if stable_under is not None:
        levels = [(start + k, kernel(stable_under.power(k + 1))) for k in range(dim)]
        return Filtration(dim, levels)
    levels, vectors = [], []
    index = start
    for j in range(dim):
        unit = tuple(Fraction(int(i == j)) for i in range(dim))
        vectors.append(unit)
        index += 1 + int(rng.randint(0, 2))
        levels.append((index, Subspace(dim, vectors)))
    return Filtration(dim, levels)


def local_system_block(rng, window, denom, dim, alpha):
    """
    ``z = 1`` and ``dz = N + chi`` on the eigenvalues ``chi = alpha mod Z``.
    """
    N = random_nilpotent(rng, dim)
    G = random_filtration(rng, dim, stable_under=N)
    W = monodromy_filtration(N, int(rng.randint(0, 3)))
    grid = [chi for chi in eigenvalue_grid(window, denom) if (chi - alpha).denominator == 1]
    spaces, zmaps, dmaps = {}, {}, {}
    offset = 0
    for chi in grid:
        spaces[chi] = FilteredSpace(dim, G.shift(-offset), W)
        if chi + 1 in grid:
            zmaps[(1, chi)] = QMatrix.identity(dim)
            dmaps[(1, chi + 1)] = N + QMatrix.scalar(dim, chi)
            offset += int(rng.randint(0, 2))
    return MonodromicModule(1, denom, window, spaces, zmaps, dmaps, True, True)


def delta_block(rng, window, denom, dim):
    """
    A sum of delta modules: ``dz = 1`` and ``z = chi`` on ``chi <= 0``.
    """
    G = random_filtration(rng, dim)
    W = random_filtration(rng, dim)
    grid = [chi for chi in eigenvalue_grid(window, denom) if chi.denominator == 1 and chi <= 0]
    spaces = dict((chi, FilteredSpace(dim, G.shift(-int(chi)), W)) for chi in grid)
    zmaps = dict(((1, chi), QMatrix.scalar(dim, chi)) for chi in grid if chi + 1 in spaces)
    dmaps = dict(((1, chi), QMatrix.identity(dim)) for chi in grid if chi - 1 in spaces)
    return MonodromicModule(1, denom, window, spaces, zmaps, dmaps, True, False)


def polynomial_block(rng, window, denom, dim):
    """
    A sum of copies of ``C[z]``: ``z = 1`` and ``dz = chi - 1`` on ``chi >= 1``.
    """
    G = random_filtration(rng, dim)
    W = random_filtration(rng, dim)
    grid = [chi for chi in eigenvalue_grid(window, denom) if chi.denominator == 1 and chi >= 1]
    spaces = dict((chi, FilteredSpace(dim, G, W)) for chi in grid)
    zmaps = dict(((1, chi), QMatrix.identity(dim)) for chi in grid if chi + 1 in spaces)
    dmaps = dict(((1, chi), QMatrix.scalar(dim, chi - 1)) for chi in grid if chi - 1 in spaces)
    return MonodromicModule(1, denom, window, spaces, zmaps, dmaps, False, True)


def random_module(seed, r=1):
    """
    A random valid monodromic module on ``A^r`` (``r`` is 1 or 2).

    :param seed: seed of the :class:`numpy.random.RandomState` used
    :type seed: int
    """
    rng = np.random.RandomState(seed)
    if r == 2:
        return _random_product(rng)
    if r != 1:
        raise ValueError('random modules are generated for r = 1 and r = 2')

    denom = int(rng.randint(1, MAX_DENOMINATOR + 1))
    window = (Fraction(-int(rng.randint(1, 3))), Fraction(int(rng.randint(1, 3))))
    blocks, used = [], 0
    while not blocks or (used < MAX_EIGENSPACE_DIM and rng.randint(0, 2)):
        dim = min(int(rng.randint(1, MAX_BLOCK_DIM + 1)), MAX_EIGENSPACE_DIM - used)
        kind = int(rng.randint(0, 3))
        if kind == 0:
            alpha = Fraction(int(rng.randint(0, denom)), denom)
            blocks.append(local_system_block(rng, window, denom, dim, alpha))
        elif kind == 1:
            blocks.append(delta_block(rng, window, denom, dim))
        else:
            blocks.append(polynomial_block(rng, window, denom, dim))
        used += dim
    module = blocks[0]
    for block in blocks[1:]:
        module = direct_sum(module, block)
    log.debug('random module {0}: {1} blocks, {2!r}'.format(seed, len(blocks), module))
    return module


def _random_product(rng):
    low = Fraction(-int(rng.randint(1, 3)))
    high = Fraction(int(rng.randint(1, 3)))
    deltas = [delta_block(rng, (low, 0), 1, 1) for _ in range(2)]
    polys = [polynomial_block(rng, (1, high), 1, 1) for _ in range(2)]
    delta = external_product(*deltas)
    poly = external_product(*polys)
    window = (min(delta.window[0], poly.window[0]), max(delta.window[1], poly.window[1]))
    choice = int(rng.randint(0, 3))
    if choice == 0:
        return delta
    if choice == 1:
        return poly
    return direct_sum(extend_window(delta, window), extend_window(poly, window))


def random_corpus(seed, count):
    """
    ``czmodel``, ``deltamodel`` and ``count`` random modules, the random
    ones seeded ``seed, seed + 1, ...``; every fourth one lives on ``A^2``.

    :returns: list of ``(name, module)``
    """
    corpus = [('czmodel', czmodel()), ('deltamodel', deltamodel())]
    for k in range(count):
        r = 2 if k % 4 == 3 else 1
        corpus.append(('random-{0}-r{1}'.format(seed + k, r), random_module(seed + k, r)))
    log.info('corpus of {0} modules from seed {1}'.format(len(corpus), seed))
    return corpus
