"""
Fourier-Laplace transform of monodromic modules, Tate twists and the
antipode.

The transform exchanges ``z_i`` with ``dz_i`` (up to sign) and moves the
eigenspace ``M^chi`` to eigenvalue ``r - chi``. The Hodge filtration picks
up a shift by ``ceil(chi)``; the weight filtration is read off from the
transforms of the weight truncations of ``M``.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging

from hodgefl.linalg import Filtration, Subspace, image
from hodgefl.mono.module import (MonodromicModule, FilteredSpace, ModuleError,
                                 UnsupportedError, validate, weight_truncation,
                                 find_sign_intertwiner, ceil)
from hodgefl.report import Report


log = logging.getLogger(__name__)


def _fractional_part(chi):
    return chi - (chi.numerator // chi.denominator)


def _exchange(M, spaces):
    """
    The transformed structure maps: the new ``z_i`` on ``r - chi`` is
    ``-dz_i`` on ``chi``, the new ``dz_i`` on ``r - chi`` is ``z_i`` on
    ``chi``.
    """
    r = M.r
    zmaps = dict(((i, r - chi), -m) for (i, chi), m in M.dmaps.items())
    dmaps = dict(((i, r - chi), m) for (i, chi), m in M.zmaps.items())
    window = (r - M.window[1], r - M.window[0])
    return MonodromicModule(r, M.denom, window, spaces, zmaps, dmaps,
                            low_flag=M.high_flag, high_flag=M.low_flag)


def _bare_transform(M):
    spaces = dict((M.r - chi, FilteredSpace(M.dim(chi))) for chi in M.eigenvalues)
    return _exchange(M, spaces)


def _weight_jumps(M):
    return sorted(set(k for chi in M.eigenvalues for k in M.spaces[chi].W.jumps))


def fl(M, check=True):
    """
    The Fourier-Laplace transform ``FL(M)``.

    - ``FL(M)^(r-chi) = M^chi`` as vector spaces;
    - ``F_p FL(M)^(r-chi) = F_(p - ceil(chi)) M^chi``;
    - ``W_k FL(M)^chi' = FL(W_(k + r + ceil(frac(chi'))) M)^chi'``.

    :param M: a valid monodromic module
    :type M: :class:`~hodgefl.mono.module.MonodromicModule`
    :param check: validate ``M`` first
    :raises: :class:`~hodgefl.mono.module.ModuleError` if ``M`` is invalid
    """
    if check:
        report = validate(M)
        if not report.passed:
            raise ModuleError('cannot transform an invalid module: failed {0}'
                              .format(', '.join(c.name for c in report.failures)))

    r = M.r
    truncations = []
    for k in _weight_jumps(M):
        sub, inclusions = weight_truncation(M, k)
        transformed = _bare_transform(sub)
        truncations.append((k, transformed, inclusions))

    spaces = {}
    for chi in M.eigenvalues:
        target = r - chi
        space = M.spaces[chi]
        F = space.F.shift(ceil(chi))
        offset = r + ceil(_fractional_part(target))
        levels = []
        for k, transformed, inclusions in truncations:
            # the eigenspace of FL(W_k M) at r - chi is W_k M^chi
            level = image(inclusions[chi], Subspace.full(transformed.dim(target)))
            levels.append((k - offset, level))
        W = Filtration(space.dim, levels) if space.dim else Filtration.trivial(0)
        spaces[target] = FilteredSpace(space.dim, F, W)

    result = _exchange(M, spaces)
    log.debug('transformed module of rank {0} onto window [{1}, {2}]'
              .format(r, result.window[0], result.window[1]))
    return result


def tate_twist(M, l):
    """
    ``M(l)``: ``F`` shifted by ``l``, ``W`` shifted by ``-2l``.
    """
    spaces = dict((chi, space.replace(F=space.F.shift(l), W=space.W.shift(-2 * l)))
                  for chi, space in M.spaces.items())
    return M.replace(spaces=spaces)


def antipode(M):
    """
    Pullback along ``z -> -z``: every ``z_i`` and ``dz_i`` changes sign.
    """
    return M.replace(zmaps=dict((k, -m) for k, m in M.zmaps.items()),
                     dmaps=dict((k, -m) for k, m in M.dmaps.items()))


def fourier_inversion_check(M):
    """
    Compare ``FL(FL(M))`` with the antipode of the Tate twist ``M(r)``,
    i.e. ``F`` shifted by ``r`` and ``W`` by ``-2r``.

    The comparison looks for a sign on each eigenspace making the identity
    an isomorphism of filtered modules.

    :raises: :class:`~hodgefl.mono.module.UnsupportedError` for modules with
             non-integral eigenvalues
    """
    if not M.is_unipotent():
        raise UnsupportedError('inversion is checked for unipotent modules only')
    left = fl(fl(M))
    right = antipode(tate_twist(M, M.r))

    report = Report('fourier-inversion', r=M.r)
    report.add('window', (left.window, left.low_flag, left.high_flag)
               == (right.window, right.low_flag, right.high_flag),
               {'fl-fl': left.window, 'expected': right.window})
    dims = [(chi, left.dim(chi), right.dim(chi)) for chi in left.eigenvalues
            if left.dim(chi) != right.dim(chi)]
    report.add('eigenspace-dims', not dims, dims or None)
    hodge = [(chi, left.spaces[chi].F.graded_dims(), right.spaces[chi].F.graded_dims())
             for chi in left.eigenvalues
             if chi in right.spaces and left.spaces[chi].F != right.spaces[chi].F]
    report.add('hodge-filtration', not hodge, hodge or None)
    weight = [(chi, left.spaces[chi].W.graded_dims(), right.spaces[chi].W.graded_dims())
              for chi in left.eigenvalues
              if chi in right.spaces and left.spaces[chi].W != right.spaces[chi].W]
    report.add('weight-filtration', not weight, weight or None)
    signs = find_sign_intertwiner(left, right)
    report.add('intertwiner', signs is not None)
    if signs is not None:
        report.info['signs'] = dict((chi, s) for chi, s in signs.items() if left.dim(chi))
    return report


def hodge_transport_check(M, transformed=None):
    """
    Check that every Hodge jump ``p`` of ``M^chi`` reappears as the jump
    ``p + ceil(chi)`` of ``FL(M)^(r-chi)``, with the same graded dimension.
    """
    if transformed is None:
        transformed = fl(M)
    report = Report('hodge-transport', r=M.r)
    moved = []
    for chi in M.eigenvalues:
        shift = ceil(chi)
        expected = dict((p + shift, d) for p, d in M.spaces[chi].F.graded_dims())
        found = dict(transformed.spaces[M.r - chi].F.graded_dims())
        if expected != found:
            moved.append({'eigenvalue': chi, 'expected': expected, 'found': found})
    report.add('hodge-jumps', not moved, moved[:10] or None)
    return report
