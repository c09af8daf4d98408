"""
Monodromic modules over a point, stored on a finite window of eigenvalues.

A module is the direct sum of its generalized eigenspaces ``M^chi`` of the
Euler operator ``theta = sum z_i dz_i``. Each eigenspace is a finite
dimensional space with a Hodge filtration ``F`` and a weight filtration
``W``; ``z_i`` raises the eigenvalue by one and ``dz_i`` lowers it by one.

Only the eigenvalues ``chi_min, chi_min + 1/e, ..., chi_max`` are stored.
``low_flag`` says the module goes on below ``chi_min`` (with ``dz_i``
eventually bijective), ``high_flag`` says it goes on above ``chi_max``. On a
side whose flag is unset every eigenspace outside the window is zero, so
maps into it are known to vanish; on a side whose flag is set nothing is
known and checks that would pass through it are skipped.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction
from math import gcd

from hodgefl.linalg import (QMatrix, Filtration, NotInSpanError,
                            rational, restricted_map)
from hodgefl.report import Report


log = logging.getLogger(__name__)

MAX_WITNESSES = 10


class ModuleError(Exception):
    """
    Signals malformed or invalid module data.
    """
    pass


class UnsupportedError(Exception):
    """
    Signals an operation that is only defined for a restricted class of
    modules (e.g. ``r = 1`` or unipotent modules).
    """
    pass


class FilteredSpace(object):
    """
    ``Q^dim`` with a Hodge filtration ``F`` and a weight filtration ``W``.
    """

    def __init__(self, dim, F=None, W=None):
        self.dim = dim
        self.F = F if F is not None else Filtration.trivial(dim)
        self.W = W if W is not None else Filtration.trivial(dim)
        for name, filtration in (('F', self.F), ('W', self.W)):
            if filtration.ambient_dim != dim:
                raise ModuleError('{0} filters Q^{1} but the space is Q^{2}'
                                  .format(name, filtration.ambient_dim, dim))

    @classmethod
    def zero(cls):
        return cls(0)

    def __eq__(self, other):
        return (isinstance(other, FilteredSpace) and self.dim == other.dim
                and self.F == other.F and self.W == other.W)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.dim, self.F, self.W))

    def __repr__(self):
        return 'FilteredSpace({0}, F={1!r}, W={2!r})'.format(self.dim, self.F, self.W)

    def replace(self, F=None, W=None):
        return FilteredSpace(self.dim, F if F is not None else self.F,
                             W if W is not None else self.W)


def eigenvalue_grid(window, denom):
    """
    All eigenvalues ``chi_min + k/denom`` up to ``chi_max``.
    """
    lo, hi = window
    steps = int((hi - lo) * denom)
    return [lo + Fraction(k, denom) for k in range(steps + 1)]


def ceil(chi):
    return -((-chi.numerator) // chi.denominator)


class MonodromicModule(object):
    """
    A monodromic module on ``A^r`` given on a window of eigenvalues.
    """

    def __init__(self, r, denom, window, spaces, zmaps=None, dmaps=None,
                 low_flag=False, high_flag=False):
        """
        :param r: rank of the vector bundle, number of ``z`` coordinates
        :type r: int
        :param denom: common denominator ``e`` of the eigenvalues
        :type denom: int
        :param window: ``(chi_min, chi_max)``, both in ``(1/e)Z``
        :param spaces: :class:`FilteredSpace` per eigenvalue; missing
                       eigenvalues of the window are zero
        :type spaces: dict
        :param zmaps: matrix of ``z_i: M^chi -> M^(chi+1)`` keyed by
                      ``(i, chi)``; missing maps are zero
        :type zmaps: dict
        :param dmaps: matrix of ``dz_i: M^chi -> M^(chi-1)`` keyed by
                      ``(i, chi)``; missing maps are zero
        :type dmaps: dict
        :param low_flag: the module continues below ``chi_min``
        :param high_flag: the module continues above ``chi_max``
        :raises: :class:`ModuleError` for inconsistent data
        """
        if not isinstance(r, int) or r < 1:
            raise ModuleError('rank r must be a positive integer, got {0!r}'.format(r))
        if not isinstance(denom, int) or denom < 1:
            raise ModuleError('denominator must be a positive integer, got {0!r}'.format(denom))
        lo, hi = rational(window[0]), rational(window[1])
        if lo > hi:
            raise ModuleError('empty window [{0}, {1}]'.format(lo, hi))
        for end in (lo, hi):
            if (end * denom).denominator != 1:
                raise ModuleError('window end {0} is not in (1/{1})Z'.format(end, denom))

        self.r = r
        self.denom = denom
        self.window = (lo, hi)
        self.low_flag = bool(low_flag)
        self.high_flag = bool(high_flag)
        self.eigenvalues = eigenvalue_grid(self.window, denom)

        grid = set(self.eigenvalues)
        spaces = dict((rational(chi), space) for chi, space in spaces.items())
        for chi in spaces:
            if chi not in grid:
                raise ModuleError('eigenvalue {0} is not on the window grid'.format(chi))
        self.spaces = dict((chi, spaces.get(chi, FilteredSpace.zero()))
                           for chi in self.eigenvalues)

        self.zmaps = self._collect_maps(zmaps or {}, 1, 'z')
        self.dmaps = self._collect_maps(dmaps or {}, -1, 'dz')

    def _collect_maps(self, given, step, name):
        given = dict(((i, rational(chi)), m) for (i, chi), m in given.items())
        maps = {}
        for i in range(1, self.r + 1):
            for chi in self.eigenvalues:
                target = chi + step
                if not self.in_window(target):
                    continue
                shape = (self.spaces[target].dim, self.spaces[chi].dim)
                m = given.pop((i, chi), None)
                if m is None:
                    m = QMatrix.zeros(*shape)
                elif m.shape != shape:
                    raise ModuleError('{0}_{1} on eigenvalue {2} has shape {3}, expected {4}'
                                      .format(name, i, chi, m.shape, shape))
                maps[(i, chi)] = m
        if given:
            raise ModuleError('{0} maps given outside the window: {1}'
                              .format(name, sorted((i, str(c)) for i, c in given)))
        return maps

    def in_window(self, chi):
        return chi in self.spaces

    def dim(self, chi):
        return self.spaces[chi].dim if chi in self.spaces else 0

    @property
    def total_dim(self):
        return sum(space.dim for space in self.spaces.values())

    def is_zero(self):
        return self.total_dim == 0

    def support(self):
        """
        Eigenvalues with a nonzero eigenspace.
        """
        return [chi for chi in self.eigenvalues if self.spaces[chi].dim]

    def is_unipotent(self):
        return all(chi.denominator == 1 for chi in self.support())

    def space_dim(self, chi):
        """
        ``dim M^chi`` if known: inside the window, or outside on a side whose
        flag is unset (then zero). ``None`` if unknown.
        """
        if chi in self.spaces:
            return self.spaces[chi].dim
        if chi < self.window[0]:
            return None if self.low_flag else 0
        return None if self.high_flag else 0

    def _map(self, maps, i, chi, step):
        if (i, chi) in maps:
            return maps[(i, chi)]
        source, target = self.space_dim(chi), self.space_dim(chi + step)
        if source is None or target is None:
            return None
        return QMatrix.zeros(target, source)

    def zmap(self, i, chi):
        """
        ``z_i: M^chi -> M^(chi+1)``, or ``None`` where it is unknown.
        """
        return self._map(self.zmaps, i, chi, 1)

    def dmap(self, i, chi):
        """
        ``dz_i: M^chi -> M^(chi-1)``, or ``None`` where it is unknown.
        """
        return self._map(self.dmaps, i, chi, -1)

    def euler(self, chi):
        """
        The Euler operator on ``M^chi``.

        Computed as ``sum z_i dz_i`` through ``M^(chi-1)`` when that space is
        known and otherwise as ``sum dz_i z_i - r`` through ``M^(chi+1)``.

        :returns: the matrix or ``None`` if neither neighbour is known
        """
        n = self.dim(chi)
        down = [(self.zmap(i, chi - 1), self.dmap(i, chi)) for i in range(1, self.r + 1)]
        if all(z is not None and d is not None for z, d in down):
            return sum((z * d for z, d in down), QMatrix.zeros(n, n))
        up = [(self.dmap(i, chi + 1), self.zmap(i, chi)) for i in range(1, self.r + 1)]
        if all(d is not None and z is not None for d, z in up):
            return sum((d * z for d, z in up), QMatrix.scalar(n, -self.r))
        return None

    def nilpotent_part(self, chi):
        """
        ``N = theta - chi + r`` on ``M^chi``, or ``None`` if undetermined.
        """
        theta = self.euler(chi)
        if theta is None:
            return None
        return theta + QMatrix.scalar(self.dim(chi), self.r - chi)

    def replace(self, spaces=None, zmaps=None, dmaps=None):
        return MonodromicModule(self.r, self.denom, self.window,
                                spaces if spaces is not None else self.spaces,
                                zmaps if zmaps is not None else self.zmaps,
                                dmaps if dmaps is not None else self.dmaps,
                                self.low_flag, self.high_flag)

    def __eq__(self, other):
        return (isinstance(other, MonodromicModule)
                and (self.r, self.denom, self.window, self.low_flag, self.high_flag)
                == (other.r, other.denom, other.window, other.low_flag, other.high_flag)
                and self.spaces == other.spaces
                and self.zmaps == other.zmaps and self.dmaps == other.dmaps)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'MonodromicModule(r={0}, window=[{1}, {2}], dims={3})'.format(
            self.r, self.window[0], self.window[1],
            dict((str(chi), self.dim(chi)) for chi in self.support()))


def _unit(n, k):
    return tuple(Fraction(int(i == k)) for i in range(n))


def _first_difference(A, B):
    """
    A unit vector on which ``A`` and ``B`` differ, or ``None``.
    """
    for k in range(A.cols):
        if A.column(k) != B.column(k):
            return _unit(A.cols, k)
    return None


class _Witnesses(object):

    def __init__(self):
        self.items = []

    def add(self, **witness):
        if len(self.items) < MAX_WITNESSES:
            self.items.append(witness)

    def __bool__(self):
        return bool(self.items)


def validate(M):
    """
    Check every invariant of a monodromic module.

    - ``[dz_i, z_j] = delta_ij`` and the ``z`` (resp. ``dz``) commute, where
      composable;
    - ``theta - chi + r`` is nilpotent on ``M^chi``;
    - ``z_i`` preserves ``F``, ``dz_i`` raises ``F`` by one;
    - ``z_i`` and ``dz_i`` preserve ``W`` and ``N W_k ⊆ W_(k-2)``.

    :returns: report with one check per invariant; failed checks carry
              witnesses
    :rtype: :class:`~hodgefl.report.Report`
    """
    report = Report('validate', r=M.r, window=[str(M.window[0]), str(M.window[1])])
    commutation, commuting, nilpotency = _Witnesses(), _Witnesses(), _Witnesses()
    hodge, weight, weight_n = _Witnesses(), _Witnesses(), _Witnesses()

    for chi in M.eigenvalues:
        n = M.dim(chi)
        for i in range(1, M.r + 1):
            for j in range(1, M.r + 1):
                lhs, rhs = M.dmap(i, chi + 1), M.zmap(j, chi)
                back, forth = M.zmap(j, chi - 1), M.dmap(i, chi)
                if None not in (lhs, rhs, back, forth):
                    bracket = lhs * rhs - back * forth
                    expected = QMatrix.scalar(n, int(i == j))
                    v = _first_difference(bracket, expected)
                    if v is not None:
                        commutation.add(eigenvalue=chi, i=i, j=j, vector=v)
                if i < j:
                    for kind, getter, step in (('z', M.zmap, 1), ('dz', M.dmap, -1)):
                        a, b = getter(i, chi + step), getter(j, chi)
                        c, d = getter(j, chi + step), getter(i, chi)
                        if None not in (a, b, c, d):
                            v = _first_difference(a * b, c * d)
                            if v is not None:
                                commuting.add(eigenvalue=chi, kind=kind, i=i, j=j, vector=v)

        N = M.nilpotent_part(chi)
        if N is None:
            if n:
                nilpotency.add(eigenvalue=chi, reason='euler operator undetermined')
        elif not N.is_nilpotent():
            nilpotency.add(eigenvalue=chi, matrix=[list(row) for row in N.entries])
        else:
            found = M.spaces[chi].W.maps_into(N, M.spaces[chi].W, -2)
            if found is not None:
                weight_n.add(eigenvalue=chi, level=found[0], vector=found[1])

        space = M.spaces[chi]
        for i in range(1, M.r + 1):
            for getter, step, offset in ((M.zmap, 1, 0), (M.dmap, -1, 1)):
                target = chi + step
                if not M.in_window(target):
                    continue
                m = getter(i, chi)
                name = 'z' if step == 1 else 'dz'
                found = space.F.maps_into(m, M.spaces[target].F, offset)
                if found is not None:
                    hodge.add(eigenvalue=chi, map=name, i=i, level=found[0], vector=found[1])
                found = space.W.maps_into(m, M.spaces[target].W, 0)
                if found is not None:
                    weight.add(eigenvalue=chi, map=name, i=i, level=found[0], vector=found[1])

    report.add('commutation', not commutation, commutation.items or None)
    report.add('commuting-coordinates', not commuting, commuting.items or None)
    report.add('nilpotency', not nilpotency, nilpotency.items or None)
    report.add('hodge-compatibility', not hodge, hodge.items or None)
    report.add('weight-compatibility', not weight, weight.items or None)
    report.add('weight-monodromy', not weight_n, weight_n.items or None)

    log.info('validated module r={0} window [{1}, {2}]: {3} failures'
             .format(M.r, M.window[0], M.window[1], len(report.failures)))
    return report


def direct_sum(A, B):
    """
    ``A ⊕ B``; both modules must share rank, denominator and window.
    """
    if (A.r, A.denom, A.window) != (B.r, B.denom, B.window):
        raise ModuleError('direct sum needs equal rank, denominator and window')
    spaces, zmaps, dmaps = {}, {}, {}
    for chi in A.eigenvalues:
        a, b = A.spaces[chi], B.spaces[chi]
        spaces[chi] = FilteredSpace(a.dim + b.dim, a.F.direct_sum(b.F), a.W.direct_sum(b.W))
    for key in A.zmaps:
        zmaps[key] = QMatrix.block_diagonal(A.zmaps[key], B.zmaps[key])
    for key in A.dmaps:
        dmaps[key] = QMatrix.block_diagonal(A.dmaps[key], B.dmaps[key])
    return MonodromicModule(A.r, A.denom, A.window, spaces, zmaps, dmaps,
                            A.low_flag or B.low_flag, A.high_flag or B.high_flag)


def zero_module(r=1, window=(0, 0), denom=1):
    return MonodromicModule(r, denom, window, {})


def weight_truncation(M, k):
    """
    The submodule ``W_k M``.

    :returns: ``(submodule, inclusions)`` where ``inclusions[chi]`` is the
              matrix of ``W_k M^chi -> M^chi``
    :raises: :class:`ModuleError` if ``W_k`` is not stable under ``z`` and
             ``dz``
    """
    levels = dict((chi, M.spaces[chi].W.level(k)) for chi in M.eigenvalues)
    spaces, inclusions = {}, {}
    for chi, S in levels.items():
        space = M.spaces[chi]
        spaces[chi] = FilteredSpace(S.dim, space.F.induced_on_sub(S), space.W.induced_on_sub(S))
        inclusions[chi] = QMatrix.from_columns(S.basis, space.dim)
    try:
        zmaps = dict(((i, chi), restricted_map(m, levels[chi], levels[chi + 1]))
                     for (i, chi), m in M.zmaps.items())
        dmaps = dict(((i, chi), restricted_map(m, levels[chi], levels[chi - 1]))
                     for (i, chi), m in M.dmaps.items())
    except NotInSpanError as e:
        raise ModuleError('W_{0} is not a submodule: {1}'.format(k, e))
    sub = MonodromicModule(M.r, M.denom, M.window, spaces, zmaps, dmaps,
                           M.low_flag, M.high_flag)
    return sub, inclusions


def _product_window(A, B):
    lo = A.window[0] + B.window[0]
    hi = A.window[1] + B.window[1]
    if (A.low_flag and B.high_flag) or (A.high_flag and B.low_flag):
        raise UnsupportedError('external product of modules unbounded in opposite directions')
    if A.low_flag:
        lo = max(lo, A.window[0] + B.window[1])
    if B.low_flag:
        lo = max(lo, B.window[0] + A.window[1])
    if A.high_flag:
        hi = min(hi, A.window[1] + B.window[0])
    if B.high_flag:
        hi = min(hi, B.window[1] + A.window[0])
    if lo > hi:
        raise ModuleError('windows too narrow for an external product')
    return lo, hi


def external_product(A, B):
    """
    ``A ⊠ B`` on ``A^(rA + rB)``.

    The eigenspace at ``chi`` is the sum of ``A^a ⊗ B^b`` over ``a + b = chi``;
    the filtrations are the tensor product filtrations. The window is cut
    down to the eigenvalues all of whose summands are known.
    """
    lo, hi = _product_window(A, B)
    denom = A.denom * B.denom // gcd(A.denom, B.denom)
    r = A.r + B.r
    grid = eigenvalue_grid((lo, hi), denom)

    blocks = {}
    for chi in grid:
        offset, pairs = 0, {}
        for a in A.eigenvalues:
            b = chi - a
            size = A.dim(a) * B.dim(b)
            if b in B.spaces and size:
                pairs[(a, b)] = (offset, size)
                offset += size
        blocks[chi] = (offset, pairs)

    spaces = {}
    for chi, (dim, pairs) in blocks.items():
        F = Filtration.trivial(0)
        W = Filtration.trivial(0)
        for a, b in sorted(pairs):
            F = F.direct_sum(A.spaces[a].F.tensor(B.spaces[b].F))
            W = W.direct_sum(A.spaces[a].W.tensor(B.spaces[b].W))
        spaces[chi] = FilteredSpace(dim, F, W)

    def factor_map(i, a, b, step):
        getter = A.zmap if step == 1 else A.dmap
        other = B.zmap if step == 1 else B.dmap
        if i <= A.r:
            m = getter(i, a)
            if m is None:
                raise ModuleError('factor map {0} on eigenvalue {1} is unknown'.format(i, a))
            return (a + step, b), m.kron(QMatrix.identity(B.dim(b)))
        m = other(i - A.r, b)
        if m is None:
            raise ModuleError('factor map {0} on eigenvalue {1} is unknown'.format(i - A.r, b))
        return (a, b + step), QMatrix.identity(A.dim(a)).kron(m)

    def product_maps(step):
        maps = {}
        for i in range(1, r + 1):
            for chi in grid:
                if chi + step not in blocks:
                    continue
                source_dim, source_pairs = blocks[chi]
                target_dim, target_pairs = blocks[chi + step]
                entries = [[Fraction(0)] * source_dim for _ in range(target_dim)]
                for (a, b), (offset, size) in source_pairs.items():
                    target, m = factor_map(i, a, b, step)
                    if target not in target_pairs:
                        continue
                    row_offset = target_pairs[target][0]
                    for p in range(m.rows):
                        for q in range(m.cols):
                            entries[row_offset + p][offset + q] = m[p, q]
                maps[(i, chi)] = QMatrix(entries, target_dim, source_dim)
        return maps

    return MonodromicModule(r, denom, (lo, hi), spaces, product_maps(1), product_maps(-1),
                            A.low_flag or B.low_flag, A.high_flag or B.high_flag)


def find_sign_intertwiner(A, B):
    """
    Look for signs ``e(chi)`` such that ``e(chi) id`` on every eigenspace is
    an isomorphism of filtered modules ``A -> B``.

    Signs are propagated along each coset ``chi + Z`` from the lowest
    eigenvalue using the first nonzero ``z`` or ``dz`` map, then verified
    everywhere.

    :returns: dict eigenvalue to ``1`` or ``-1``, or ``None``
    """
    if ((A.r, A.denom, A.window, A.low_flag, A.high_flag)
            != (B.r, B.denom, B.window, B.low_flag, B.high_flag)):
        return None
    if any(A.spaces[chi] != B.spaces[chi] for chi in A.eigenvalues):
        return None

    signs = {}
    for chi in A.eigenvalues:
        below = chi - 1
        if below not in signs:
            signs[chi] = 1
            continue
        sign = signs[below]
        for i in range(1, A.r + 1):
            za, zb = A.zmaps[(i, below)], B.zmaps[(i, below)]
            da, db = A.dmaps[(i, chi)], B.dmaps[(i, chi)]
            if not za.is_zero():
                sign = signs[below] if za == zb else -signs[below]
                break
            if not da.is_zero():
                sign = signs[below] if da == db else -signs[below]
                break
        signs[chi] = sign

    for (i, chi), m in A.zmaps.items():
        if signs[chi + 1] * m != signs[chi] * B.zmaps[(i, chi)]:
            return None
    for (i, chi), m in A.dmaps.items():
        if signs[chi - 1] * m != signs[chi] * B.dmaps[(i, chi)]:
            return None
    return signs


def extend_window(M, window):
    """
    The same module on a larger window; the added eigenspaces must be known
    to vanish.
    """
    lo, hi = rational(window[0]), rational(window[1])
    if lo > M.window[0] or hi < M.window[1]:
        raise ModuleError('[{0}, {1}] does not contain the window [{2}, {3}]'
                          .format(lo, hi, M.window[0], M.window[1]))
    if (lo < M.window[0] and M.low_flag) or (hi > M.window[1] and M.high_flag):
        raise ModuleError('cannot extend the window where the module continues')
    return MonodromicModule(M.r, M.denom, (lo, hi), M.spaces, M.zmaps, M.dmaps,
                            M.low_flag, M.high_flag)
