"""
Restriction of monodromic modules on ``A^1`` to the origin.

Both restrictions are two-term complexes of filtered vector spaces built
from the eigenspaces ``M^0`` and ``M^1``::

    i^! M = [M^0 --z--> M^1]     in degrees 0, 1
    i^* M = [M^1 --dz--> M^0]    in degrees -1, 0

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction

from hodgefl.linalg import QMatrix, kernel, image, Subspace
from hodgefl.mono.module import FilteredSpace, UnsupportedError, ModuleError
from hodgefl.mono.transform import fl
from hodgefl.report import Report


log = logging.getLogger(__name__)


class FilteredTwoTermComplex(object):
    """
    ``source --d--> target`` in degrees ``degree`` and ``degree + 1``.
    """

    def __init__(self, degree, source, target, d):
        """
        :param degree: cohomological degree of ``source``
        :type degree: int
        :type source: :class:`~hodgefl.mono.module.FilteredSpace`
        :type target: :class:`~hodgefl.mono.module.FilteredSpace`
        :param d: matrix of the differential
        :type d: :class:`~hodgefl.linalg.QMatrix`
        """
        if d.shape != (target.dim, source.dim):
            raise ModuleError('differential of shape {0} between spaces of dimension {1} and {2}'
                              .format(d.shape, source.dim, target.dim))
        self.degree = degree
        self.source = source
        self.target = target
        self.d = d

    @property
    def degrees(self):
        return (self.degree, self.degree + 1)

    def cohomology_dims(self):
        """
        ``{degree: dim ker d, degree + 1: dim coker d}``
        """
        rank = self.d.rank()
        return {self.degree: self.source.dim - rank, self.degree + 1: self.target.dim - rank}

    def is_filtered(self):
        """
        Whether ``d`` respects both filtrations.
        """
        return (self.source.F.maps_into(self.d, self.target.F) is None
                and self.source.W.maps_into(self.d, self.target.W) is None)

    def twist(self, l):
        """
        Tate twist of both terms.
        """
        def twisted(space):
            return space.replace(F=space.F.shift(l), W=space.W.shift(-2 * l))
        return FilteredTwoTermComplex(self.degree, twisted(self.source), twisted(self.target),
                                      self.d)

    def shift(self, n):
        """
        ``C[n]``: degrees move down by ``n`` and the differential is
        multiplied by ``(-1)^n``.
        """
        sign = -1 if n % 2 else 1
        return FilteredTwoTermComplex(self.degree - n, self.source, self.target, self.d * sign)

    def __eq__(self, other):
        return (isinstance(other, FilteredTwoTermComplex) and self.degree == other.degree
                and self.source == other.source and self.target == other.target
                and self.d == other.d)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'FilteredTwoTermComplex(degrees={0}, dims=({1}, {2}))'.format(
            self.degrees, self.source.dim, self.target.dim)

    def to_json(self):
        return {
            'degrees': list(self.degrees),
            'dims': [self.source.dim, self.target.dim],
            'hodge': [list(self.source.F.graded_dims()), list(self.target.F.graded_dims())],
            'weight': [list(self.source.W.graded_dims()), list(self.target.W.graded_dims())],
            'd': [[str(x) for x in row] for row in self.d.entries],
        }


def _eigenspace(M, chi):
    chi = Fraction(chi)
    if M.in_window(chi):
        return M.spaces[chi]
    if M.space_dim(chi) == 0:
        return FilteredSpace.zero()
    raise UnsupportedError('eigenvalue {0} lies outside the window and the module '
                           'continues there'.format(chi))


def _require_line(M):
    if M.r != 1:
        raise UnsupportedError('restriction to the origin is implemented for r = 1, got r = {0}'
                               .format(M.r))


def _map(M, getter, chi, source, target):
    m = getter(1, Fraction(chi))
    return m if m is not None else QMatrix.zeros(target.dim, source.dim)


def restrict_shriek(M):
    """
    ``i^! M = [M^0 --z--> M^1]`` in degrees 0 and 1 with
    ``F_p = F_(p+1) M^0 -> F_(p+1) M^1`` and
    ``W_k = W_k M^0 -> W_(k-1) M^1``.
    """
    _require_line(M)
    zero, one = _eigenspace(M, 0), _eigenspace(M, 1)
    source = zero.replace(F=zero.F.shift(-1))
    target = one.replace(F=one.F.shift(-1), W=one.W.shift(1))
    return FilteredTwoTermComplex(0, source, target, _map(M, M.zmap, 0, zero, one))


def restrict_star(M):
    """
    ``i^* M = [M^1 --dz--> M^0]`` in degrees -1 and 0 with
    ``F_p = F_p M^1 -> F_(p+1) M^0`` and
    ``W_k = W_(k+1) M^1 -> W_k M^0``.
    """
    _require_line(M)
    zero, one = _eigenspace(M, 0), _eigenspace(M, 1)
    source = one.replace(W=one.W.shift(-1))
    target = zero.replace(F=zero.F.shift(-1))
    return FilteredTwoTermComplex(-1, source, target, _map(M, M.dmap, 1, one, zero))


def compare_complexes(report, name, left, right):
    """
    Add checks that ``left`` and ``right`` agree termwise, with differentials
    equal up to a global sign.

    :returns: the sign, or ``None`` if the differentials differ otherwise
    """
    report.add(name + '.degrees', left.degrees == right.degrees,
               {'left': left.degrees, 'right': right.degrees})
    report.add(name + '.dims', (left.source.dim, left.target.dim)
               == (right.source.dim, right.target.dim))
    report.add(name + '.hodge', left.source.F == right.source.F
               and left.target.F == right.target.F,
               {'left': left.to_json()['hodge'], 'right': right.to_json()['hodge']})
    report.add(name + '.weight', left.source.W == right.source.W
               and left.target.W == right.target.W,
               {'left': left.to_json()['weight'], 'right': right.to_json()['weight']})
    sign = None
    if left.d.shape == right.d.shape:
        if left.d == right.d:
            sign = 1
        elif left.d == -right.d:
            sign = -1
    report.add(name + '.differential', sign is not None,
               {'left': left.to_json()['d'], 'right': right.to_json()['d']})
    return sign


def check_fl_restriction(M):
    """
    Compare the restrictions of ``FL(M)`` with those of ``M``::

        i^* FL(M)  ~  i^! M (1) [1]
        i^! FL(M)  ~  i^* M [-1]

    as filtered complexes. The first comparison also checks the explicit
    form ``F_p [M^0 -> M^1]`` and ``W_(k+2) M^0 -> W_(k+1) M^1`` of its
    filtrations.

    :raises: :class:`~hodgefl.mono.module.UnsupportedError` unless ``r = 1``
             and the eigenvalues 0 and 1 are determined
    """
    _require_line(M)
    transformed = fl(M)
    report = Report('fl-restriction')

    star = restrict_star(transformed)
    expected = restrict_shriek(M).twist(1).shift(1)
    star_sign = compare_complexes(report, 'star', star, expected)

    zero, one = _eigenspace(M, 0), _eigenspace(M, 1)
    report.add('star.explicit-hodge', star.source.F == zero.F and star.target.F == one.F)
    report.add('star.explicit-weight', star.source.W == zero.W.shift(-2)
               and star.target.W == one.W.shift(-1))

    shriek = restrict_shriek(transformed)
    shriek_sign = compare_complexes(report, 'shriek', shriek, restrict_star(M).shift(-1))

    report.info['signs'] = {'star': star_sign, 'shriek': shriek_sign}
    report.info['cohomology'] = {'star': star.cohomology_dims(),
                                 'shriek': shriek.cohomology_dims()}
    return report


def check_can_var(M):
    """
    ``can: M^1 -> M^0`` is ``dz`` and ``var: M^0 -> M^1`` is ``z``; check
    ``can var = N`` on ``M^0`` and ``var can = N`` on ``M^1``.
    """
    _require_line(M)
    zero, one = _eigenspace(M, 0), _eigenspace(M, 1)
    var = _map(M, M.zmap, 0, zero, one)
    can = _map(M, M.dmap, 1, one, zero)
    report = Report('can-var')
    for chi, composite, dim in ((0, can * var, zero.dim), (1, var * can, one.dim)):
        N = M.nilpotent_part(Fraction(chi)) if dim else QMatrix.zeros(0, 0)
        if N is None:
            report.add('N on M^{0}'.format(chi), False, 'monodromy undetermined')
            continue
        report.add('N on M^{0}'.format(chi), composite == N,
                   {'composite': [[str(x) for x in row] for row in composite.entries],
                    'N': [[str(x) for x in row] for row in N.entries]})
    report.info['var-kernel'] = kernel(var).dim
    report.info['can-image'] = image(can, Subspace.full(one.dim)).dim
    return report
