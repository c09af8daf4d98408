"""
GKZ systems: box and Euler operators of an integer matrix ``A`` and a
parameter ``beta``, the hypotheses on ``A`` (homogeneous, pointed, columns
spanning ``Z^d``) and operator identities checked with the Weyl engine.

The coordinates of the system are ``l_1, ..., l_n`` (group ``l``); the
Fourier transformed system lives in ``m_1, ..., m_n`` (group ``m``).

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import itertools
import logging
from fractions import Fraction

import numpy as np

from hodgefl.linalg import (IntMatrix, QMatrix, DimensionMismatchError, rational,
                            kernel_lattice, integer_solve, invariant_factors)
from hodgefl.report import Report
from hodgefl.weyl import (WeylElement, commutator, fl_automorphism, euler_operator,
                          format_element)


log = logging.getLogger(__name__)

SOURCE = 'l'
TARGET = 'm'


class GkzError(Exception):
    """
    Signals an invalid matrix, parameter or lattice basis.
    """
    pass


def orient(v):
    """
    ``v`` or ``-v``, whichever has a negative first nonzero entry.
    """
    for x in v:
        if x:
            return tuple(v) if x < 0 else tuple(-y for y in v)
    return tuple(v)


def negative_part(v):
    return tuple(-x if x < 0 else 0 for x in v)


def positive_part(v):
    return tuple(x if x > 0 else 0 for x in v)


def box_operator(v):
    """
    ``prod_(v_i < 0) dl_i^(-v_i) - prod_(v_i > 0) dl_i^(v_i)``
    """
    return (WeylElement.monomial(SOURCE, derivations=negative_part(v))
            - WeylElement.monomial(SOURCE, derivations=positive_part(v)))


def _as_matrix(A):
    if isinstance(A, IntMatrix):
        return A
    try:
        return IntMatrix(A)
    except (TypeError, DimensionMismatchError) as e:
        raise GkzError('not an integer matrix: {0}'.format(e))


class GkzSystem(object):
    """
    The operators ``box_v`` for ``v`` in a basis of ``ker A`` (and optionally
    in a bounded part of the lattice) and ``E_k - beta_k``, together with
    the structural flags of ``A``.
    """

    def __init__(self, A, beta, lattice_basis, extra_lattice=()):
        self.A = A
        self.beta = beta
        self.lattice_basis = list(lattice_basis)
        self.extra_lattice = list(extra_lattice)
        self.boxes = [box_operator(v) for v in self.lattice]
        self.eulers = [euler_operator(SOURCE, A.row(k), beta[k]) for k in range(A.rows)]
        self.flags = {
            'homogeneous': is_homogeneous(A),
            'pointed': is_pointed(A),
            'columns_span': columns_span(A),
        }

    @property
    def d(self):
        return self.A.rows

    @property
    def n(self):
        return self.A.cols

    @property
    def lattice(self):
        """
        The lattice vectors with a box operator: the basis first.
        """
        return self.lattice_basis + self.extra_lattice

    @property
    def generators(self):
        return self.boxes + self.eulers

    def to_json(self):
        return {
            'A': [list(row) for row in self.A.entries],
            'beta': [str(b) for b in self.beta],
            'lattice_basis': [list(v) for v in self.lattice_basis],
            'extra_lattice': [list(v) for v in self.extra_lattice],
            'boxes': [format_element(b) for b in self.boxes],
            'eulers': [format_element(e) for e in self.eulers],
            'flags': dict(self.flags),
        }

    def __repr__(self):
        return 'GkzSystem(A={0}, beta={1}, {2} boxes)'.format(
            self.A, [str(b) for b in self.beta], len(self.boxes))


def construct(A, beta, lattice_basis=None, bound=0):
    """
    Build the GKZ system of ``A`` and ``beta``.

    :param A: ``d x n`` integer matrix, not zero
    :type A: :class:`~hodgefl.linalg.IntMatrix` or nested lists
    :param beta: ``d`` rationals
    :param lattice_basis: a basis of ``ker A`` to use instead of the Hermite
                          reduced one; the flags do not depend on it
    :param bound: also emit boxes for every lattice vector of 1-norm at most
                  ``bound``
    :raises: :class:`GkzError`
    """
    A = _as_matrix(A)
    if A.is_zero():
        raise GkzError('A must not be the zero matrix')
    try:
        beta = tuple(rational(b) for b in beta)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise GkzError('beta is not a rational vector: {0}'.format(e))
    if len(beta) != A.rows:
        raise GkzError('beta has length {0}, A has {1} rows'.format(len(beta), A.rows))

    expected = A.cols - A.rank()
    if lattice_basis is None:
        basis = kernel_lattice(A)
    else:
        basis = [tuple(v) for v in lattice_basis]
        for v in basis:
            if len(v) != A.cols or any(A.apply(v)):
                raise GkzError('{0} is not in the kernel of A'.format(list(v)))
        if len(basis) != expected or (basis and QMatrix(basis, len(basis), A.cols).rank()
                                      != expected):
            raise GkzError('a kernel basis of A needs {0} independent vectors'
                           .format(expected))
    basis = [orient(v) for v in basis]
    extra = [v for v in lattice_elements(A, bound) if v not in basis] if bound else []
    system = GkzSystem(A, beta, basis, extra)
    log.info('GKZ system of a {0}x{1} matrix: {2} boxes, flags {3}'
             .format(A.rows, A.cols, len(system.boxes), sorted(system.flags.items())))
    return system


def is_homogeneous(A):
    """
    Whether ``(1, ..., 1)`` lies in the integer row span of ``A``.
    """
    A = _as_matrix(A)
    return integer_solve(A, (1,) * A.cols) is not None


def _normalize(coefficients, bound):
    lead = next((abs(c) for c in coefficients if c), None)
    if lead is None:
        return coefficients, bound
    return tuple(c / lead for c in coefficients), bound / lead


def _eliminate(inequalities, j):
    upper, lower, rest = [], [], []
    for c, b in inequalities:
        (upper if c[j] > 0 else lower if c[j] < 0 else rest).append((c, b))
    combined = set(rest)
    for (p, pb), (q, qb) in itertools.product(upper, lower):
        scale_p, scale_q = 1 / p[j], -1 / q[j]
        c = tuple(x * scale_p + y * scale_q for x, y in zip(p, q))
        combined.add(_normalize(c, pb * scale_p + qb * scale_q))
    return combined


def _cone_contains_line(A):
    """
    Decide by Fourier-Motzkin elimination whether ``A x = 0``,
    ``x >= 0``, ``sum x = 1`` has a rational solution.
    """
    n = A.cols
    zero, one = Fraction(0), Fraction(1)
    inequalities = set()
    for row in A.entries:
        c = tuple(Fraction(x) for x in row)
        inequalities.add(_normalize(c, zero))
        inequalities.add(_normalize(tuple(-x for x in c), zero))
    inequalities.add(((one,) * n, one))
    inequalities.add(((-one,) * n, -one))
    for i in range(n):
        inequalities.add((tuple(-one if k == i else zero for k in range(n)), zero))
    for j in range(n):
        inequalities = _eliminate(inequalities, j)
        log.debug('eliminated x{0}: {1} inequalities left'.format(j + 1, len(inequalities)))
    return all(b >= 0 for _, b in inequalities)


def is_pointed(A):
    """
    Whether the semigroup of the columns of ``A`` is pointed.

    A zero column makes it not pointed. Otherwise pointedness of the
    semigroup and of the rational cone agree, and the cone is pointed iff no
    nonzero nonnegative combination of the columns vanishes.
    """
    A = _as_matrix(A)
    if any(not any(col) for col in A.columns()):
        return False
    return not _cone_contains_line(A)


def columns_span(A):
    """
    Whether the columns of ``A`` span ``Z^d``.
    """
    A = _as_matrix(A)
    factors = invariant_factors(A)
    return len(factors) == A.rows and all(f == 1 for f in factors)


def lattice_elements(A, bound):
    """
    All ``v`` with ``A v = 0`` and ``0 < |v|_1 <= bound``, one of each pair
    ``+-v``, oriented with a negative first nonzero entry.
    """
    A = _as_matrix(A)
    found = []
    for v in itertools.product(range(-bound, bound + 1), repeat=A.cols):
        size = sum(abs(x) for x in v)
        if 0 < size <= bound and orient(v) == v and not any(A.apply(v)):
            found.append(v)
    return sorted(found, key=lambda v: (sum(abs(x) for x in v), v))


def torus_operators(beta):
    """
    ``t_i dt_i + beta_i`` for every entry of ``beta``.
    """
    operators = []
    for i, b in enumerate(beta):
        weights = [0] * len(beta)
        weights[i] = 1
        operators.append(euler_operator('t', weights, -rational(b)))
    return operators


def euler_box_commutators(system):
    """
    Check ``[E_k, box_v] = -(A v_-)_k box_v`` for every Euler operator and
    box, ``v_-`` being the negative part of ``v``.
    """
    report = Report('euler-box-commutators', boxes=len(system.boxes))
    for t, (v, box) in enumerate(zip(system.lattice, system.boxes)):
        weights = system.A.apply(negative_part(v))
        for k, euler in enumerate(system.eulers):
            residual = commutator(euler, box) + box * weights[k]
            report.add('E{0}.box{1}'.format(k + 1, t + 1), residual.is_zero(),
                       {'lattice': v, 'residual': format_element(residual)}
                       if not residual.is_zero() else None)
    return report


def fourier_transform_generators(system, inverse=True):
    """
    The images of the box and Euler operators under the Fourier
    automorphism from ``l`` to ``m``; ``inverse`` selects the convention
    ``l -> -dm``, ``dl -> m``.
    """
    return [fl_automorphism(g, SOURCE, TARGET, inverse=inverse) for g in system.generators]


def fourier_report(system):
    """
    Round trip of both conventions on every generator, the shape of the
    transformed Euler operators and the form of the transformed boxes.

    Under the inverse convention ``box_v`` goes to the binomial
    ``m^(v_-) - m^(v_+)``; under the forward one each monomial picks up the
    sign ``(-1)^degree``. The report lists both and names the convention
    that keeps the signs.
    """
    report = Report('fourier')
    images = {}
    for inverse in (True, False):
        label = 'inverse' if inverse else 'forward'
        images[label] = fourier_transform_generators(system, inverse)
        back = [fl_automorphism(e, TARGET, SOURCE, inverse=not inverse) for e in images[label]]
        mismatched = [format_element(g) for g, b in zip(system.generators, back) if g != b]
        report.add('round-trip.{0}'.format(label), not mismatched, mismatched or None)

    count = len(system.boxes)
    box_images = images['inverse'][:count]
    report.add('box-images-polynomial',
               all(e.is_derivation_free() for e in box_images),
               [format_element(e) for e in box_images if not e.is_derivation_free()] or None)

    expected_eulers = [-euler_operator(TARGET, system.A.row(k),
                                       -sum(system.A.row(k)) - system.beta[k])
                       for k in range(system.d)]
    wrong = [format_element(e) for e, x in zip(images['inverse'][count:], expected_eulers)
             if e != x]
    report.add('euler-images', not wrong, wrong or None)

    binomials = [WeylElement.monomial(TARGET, positions=negative_part(v))
                 - WeylElement.monomial(TARGET, positions=positive_part(v))
                 for v in system.lattice]
    positive = [label for label in ('inverse', 'forward')
                if images[label][:count] == binomials]
    report.info['box-images'] = dict((label, [format_element(e) for e in images[label][:count]])
                                     for label in ('inverse', 'forward'))
    report.info['sign-preserving'] = positive
    return report


def homogeneity_degree_check(system):
    """
    For each box, whether its two monomials have the same total degree.

    Unbalanced boxes are no failure by themselves; the only check is that a
    homogeneous ``A`` has balanced boxes only.
    """
    report = Report('homogeneity-degrees', homogeneous=system.flags['homogeneous'])
    degrees = [(sum(negative_part(v)), sum(positive_part(v))) for v in system.lattice]
    unbalanced = [{'box': t + 1, 'lattice': v, 'degrees': d}
                  for t, (v, d) in enumerate(zip(system.lattice, degrees)) if d[0] != d[1]]
    report.info['degrees'] = degrees
    report.info['balanced'] = not unbalanced
    report.add('homogeneous-implies-balanced',
               not (system.flags['homogeneous'] and unbalanced), unbalanced or None)
    return report


def _random_torus_point(rng, d):
    point = []
    for _ in range(d):
        numerator = int(rng.randint(1, 10)) * (1 if rng.randint(0, 2) else -1)
        point.append(Fraction(numerator, int(rng.randint(1, 10))))
    return point


def toric_vanishing(system, points, seed):
    """
    Evaluate every box, with ``dl_i`` replaced by ``t^(a_i)``, at random
    rational points ``t`` of the torus; all values must vanish.
    """
    rng = np.random.RandomState(seed)
    log.info('toric vanishing at {0} points, seed {1}'.format(points, seed))
    report = Report('toric-vanishing', points=points, seed=seed)
    failures = []
    for _ in range(points):
        t = _random_torus_point(rng, system.d)
        values = []
        for column in system.A.columns():
            value = Fraction(1)
            for tk, a in zip(t, column):
                value *= tk ** a
            values.append(value)
        for k, box in enumerate(system.boxes):
            if box.evaluate_symbol(SOURCE, values) != 0:
                failures.append({'box': k + 1, 'point': t})
    report.add('boxes-vanish', not failures, failures[:10] or None)
    return report
