"""
Arithmetic in Weyl algebras with named variable groups.

Every generator belongs to a group (``x``, ``t``, ``z``, ``y``, ``l`` for
the lambda coordinates, ``m`` for the mu coordinates, ``xi``) and is either
a position ``g_i`` or a derivation ``dg_i``. Only a position and the
derivation with the same group and index fail to commute:
``dg_i * g_i = g_i * dg_i + 1``.

Elements are kept in normal order: a monomial is a product over conjugate
pairs of ``g_i^a dg_i^b``, all positions written left of all derivations.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction
from math import comb, perm

from hodgefl.linalg.matrices import rational
from hodgefl.util import memoized


log = logging.getLogger(__name__)

GROUPS = ('x', 't', 'z', 'y', 'l', 'm', 'xi')
GROUP_RANK = dict((g, i) for i, g in enumerate(GROUPS))
# groups a Fourier automorphism carries along unchanged
SPECTATOR_GROUPS = ('x',)

POSITION = 'position'
DERIVATION = 'derivation'


class WeylError(Exception):
    """
    Signals an operation that is not defined for the given elements.
    """
    pass


class Variable(object):
    """
    A generator of the Weyl algebra.
    """

    def __init__(self, group, kind=POSITION, index=1):
        if group not in GROUP_RANK:
            raise WeylError('unknown variable group {0!r}'.format(group))
        if kind not in (POSITION, DERIVATION):
            raise WeylError('unknown generator kind {0!r}'.format(kind))
        if not isinstance(index, int) or index < 1:
            raise WeylError('generator index must be a positive integer, got {0!r}'
                            .format(index))
        self.group = group
        self.kind = kind
        self.index = index

    def __eq__(self, other):
        return (isinstance(other, Variable) and
                (self.group, self.kind, self.index) == (other.group, other.kind, other.index))

    def __hash__(self):
        return hash((self.group, self.kind, self.index))

    def __repr__(self):
        return 'Variable({0!r}, {1!r}, {2})'.format(self.group, self.kind, self.index)

    def __str__(self):
        return generator_name(self.group, self.index, self.kind == DERIVATION)


def generator_name(group, index, derivation):
    if group == 'xi':
        name = 'xi'
    else:
        name = '{0}{1}'.format(group, index)
    if not derivation:
        return name
    if group == 'l':
        return 'd{0}'.format(index)
    return 'd' + name


def _pair_key(pair):
    return GROUP_RANK[pair[0]], pair[1]


def _monomial_key(monomial):
    return tuple((GROUP_RANK[g], i, a, b) for g, i, a, b in monomial)


@memoized
def _multiply_monomials(left, right):
    """
    Product of two normal-ordered monomials, pair by pair with the Leibniz
    rule ``d^b x^c = sum_k C(b, k) c!/(c-k)! x^(c-k) d^(b-k)``.

    :returns: ``(monomial, integer coefficient)`` pairs
    :rtype: tuple
    """
    lhs = dict(((g, i), (a, b)) for g, i, a, b in left)
    rhs = dict(((g, i), (a, b)) for g, i, a, b in right)

    partial = {(): 1}
    for pair in sorted(set(lhs) | set(rhs), key=_pair_key):
        a, b = lhs.get(pair, (0, 0))
        c, d = rhs.get(pair, (0, 0))
        options = []
        for k in range(min(b, c) + 1):
            positions, derivations = a + c - k, b + d - k
            factor = ((pair[0], pair[1], positions, derivations),) \
                if positions or derivations else ()
            options.append((factor, comb(b, k) * perm(c, k)))
        expanded = {}
        for monomial, coefficient in partial.items():
            for factor, weight in options:
                key = monomial + factor
                expanded[key] = expanded.get(key, 0) + coefficient * weight
        partial = expanded
    return tuple(partial.items())


class WeylElement(object):
    """
    A normal-ordered element of a Weyl algebra with rational coefficients.

    ``terms`` maps monomials to nonzero coefficients. A monomial is a sorted
    tuple of ``(group, index, position_exponent, derivation_exponent)``.
    """

    def __init__(self, terms=None):
        cleaned = {}
        for monomial, coefficient in (terms or {}).items():
            coefficient = rational(coefficient)
            monomial = tuple(sorted((entry for entry in monomial if entry[2] or entry[3]),
                                    key=lambda e: _pair_key(e[:2])))
            total = cleaned.get(monomial, Fraction(0)) + coefficient
            if total:
                cleaned[monomial] = total
            else:
                cleaned.pop(monomial, None)
        self._terms = cleaned

    @classmethod
    def constant(cls, value):
        return cls({(): value})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def generator(cls, group, index=1, derivation=False):
        Variable(group, DERIVATION if derivation else POSITION, index)
        entry = (group, index, 0, 1) if derivation else (group, index, 1, 0)
        return cls({(entry,): 1})

    @classmethod
    def from_variable(cls, variable):
        return cls.generator(variable.group, variable.index,
                             variable.kind == DERIVATION)

    @classmethod
    def monomial(cls, group, positions=(), derivations=(), coefficient=1):
        """
        ``c * prod g_i^positions[i-1] * prod dg_i^derivations[i-1]``.
        """
        count = max(len(positions), len(derivations))
        positions = tuple(positions) + (0,) * (count - len(positions))
        derivations = tuple(derivations) + (0,) * (count - len(derivations))
        entries = tuple((group, i + 1, a, b)
                        for i, (a, b) in enumerate(zip(positions, derivations)))
        return cls({entries: coefficient})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def groups(self):
        return set(g for monomial in self._terms for g, _, _, _ in monomial)

    def is_derivation_free(self):
        return all(b == 0 for monomial in self._terms for _, _, _, b in monomial)

    def is_position_free(self):
        return all(a == 0 for monomial in self._terms for _, _, a, _ in monomial)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = WeylElement.constant(other)
        return isinstance(other, WeylElement) and self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return WeylElement(terms)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(dict((m, -c) for m, c in self._terms.items()))

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return WeylElement(dict((m, c * other) for m, c in self._terms.items()))
        if not isinstance(other, WeylElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        return power(self, k)

    def __repr__(self):
        return 'WeylElement({0!r})'.format(str(self))

    def __str__(self):
        if not self._terms:
            return '0'
        ordered = sorted(self._terms.items(),
                         key=lambda item: (-sum(a + b for _, _, a, b in item[0]),
                                           _monomial_key(item[0])))
        text = ''
        for monomial, coefficient in ordered:
            term = _format_term(monomial, coefficient)
            if not text:
                text = term
            elif term.startswith('-'):
                text += ' - ' + term[1:]
            else:
                text += ' + ' + term
        return text

    def evaluate_symbol(self, group, values):
        """
        Substitute commuting rationals for the derivations of ``group``.

        Only defined for elements built from derivations of ``group``; these
        commute with each other, so the substitution is well defined.

        :param values: the value of ``dg_i`` at position ``i - 1``
        :rtype: :class:`~fractions.Fraction`
        """
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            value = coefficient
            for g, i, a, b in monomial:
                if g != group or a:
                    raise WeylError('symbol evaluation needs an element in the '
                                    'derivations of group {0!r}'.format(group))
                value *= rational(values[i - 1]) ** b
            total += value
        return total


def _coerce(value):
    if isinstance(value, WeylElement):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return WeylElement.constant(value)
    return None


def _format_power(name, exponent):
    return name if exponent == 1 else '{0}^{1}'.format(name, exponent)


def _format_term(monomial, coefficient):
    factors = [_format_power(generator_name(g, i, False), a)
               for g, i, a, _ in monomial if a]
    factors += [_format_power(generator_name(g, i, True), b)
                for g, i, _, b in monomial if b]
    if not factors:
        return str(coefficient)
    body = '*'.join(factors)
    if coefficient == 1:
        return body
    if coefficient == -1:
        return '-' + body
    return '{0}*{1}'.format(coefficient, body)


def multiply(a, b):
    """
    The product ``a * b`` in normal order.
    """
    terms = {}
    for left, c in a._terms.items():
        for right, d in b._terms.items():
            for monomial, weight in _multiply_monomials(left, right):
                terms[monomial] = terms.get(monomial, Fraction(0)) + c * d * weight
    return WeylElement(terms)


def power(e, k):
    if not isinstance(k, int) or k < 0:
        raise WeylError('only nonnegative integer powers are defined, got {0!r}'.format(k))
    result = WeylElement.constant(1)
    for _ in range(k):
        result = multiply(result, e)
    return result


def commutator(a, b):
    """
    ``[a, b] = ab - ba``.
    """
    return multiply(a, b) - multiply(b, a)


def fl_automorphism(e, src, dst, inverse=False):
    """
    Fourier automorphism carrying the generators of group ``src`` to those of
    group ``dst``.

    The forward map sends ``g_i`` to ``dh_i`` and ``dg_i`` to ``-h_i`` (``g``
    = ``src``, ``h`` = ``dst``); the inverse map sends ``g_i`` to ``-dh_i``
    and ``dg_i`` to ``h_i``. Applying the inverse map from ``dst`` back to
    ``src`` undoes the forward map. Besides ``src`` the element may only
    involve the spectator groups in :data:`SPECTATOR_GROUPS`, which are left
    alone.

    :raises: :class:`WeylError` if ``src == dst``, if either is unknown or a
             spectator, or if ``e`` involves any other group
    """
    if src == dst:
        raise WeylError('Fourier automorphism needs two different groups')
    for group in (src, dst):
        if group not in GROUP_RANK:
            raise WeylError('unknown variable group {0!r}'.format(group))
        if group in SPECTATOR_GROUPS:
            raise WeylError('group {0!r} is not transformed'.format(group))
    unsupported = sorted(e.groups() - set(SPECTATOR_GROUPS) - set([src]),
                         key=GROUP_RANK.get)
    if dst in unsupported:
        raise WeylError('element already involves the target group {0!r}'.format(dst))
    if unsupported:
        raise WeylError('cannot transform {0!r} to {1!r} with groups {2} present'
                        .format(src, dst, ', '.join(repr(g) for g in unsupported)))

    sign = -1 if inverse else 1

    def images(group, index):
        if group != src:
            return (WeylElement.generator(group, index),
                    WeylElement.generator(group, index, derivation=True))
        position = WeylElement.generator(dst, index, derivation=True) * sign
        derivation = WeylElement.generator(dst, index) * (-sign)
        return position, derivation

    result = WeylElement.zero()
    for monomial, coefficient in e._terms.items():
        term = WeylElement.constant(coefficient)
        derivations = WeylElement.constant(1)
        for g, i, a, b in monomial:
            position, derivation = images(g, i)
            term = term * power(position, a)
            derivations = derivations * power(derivation, b)
        result = result + term * derivations
    return result


def v_degree(e, group):
    """
    The range of ``(position degree - derivation degree)`` over the
    monomials of ``e``, counting generators of ``group`` only.

    :returns: ``(min_k, max_k)``; ``e`` lies in ``V^min_k`` but not in
              ``V^(min_k + 1)``
    :raises: :class:`WeylError` for the zero element
    """
    if e.is_zero():
        raise WeylError('undefined degree of the zero element')
    degrees = [sum(a - b for g, _, a, b in monomial if g == group)
               for monomial in e._terms]
    return min(degrees), max(degrees)


def theta(group, r):
    """
    The Euler operator ``sum_i g_i dg_i`` on ``r`` coordinates.
    """
    return sum((WeylElement.generator(group, i) * WeylElement.generator(group, i, True)
                for i in range(1, r + 1)), WeylElement.zero())


def s_operator(group, r):
    """
    ``s = -sum_i dg_i g_i``.
    """
    return -sum((WeylElement.generator(group, i, True) * WeylElement.generator(group, i)
                 for i in range(1, r + 1)), WeylElement.zero())


def euler_operator(group, weights, constant=0):
    """
    The weighted Euler operator ``sum_i w_i g_i dg_i - constant``.
    """
    result = WeylElement.constant(-rational(constant))
    for i, w in enumerate(weights, 1):
        if w:
            result = result + (WeylElement.generator(group, i)
                               * WeylElement.generator(group, i, True)) * rational(w)
    return result
