"""
The graph embedding module and the microlocal module of ``O_X``.

For polynomials ``f_1, ..., f_r`` on ``X = A^n`` two modules are realized
explicitly:

- the graph embedding ``Gamma(O) = sum_alpha O dt^alpha delta_f``, with
  ``O = Q[x_1, ..., x_n]``;
- the microlocal module ``M_g = O[y_1, ..., y_r, dxi, dxi^-1] delta_g`` for
  ``g = sum y_i f_i``.

Elements are finite sums of monomials with polynomial coefficients, stored
as :class:`sympy.Poly` over ``QQ``. The map ``phi`` sends
``m y^alpha dxi^j delta_g`` to ``(-1)^(|alpha|+j) m dt^alpha delta_f``.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import itertools
import logging
import re
from fractions import Fraction

import numpy as np
from sympy import Poly, QQ, Rational, symbols
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor
from sympy.polys.polyerrors import PolynomialError

from hodgefl.report import Report


log = logging.getLogger(__name__)

DEFAULT_N = 2
DEFAULT_R = 2
DEFAULT_F = ('x1^2 - x2^3', 'x1*x2')

MAX_EXPONENT = 3
MAX_COEFFICIENT = 5
RELATION_SAMPLES = 20

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class MicroError(Exception):
    """
    Signals invalid contexts, indices or elements.
    """
    pass


class ElementParseError(MicroError):
    """
    Signals malformed element or polynomial text.
    """
    pass


class MicroContext(object):
    """
    ``n``, ``r`` and the polynomials ``f_1, ..., f_r`` in ``x_1, ..., x_n``.
    """

    def __init__(self, n, r, f):
        """
        :param n: dimension of ``X``
        :param r: number of functions
        :param f: the functions as text (``"x1^2 - x2^3"``) or sympy
                  expressions
        :raises: :class:`MicroError` if the data does not fit together
        """
        if n < 1 or r < 1:
            raise MicroError('need n >= 1 and r >= 1, got n = {0}, r = {1}'.format(n, r))
        if len(f) != r:
            raise MicroError('{0} functions given for r = {1}'.format(len(f), r))
        self.n = n
        self.r = r
        self.x = symbols('x1:{0}'.format(n + 1))
        self.f = tuple(self.poly(p) for p in f)
        if any(p.is_zero for p in self.f):
            raise MicroError('the functions must be nonzero')
        self.df = tuple(tuple(p.diff(x) for x in self.x) for p in self.f)

    @classmethod
    def default(cls):
        return cls(DEFAULT_N, DEFAULT_R, DEFAULT_F)

    def poly(self, value):
        """
        ``value`` as a polynomial of this context.

        :raises: :class:`ElementParseError` for text that is not a
                 polynomial in ``x_1, ..., x_n``
        """
        if isinstance(value, Poly):
            return Poly(value.as_expr(), *self.x, domain=QQ)
        if isinstance(value, Fraction):
            value = Rational(value.numerator, value.denominator)
        if isinstance(value, str):
            names = dict((str(x), x) for x in self.x)
            try:
                value = parse_expr(value, local_dict=names, transformations=_TRANSFORMATIONS)
            except (SympifyError, SyntaxError, TypeError) as e:
                raise ElementParseError('cannot read polynomial {0!r}: {1}'.format(value, e))
            unknown = set(map(str, getattr(value, 'free_symbols', ()))) - set(names)
            if unknown:
                raise ElementParseError('unknown variables {0} in polynomial'
                                        .format(sorted(unknown)))
        try:
            return Poly(value, *self.x, domain=QQ)
        except PolynomialError as e:
            raise ElementParseError('not a polynomial: {0}'.format(e))

    @property
    def one(self):
        return self.poly(1)

    def variable(self, i):
        self.check_index(i, self.n, 'x')
        return self.poly(self.x[i - 1])

    def check_index(self, i, bound, name):
        if not 1 <= i <= bound:
            raise MicroError('index of {0} must lie in 1..{1}, got {2}'.format(name, bound, i))

    def to_json(self):
        return {'n': self.n, 'r': self.r, 'f': [format_poly(p) for p in self.f]}


def format_poly(p):
    return str(p.as_expr()).replace('**', '^')


class _Element(object):
    """
    Finite sum of monomials with polynomial coefficients; ``coeffs`` maps a
    key to a nonzero :class:`sympy.Poly`.
    """

    delta = None

    def __init__(self, ctx, coeffs=None):
        self.ctx = ctx
        cleaned = {}
        for key, value in (coeffs or {}).items():
            value = ctx.poly(value) if not isinstance(value, Poly) else value
            total = cleaned[key] + value if key in cleaned else value
            if total.is_zero:
                cleaned.pop(key, None)
            else:
                cleaned[key] = total
        self.coeffs = cleaned

    def is_zero(self):
        return not self.coeffs

    def _combine(self, other, sign):
        if type(other) is not type(self):
            raise MicroError('cannot combine {0} with {1}'
                             .format(type(self).__name__, type(other).__name__))
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            value = value if sign == 1 else -value
            coeffs[key] = coeffs[key] + value if key in coeffs else value
        return type(self)(self.ctx, coeffs)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)(self.ctx, dict((k, -v) for k, v in self.coeffs.items()))

    def scale(self, factor):
        """
        Multiply every coefficient by the polynomial or rational ``factor``.
        """
        factor = self.ctx.poly(factor)
        return type(self)(self.ctx, dict((k, v * factor) for k, v in self.coeffs.items()))

    def __eq__(self, other):
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted((k, format_poly(v)) for k, v in self.coeffs.items())))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return '{0}({1!r})'.format(type(self).__name__, str(self))


class GraphElement(_Element):
    """
    An element ``sum m_alpha dt^alpha delta_f`` of the graph embedding
    module, keyed by ``alpha``.
    """

    delta = 'delta_f'

    @classmethod
    def generator(cls, ctx, alpha=None, coefficient=1):
        alpha = tuple(alpha) if alpha is not None else (0,) * ctx.r
        return cls(ctx, {alpha: ctx.poly(coefficient)})


class MicroElement(_Element):
    """
    An element ``sum m_(alpha, j) y^alpha dxi^j delta_g`` of the microlocal
    module, keyed by ``(alpha, j)``.
    """

    delta = 'delta_g'

    @classmethod
    def generator(cls, ctx, alpha=None, j=0, coefficient=1):
        alpha = tuple(alpha) if alpha is not None else (0,) * ctx.r
        return cls(ctx, {(alpha, j): ctx.poly(coefficient)})


def _shift(alpha, i, step):
    return alpha[:i] + (alpha[i] + step,) + alpha[i + 1:]


_OPERATOR = re.compile(r'^(?P<name>dx|dt|dy|t|y|x)(?P<index>\d+)$')


def _parse_operator(op):
    match = _OPERATOR.match(op)
    if match is None:
        return op, None
    return match.group('name'), int(match.group('index'))


def graph_act(ctx, op, e):
    """
    Apply a generator to an element of the graph embedding module::

        dx_i (m dt^a) = (d_i m) dt^a - sum_j (d_i f_j) m dt^(a+e_j)
        t_i  (m dt^a) = f_i m dt^a - a_i m dt^(a-e_i)
        dt_i (m dt^a) = m dt^(a+e_i)

    :param op: ``"dx<i>"``, ``"t<i>"``, ``"dt<i>"``, ``"x<i>"`` or a
               polynomial acting by multiplication
    :type e: :class:`GraphElement`
    """
    if isinstance(op, Poly):
        return e.scale(op)
    name, i = _parse_operator(op)
    terms = []
    if name == 'x':
        return e.scale(ctx.variable(i))
    if name == 'dx':
        ctx.check_index(i, ctx.n, 'dx')
        x = ctx.x[i - 1]
        for alpha, m in e.coeffs.items():
            terms.append((alpha, m.diff(x)))
            for j in range(ctx.r):
                terms.append((_shift(alpha, j, 1), -ctx.df[j][i - 1] * m))
    elif name == 't':
        ctx.check_index(i, ctx.r, 't')
        for alpha, m in e.coeffs.items():
            terms.append((alpha, ctx.f[i - 1] * m))
            if alpha[i - 1]:
                terms.append((_shift(alpha, i - 1, -1), -alpha[i - 1] * m))
    elif name == 'dt':
        ctx.check_index(i, ctx.r, 'dt')
        for alpha, m in e.coeffs.items():
            terms.append((_shift(alpha, i - 1, 1), m))
    else:
        raise MicroError('unknown operator {0!r} on the graph module'.format(op))
    return _collect(GraphElement, ctx, terms)


def micro_act(ctx, op, e):
    """
    Apply a generator to an element of the microlocal module::

        dx_i (m y^a dxi^j) = (d_i m) y^a dxi^j - sum_l (d_i f_l) m y^(a+e_l) dxi^(j+1)
        y_i  (m y^a dxi^j) = m y^(a+e_i) dxi^j
        dy_i (m y^a dxi^j) = a_i m y^(a-e_i) dxi^j - f_i m y^a dxi^(j+1)
        xi   (m y^a dxi^j) = sum_l f_l m y^(a+e_l) dxi^j - j m y^a dxi^(j-1)

    and ``dxi``, ``dxi^-1`` shift ``j`` by one.

    :param op: ``"dx<i>"``, ``"x<i>"``, ``"y<i>"``, ``"dy<i>"``, ``"xi"``,
               ``"dxi"``, ``"dxi^-1"`` or a polynomial
    :type e: :class:`MicroElement`
    """
    if isinstance(op, Poly):
        return e.scale(op)
    name, i = _parse_operator(op)
    terms = []
    if name == 'x':
        return e.scale(ctx.variable(i))
    if name == 'dx':
        ctx.check_index(i, ctx.n, 'dx')
        x = ctx.x[i - 1]
        for (alpha, j), m in e.coeffs.items():
            terms.append(((alpha, j), m.diff(x)))
            for l in range(ctx.r):
                terms.append(((_shift(alpha, l, 1), j + 1), -ctx.df[l][i - 1] * m))
    elif name == 'y':
        ctx.check_index(i, ctx.r, 'y')
        for (alpha, j), m in e.coeffs.items():
            terms.append(((_shift(alpha, i - 1, 1), j), m))
    elif name == 'dy':
        ctx.check_index(i, ctx.r, 'dy')
        for (alpha, j), m in e.coeffs.items():
            if alpha[i - 1]:
                terms.append(((_shift(alpha, i - 1, -1), j), alpha[i - 1] * m))
            terms.append(((alpha, j + 1), -ctx.f[i - 1] * m))
    elif name == 'xi':
        for (alpha, j), m in e.coeffs.items():
            for l in range(ctx.r):
                terms.append(((_shift(alpha, l, 1), j), ctx.f[l] * m))
            if j:
                terms.append(((alpha, j - 1), -j * m))
    elif name in ('dxi', 'dxi^-1'):
        step = 1 if name == 'dxi' else -1
        for (alpha, j), m in e.coeffs.items():
            terms.append(((alpha, j + step), m))
    else:
        raise MicroError('unknown operator {0!r} on the microlocal module'.format(op))
    return _collect(MicroElement, ctx, terms)


def _collect(cls, ctx, terms):
    coeffs = {}
    for key, value in terms:
        coeffs[key] = coeffs[key] + value if key in coeffs else value
    return cls(ctx, coeffs)


def phi(ctx, e):
    """
    ``m y^alpha dxi^j delta_g  ->  (-1)^(|alpha|+j) m dt^alpha delta_f``
    """
    terms = []
    for (alpha, j), m in e.coeffs.items():
        terms.append((alpha, m if (sum(alpha) + j) % 2 == 0 else -m))
    return _collect(GraphElement, ctx, terms)


def theta_y(ctx, e):
    """
    ``sum y_i dy_i``
    """
    result = MicroElement(ctx)
    for i in range(1, ctx.r + 1):
        result = result + micro_act(ctx, 'y{0}'.format(i), micro_act(ctx, 'dy{0}'.format(i), e))
    return result


def s_micro(ctx, e):
    """
    ``s = -dxi xi``
    """
    return -micro_act(ctx, 'dxi', micro_act(ctx, 'xi', e))


def s_graph(ctx, e):
    """
    ``s = -sum dt_i t_i``
    """
    result = GraphElement(ctx)
    for i in range(1, ctx.r + 1):
        result = result - graph_act(ctx, 'dt{0}'.format(i), graph_act(ctx, 't{0}'.format(i), e))
    return result


def eigen_decompose(ctx, e):
    """
    Split ``e`` by ``l = |alpha| - j``, the eigenvalue of ``theta_y - s``.

    :returns: dict ``l`` to :class:`MicroElement`
    """
    parts = {}
    for (alpha, j), m in e.coeffs.items():
        parts.setdefault(sum(alpha) - j, {})[(alpha, j)] = m
    return dict((l, MicroElement(ctx, coeffs)) for l, coeffs in parts.items())


def f_level(ctx, e):
    """
    The smallest ``p`` with ``e`` in ``F_p``, for ``O_X`` with its Hodge
    filtration jumping at 0: ``max |alpha| + r`` on the graph module,
    ``max j + r + 1`` on the microlocal module.

    :raises: :class:`MicroError` for the zero element
    """
    if e.is_zero():
        raise MicroError('the zero element has no Hodge level')
    if isinstance(e, GraphElement):
        return max(sum(alpha) for alpha in e.coeffs) + ctx.r
    return max(j for _, j in e.coeffs) + ctx.r + 1


def w_level(ctx, e):
    """
    The weight of a nonzero element: ``n`` on the graph module and
    ``n - r`` on the microlocal module.
    """
    if e.is_zero():
        raise MicroError('the zero element has no weight')
    return ctx.n if isinstance(e, GraphElement) else ctx.n - ctx.r


def random_poly(ctx, rng):
    terms = int(rng.randint(1, 4))
    value = ctx.poly(0)
    for _ in range(terms):
        c = int(rng.randint(-MAX_COEFFICIENT, MAX_COEFFICIENT + 1)) or 1
        exponents = [int(rng.randint(0, MAX_EXPONENT + 1)) for _ in range(ctx.n)]
        monomial = ctx.poly(c)
        for x, k in zip(ctx.x, exponents):
            monomial = monomial * ctx.poly(x) ** k
        value = value + monomial
    return value if not value.is_zero else ctx.one


def random_element(ctx, rng):
    """
    A random nonzero :class:`MicroElement` with one to three monomials,
    exponents up to 3 and ``j`` in ``-3..3``.

    :param rng: a :class:`numpy.random.RandomState`
    """
    while True:
        terms = []
        for _ in range(int(rng.randint(1, 4))):
            alpha = tuple(int(rng.randint(0, MAX_EXPONENT + 1)) for _ in range(ctx.r))
            j = int(rng.randint(-MAX_EXPONENT, MAX_EXPONENT + 1))
            terms.append(((alpha, j), random_poly(ctx, rng)))
        e = _collect(MicroElement, ctx, terms)
        if not e.is_zero():
            return e


def _generators(ctx, micro):
    names = ['x{0}'.format(i) for i in range(1, ctx.n + 1)]
    names += ['dx{0}'.format(i) for i in range(1, ctx.n + 1)]
    if micro:
        names += ['y{0}'.format(i) for i in range(1, ctx.r + 1)]
        names += ['dy{0}'.format(i) for i in range(1, ctx.r + 1)]
        names += ['xi', 'dxi']
    else:
        names += ['t{0}'.format(i) for i in range(1, ctx.r + 1)]
        names += ['dt{0}'.format(i) for i in range(1, ctx.r + 1)]
    return names


def _partner(name):
    if name.startswith('d'):
        return name[1:]
    return None


def check_relations(ctx, elements, micro=True):
    """
    Check the Weyl relations ``[d g, g] = 1`` and ``[a, b] = 0`` for all
    other pairs of generators on the given elements.

    :returns: list of witnesses of failed relations
    """
    act = micro_act if micro else graph_act
    names = _generators(ctx, micro)
    failures = []
    for e in elements:
        for a, b in itertools.combinations(names, 2):
            bracket = act(ctx, a, act(ctx, b, e)) - act(ctx, b, act(ctx, a, e))
            if _partner(a) == b:
                expected = e
            elif _partner(b) == a:
                expected = -e
            else:
                expected = type(e)(ctx)
            if bracket != expected:
                failures.append({'relation': '[{0}, {1}]'.format(a, b), 'element': str(e)})
    return failures


def verify_phi_identities(ctx, sample_count, seed):
    """
    Check on random elements:

    1. ``phi y_i = -dt_i phi``
    2. ``phi dy_i = t_i phi``
    3. ``phi dxi^k = (-1)^k phi`` for ``k = 1, -1, 2``
    4. ``phi theta_y = s phi``
    5. ``phi s = (s - l) phi`` on the ``l``-component, which is killed by
       ``theta_y - s - l``
    6. ``phi dx_i = dx_i phi`` and ``phi x_i = x_i phi``

    together with the module relations of both actions on the first few
    samples.
    """
    if sample_count < 1:
        raise MicroError('need at least one sample')
    log.info('phi identities: {0} samples, seed {1}'.format(sample_count, seed))
    rng = np.random.RandomState(seed)
    samples = [random_element(ctx, rng) for _ in range(sample_count)]

    failures = dict((name, []) for name in ('y', 'dy', 'dxi', 'theta', 'eigen', 'dx'))
    for e in samples:
        image = phi(ctx, e)
        for i in range(1, ctx.r + 1):
            if phi(ctx, micro_act(ctx, 'y{0}'.format(i), e)) != \
                    -graph_act(ctx, 'dt{0}'.format(i), image):
                failures['y'].append({'i': i, 'element': str(e)})
            if phi(ctx, micro_act(ctx, 'dy{0}'.format(i), e)) != \
                    graph_act(ctx, 't{0}'.format(i), image):
                failures['dy'].append({'i': i, 'element': str(e)})
        for k in (1, -1, 2):
            shifted = e
            for _ in range(abs(k)):
                shifted = micro_act(ctx, 'dxi' if k > 0 else 'dxi^-1', shifted)
            if phi(ctx, shifted) != (image if k % 2 == 0 else -image):
                failures['dxi'].append({'k': k, 'element': str(e)})
        if phi(ctx, theta_y(ctx, e)) != s_graph(ctx, image):
            failures['theta'].append({'element': str(e)})
        for l, part in sorted(eigen_decompose(ctx, e).items()):
            killed = theta_y(ctx, part) - s_micro(ctx, part) - part.scale(l)
            lhs = phi(ctx, s_micro(ctx, part))
            rhs = s_graph(ctx, phi(ctx, part)) - phi(ctx, part).scale(l)
            if not killed.is_zero() or lhs != rhs:
                failures['eigen'].append({'l': l, 'element': str(part)})
        for i in range(1, ctx.n + 1):
            for op in ('dx{0}'.format(i), 'x{0}'.format(i)):
                if phi(ctx, micro_act(ctx, op, e)) != graph_act(ctx, op, image):
                    failures['dx'].append({'op': op, 'element': str(e)})

    report = Report('phi-identities', context=ctx.to_json(), samples=sample_count, seed=seed)
    labels = [('y', 'phi.y = -dt.phi'), ('dy', 'phi.dy = t.phi'),
              ('dxi', 'phi.dxi^k = (-1)^k phi'), ('theta', 'phi.theta_y = s.phi'),
              ('eigen', 'phi.s = (s - l).phi'), ('dx', 'D_X-linearity')]
    for key, label in labels:
        report.add(label, not failures[key], failures[key][:10] or None)

    checked = samples[:RELATION_SAMPLES]
    micro_failures = check_relations(ctx, checked, micro=True)
    graph_failures = check_relations(ctx, [phi(ctx, e) for e in checked], micro=False)
    report.add('relations.micro', not micro_failures, micro_failures[:10] or None)
    report.add('relations.graph', not graph_failures, graph_failures[:10] or None)
    return report


def _monomials(ctx, degree_bound):
    for alpha in itertools.product(range(degree_bound + 1), repeat=ctx.r):
        rest = degree_bound - sum(alpha)
        if rest < 0:
            continue
        for j in range(-rest, rest + 1):
            yield alpha, j


def verify_filtration_shift(ctx, degree_bound):
    """
    For every monomial ``y^alpha dxi^j delta_g`` with ``|alpha| + |j|`` at
    most ``degree_bound`` and ``l = |alpha| - j``, check that ``phi`` moves
    the Hodge level by ``l - 1`` and the weight by ``r``. Also check that
    ``phi`` is a bijection from the monomials of each ``E^(l)`` onto the
    monomials ``dt^alpha delta_f``.
    """
    if degree_bound < 1:
        raise MicroError('degree bound must be positive')
    log.info('filtration shifts up to degree {0}'.format(degree_bound))
    hodge, weight = [], []
    images = {}
    count = 0
    for alpha, j in _monomials(ctx, degree_bound):
        e = MicroElement.generator(ctx, alpha, j)
        l = sum(alpha) - j
        image = phi(ctx, e)
        count += 1
        if f_level(ctx, image) != f_level(ctx, e) + l - 1:
            hodge.append({'alpha': alpha, 'j': j, 'l': l})
        if w_level(ctx, image) != w_level(ctx, e) + ctx.r:
            weight.append({'alpha': alpha, 'j': j, 'l': l})
        images.setdefault(l, []).append(tuple(image.coeffs))

    collisions = [l for l, keys in images.items() if len(set(keys)) != len(keys)]
    report = Report('filtration-shift', context=ctx.to_json(), bound=degree_bound,
                    monomials=count)
    report.add('hodge-shift', not hodge, hodge[:10] or None)
    report.add('weight-shift', not weight, weight[:10] or None)
    report.add('bijective-on-eigenspaces', not collisions, sorted(collisions) or None)
    return report


_GENERATOR = re.compile(r'^(?P<name>y|dt)(?P<index>\d+)(?:\^(?P<exp>\d+))?$')
_DXI = re.compile(r'^dxi(?:\^(?P<exp>-?\d+))?$')


def _split(text, separators):
    """
    Split at top-level separators, keeping the separator with the part that
    follows it. Signs directly after ``^`` belong to the exponent.
    """
    parts, depth, current = [], 0, ''
    for k, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ElementParseError('unbalanced parentheses in {0!r}'.format(text))
        if depth == 0 and ch in separators and current.strip() \
                and not current.rstrip().endswith('^'):
            parts.append(current)
            current = ch if ch in '+-' else ''
            continue
        current += ch
    if depth:
        raise ElementParseError('unbalanced parentheses in {0!r}'.format(text))
    parts.append(current)
    return [p.strip() for p in parts if p.strip()]


def parse_element(ctx, text):
    """
    Read an element such as ``"(x1^2 - 1)*y1*dxi^-1*delta_g"`` or
    ``"x1*dt1^2*delta_f - delta_f"``.

    Every term ends with ``delta_g`` (microlocal) or ``delta_f`` (graph);
    the other factors are ``y<i>``, ``dt<i>``, ``dxi`` with optional
    exponents and polynomial coefficients.

    :raises: :class:`ElementParseError`
    """
    kind = None
    terms = []
    for term in _split(text.strip(), '+-'):
        sign = 1
        if term[0] in '+-':
            sign = -1 if term[0] == '-' else 1
            term = term[1:].strip()
        factors = _split(term, '*')
        if not factors or factors[-1] not in ('delta_g', 'delta_f'):
            raise ElementParseError('term {0!r} does not end with delta_g or delta_f'.format(term))
        cls = MicroElement if factors[-1] == 'delta_g' else GraphElement
        if kind is not None and cls is not kind:
            raise ElementParseError('element mixes delta_g and delta_f terms')
        kind = cls
        alpha, j = [0] * ctx.r, 0
        coefficient = ctx.poly(sign)
        for factor in factors[:-1]:
            generator, dxi = _GENERATOR.match(factor), _DXI.match(factor)
            if generator is not None:
                name, i = generator.group('name'), int(generator.group('index'))
                if (name == 'y') != (cls is MicroElement):
                    raise ElementParseError('{0!r} does not act on {1}'.format(factor, cls.delta))
                ctx.check_index(i, ctx.r, name)
                alpha[i - 1] += int(generator.group('exp') or 1)
            elif dxi is not None:
                if cls is not MicroElement:
                    raise ElementParseError('dxi does not occur in graph elements')
                j += int(dxi.group('exp') or 1)
            else:
                coefficient = coefficient * ctx.poly(factor)
        key = tuple(alpha) if cls is GraphElement else (tuple(alpha), j)
        terms.append((key, coefficient))
    if kind is None:
        raise ElementParseError('empty element')
    return _collect(kind, ctx, terms)


def _format_factor(name, exponent):
    return name if exponent == 1 else '{0}^{1}'.format(name, exponent)


def format_element(e):
    """
    Canonical text of an element; :func:`parse_element` reads it back.
    """
    if e.is_zero():
        return '0'
    text = ''
    for key in sorted(e.coeffs):
        m = e.coeffs[key]
        alpha, j = (key, 0) if isinstance(e, GraphElement) else key
        gen = 'dt' if isinstance(e, GraphElement) else 'y'
        factors = [_format_factor('{0}{1}'.format(gen, i + 1), a)
                   for i, a in enumerate(alpha) if a]
        if j:
            factors.append(_format_factor('dxi', j))
        body = '*'.join(factors + [e.delta])
        negative = False
        if m.is_ground:
            c = m.LC()
            negative = c < 0
            c = abs(c)
            term = body if c == 1 else '{0}*{1}'.format(c, body)
        else:
            term = '({0})*{1}'.format(format_poly(m), body)
        if not text:
            text = ('-' if negative else '') + term
        else:
            text += (' - ' if negative else ' + ') + term
    return text
