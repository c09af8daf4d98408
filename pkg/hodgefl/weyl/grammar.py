"""
Text syntax for Weyl algebra elements.

Grammar (whitespace is ignored)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := power ('*' power)*
    power  := atom ['^' INTEGER]
    atom   := RATIONAL | NAME | '(' expr ')'

``RATIONAL`` is ``p`` or ``p/q``. A ``NAME`` is a position ``x1``, ``t2``,
``z1``, ``y1``, ``l1``, ``m1``, ``xi`` or a derivation ``dx1``, ``dt2``,
``dz1``, ``dy1``, ``dl1``, ``dm1``, ``dxi``; ``d1`` is short for ``dl1``.
Products are taken in the written order, so ``dx1*x1`` reads as
``x1*dx1 + 1``.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import re
from fractions import Fraction

from hodgefl.weyl.algebra import WeylElement, power


class ParseError(Exception):
    """
    Signals malformed operator text.
    """
    pass


_TOKEN = re.compile(r'\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<name>[a-z]+\d*)|(?P<op>[-+*^()]))')
_NAME = re.compile(r'^(?P<d>d?)(?P<group>x|t|z|y|l|m)?(?P<index>\d+)$')


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError('unexpected character {0!r} at position {1}'
                             .format(text[pos:].strip()[:1], pos))
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


def parse_generator(name):
    """
    The Weyl element for a generator name.

    :raises: :class:`ParseError` for unknown names
    """
    if name in ('xi', 'xi1'):
        return WeylElement.generator('xi')
    if name in ('dxi', 'dxi1'):
        return WeylElement.generator('xi', derivation=True)
    match = _NAME.match(name)
    if match is None:
        raise ParseError('unknown generator {0!r}'.format(name))
    derivation = bool(match.group('d'))
    group = match.group('group')
    if group is None:
        if not derivation:
            raise ParseError('unknown generator {0!r}'.format(name))
        group = 'l'
    index = int(match.group('index'))
    if index < 1:
        raise ParseError('generator indices start at 1: {0!r}'.format(name))
    return WeylElement.generator(group, index, derivation)


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None):
        token = self.peek()
        if token[0] is None or (value is not None and token[1] != value):
            raise ParseError('expected {0} at position {1} in {2!r}'
                             .format(repr(value) if value else 'more input', token[2], self.text))
        self.pos += 1
        return token

    def parse(self):
        if not self.tokens:
            raise ParseError('empty expression')
        result = self.expr()
        if self.peek()[0] is not None:
            raise ParseError('unexpected {0!r} at position {1} in {2!r}'
                             .format(self.peek()[1], self.peek()[2], self.text))
        return result

    def expr(self):
        sign = 1
        if self.peek()[1] in ('+', '-'):
            sign = -1 if self.take()[1] == '-' else 1
        result = self.term() * sign
        while self.peek()[1] in ('+', '-'):
            op = self.take()[1]
            value = self.term()
            result = result + value if op == '+' else result - value
        return result

    def term(self):
        result = self.power()
        while self.peek()[1] == '*':
            self.take('*')
            result = result * self.power()
        return result

    def power(self):
        base = self.atom()
        if self.peek()[1] == '^':
            self.take('^')
            kind, value, position = self.take()
            if kind != 'number' or '/' in value:
                raise ParseError('exponent must be a nonnegative integer at position {0}'
                                 .format(position))
            return power(base, int(value))
        return base

    def atom(self):
        kind, value, position = self.peek()
        if kind == 'number':
            self.take()
            return WeylElement.constant(Fraction(value))
        if kind == 'name':
            self.take()
            return parse_generator(value)
        if value == '(':
            self.take('(')
            result = self.expr()
            self.take(')')
            return result
        raise ParseError('unexpected {0!r} at position {1} in {2!r}'
                         .format(value, position, self.text))


def parse_element(text):
    """
    Parse operator text into a :class:`~hodgefl.weyl.algebra.WeylElement`.

    :raises: :class:`ParseError` on malformed text
    """
    return _Parser(text).parse()


def format_element(e):
    """
    Canonical text of ``e``; :func:`parse_element` reads it back.
    """
    return str(e)
