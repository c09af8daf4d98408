"""
This module checks the shape of JSON documents before they are decoded into
modules, filtrations or rmf instances.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from itertools import chain


log = logging.getLogger(__name__)


class TypeCheckError(Exception):
    """
    Signals that a field is missing or has the wrong type.
    """
    pass


def _is_instance(value, type_):
    # JSON booleans are ints to Python; only accept them where asked for
    types = type_ if isinstance(type_, (list, tuple)) else (type_,)
    if isinstance(value, bool) and bool not in types:
        return False
    return isinstance(value, tuple(types))


class Types(object):
    """
    This class models the fields of a JSON object.
    """

    def __init__(self, *type_descriptions, **kwargs):
        """
        The format of a type description is this::

            (name, type, *types)

        - ``name`` is the name of the field
        - ``type`` is the type of the field
        - ``types`` are zero or more subtypes
           (preceding types must be ``list`` or ``dict``)

        A type can be a sum type, meaning it is one of several types. This is
        expressed by using tuples of types, e.g.::

            Types(('window', list, (str, int)))

        for a field ``window`` that is a list whose elements are strings or
        ints.

        Alternatively you can pass no args to disable type checking.

        :raises: :class:`AssertionError` if ``type_descriptions`` has a wrong
                 format
        :param type_descriptions: description of above format
        :type type_descriptions: tuple
        :param optional: names that may be missing
        :type optional: iterable of str
        """
        self.optional = frozenset(kwargs.pop('optional', ()))
        assert not kwargs, 'unknown arguments {0}'.format(sorted(kwargs))

        if not type_descriptions:
            self.descriptions = None
            return
        self.descriptions = {}
        for t in type_descriptions:
            msg = '{0} is a malformed type description({{0}}), ' \
                  'expected (str, type, *subtype)'.format(t)

            assert isinstance(t, tuple), msg.format('no tuple')
            assert len(t) > 1, msg.format('wrong length')
            name = t[0]
            types = t[1:]
            assert isinstance(name, str), msg.format('name is not a `str`')
            assert all(
                # must be a single type
                isinstance(type_, type)
                # or a sum type
                or (isinstance(type_, (list, tuple)) and
                    all(isinstance(t, type) for t in type_))
                for type_ in types), msg.format('types expected')

            if name in self.descriptions:
                log.warning('Overriding types of name {0} from {1} to {2}'
                            .format(name, self.descriptions[name], types))
            self.descriptions[name] = types
        assert self.optional <= set(self.descriptions), 'optional names must be described'

    def __eq__(self, other):
        return (self.descriptions, self.optional) == (other.descriptions, other.optional)

    def __ne__(self, other):
        return not self == other

    @property
    def names(self):
        """
        A set of all names of the current types.
        """
        return set(self.descriptions) if self.descriptions is not None else set()

    @property
    def required(self):
        return self.names - self.optional

    def check_input(self, document, where='document'):
        """
        Check if ``document`` satisfies the descriptions.
        That is:

        - it is a JSON object,
        - all required names are found and
        - have the right type (and subtypes)

        Logs warnings if there are more fields than described.

        :raises: :class:`TypeCheckError` if a name is missing or has the
                 wrong type
        :param document: decoded JSON object
        :type document: dict
        :param where: prefix for error messages
        :returns: count of unknown fields
        :rtype: int
        """
        if self.descriptions is None:
            return 0
        if not isinstance(document, dict):
            raise TypeCheckError('{0} must be an object, got {1}'
                                 .format(where, type(document).__name__))

        for name, types in sorted(self.descriptions.items()):
            count = len(types)
            if name not in document:
                if name in self.optional:
                    continue
                raise TypeCheckError('{0}: field {1} is missing'.format(where, name))

            value = [document[name]]  # pack start value in list to reuse loop
            for i, type_ in enumerate(types):
                if any(not _is_instance(v, type_) for v in value):
                    raise TypeCheckError('{0}: field {1} is not of type {2}'
                                         .format(where, name, _describe(types)))
                # don't reinitialize for last type
                if i == count - 1:
                    break

                if issubclass(type_, dict):
                    value = list(chain.from_iterable(v.values() for v in value))
                else:
                    value = list(chain.from_iterable(value))

        unknown = 0
        for name in sorted(set(document) - set(self.descriptions)):
            unknown += 1
            log.warning('{0}: unknown field {1}'.format(where, name))

        return unknown


def _describe(types):
    def one(t):
        if isinstance(t, (list, tuple)):
            return '|'.join(x.__name__ for x in t)
        return t.__name__
    return ' of '.join(one(t) for t in types)


def check_items(types, items, where):
    """
    Check every object of the list ``items`` against ``types``.

    :returns: total count of unknown fields
    """
    return sum(types.check_input(item, '{0}[{1}]'.format(where, k))
               for k, item in enumerate(items))
