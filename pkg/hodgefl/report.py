"""
Verification reports.

A :class:`Report` collects named checks, each passed or failed with an
optional witness, plus free-form information. It renders either as JSON
(system information and data, like every dump hodgefl writes) or as text
with one line per check.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import json
import logging
from fractions import Fraction
from pprint import pformat

from hodgefl import __version__


log = logging.getLogger(__name__)


def jsonable(value):
    """
    Convert ``value`` into something :func:`json.dumps` accepts: rationals
    become ``"p/q"`` strings, tuples and sets become lists and mapping keys
    become strings.
    """
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return dict((str(k) if not isinstance(k, str) else k, jsonable(v))
                    for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


class Check(object):
    """
    The outcome of one named check.
    """

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = bool(passed)
        self.witness = witness

    def to_dict(self):
        d = {'name': self.name, 'passed': self.passed}
        if self.witness is not None:
            d['witness'] = jsonable(self.witness)
        return d


class Report(object):
    """
    An ordered collection of checks.
    """

    def __init__(self, name, **info):
        """
        :param name: name of the report, usually the operation that made it
        :type name: str
        :param info: additional information included verbatim
        """
        self.name = name
        self.checks = []
        self.info = dict(info)

    def add(self, name, passed, witness=None):
        """
        Record a check.

        :returns: ``passed``
        """
        self.checks.append(Check(name, passed, witness))
        if not passed:
            log.debug('{0}: check {1} failed'.format(self.name, name))
        return bool(passed)

    def extend(self, other, prefix=None):
        """
        Append the checks of ``other``, optionally prefixing their names.
        """
        for check in other.checks:
            name = '{0}.{1}'.format(prefix, check.name) if prefix else check.name
            self.checks.append(Check(name, check.passed, check.witness))
        return other.passed

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def to_dict(self):
        return {
            'report': self.name,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
            'info': jsonable(self.info),
        }

    def to_json(self, indent=2):
        """
        The report as a JSON document with stable key order.
        """
        dump = {
            'system': {'hodgefl': __version__},
            'data': self.to_dict(),
        }
        return json.dumps(dump, indent=indent, sort_keys=True)

    def to_text(self):
        lines = ['report: {0}'.format(self.name)]
        for check in self.checks:
            line = '  {0} {1}'.format('PASS' if check.passed else 'FAIL', check.name)
            if check.witness is not None and not check.passed:
                witness = pformat(jsonable(check.witness), width=72)
                line += ':\n' + '\n'.join('      ' + l for l in witness.splitlines())
            lines.append(line)
        for key in sorted(self.info):
            lines.append('  {0}: {1}'.format(key, pformat(jsonable(self.info[key]), width=72)))
        lines.append('result: {0}'.format('PASS' if self.passed else 'FAIL'))
        return '\n'.join(lines)

    def __repr__(self):
        return 'Report({0!r}, {1} checks, {2} failed)'.format(
            self.name, len(self.checks), len(self.failures))
