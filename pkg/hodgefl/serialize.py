"""
JSON encoding and decoding of modules, filtrations, matrices and rmf
instances.

A module document looks like::

    {
      "r": 1, "denominator": 1, "window": ["1", "3"],
      "low": false, "high": true,
      "spaces": [{"eigenvalue": "1", "dim": 1,
                  "F": {"jumps": [{"index": 0, "basis_rows": [["1"]]}]}}],
      "zmaps": [{"i": 1, "eigenvalue": "1", "matrix": [["1"]]}],
      "dmaps": []
    }

Rationals are written as strings (``"-2/3"``) and read from strings or
integers. A filtration is ``{"jumps": [{"index": p, "basis_rows": [...]}]}``
with one entry per index where the filtration grows, listing a basis of the
level ``F_p`` as rows. Missing filtrations are trivial with their jump at 0,
missing maps are zero. The schemas under ``schemas/`` describe the same layout.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import json
import logging

from hodgefl import __version__
from hodgefl.linalg import (QMatrix, Subspace, Filtration, FiltrationError,
                            DimensionMismatchError, rational)
from hodgefl.mono import MonodromicModule, FilteredSpace
from hodgefl.report import jsonable
from hodgefl.typecheck import Types, TypeCheckError, check_items


log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

NUMBER = (str, int)

MODULE = Types(('r', int),
               ('denominator', int),
               ('window', list, NUMBER),
               ('low', bool),
               ('high', bool),
               ('spaces', list, dict),
               ('zmaps', list, dict),
               ('dmaps', list, dict),
               ('version', int),
               optional=('denominator', 'low', 'high', 'zmaps', 'dmaps', 'version'))

SPACE = Types(('eigenvalue', NUMBER),
              ('dim', int),
              ('F', dict),
              ('W', dict),
              optional=('F', 'W'))

FILTRATION = Types(('jumps', list, dict))

JUMP = Types(('index', int),
             ('basis_rows', list, list, NUMBER))

MAP = Types(('i', int),
            ('eigenvalue', NUMBER),
            ('matrix', list, list, NUMBER))

RMF = Types(('N', list, list, NUMBER),
            ('L', dict),
            ('center', int),
            ('version', int),
            optional=('center', 'version'))


def _rational(value, where):
    try:
        return rational(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise TypeCheckError('{0}: {1!r} is not a rational'.format(where, value))


def matrix_to_json(m):
    return [[str(x) for x in row] for row in m.entries]


def matrix_from_json(entries, rows, cols, where='matrix'):
    """
    :param rows: expected number of rows
    :param cols: expected number of columns
    :raises: :class:`TypeCheckError` if the entries do not fit the shape
    """
    if rows == 0 or cols == 0:
        if any(len(row) for row in entries):
            raise TypeCheckError('{0}: entries given for a {1}x{2} matrix'.format(where, rows, cols))
        return QMatrix.zeros(rows, cols)
    try:
        return QMatrix([[_rational(x, where) for x in row] for row in entries], rows, cols)
    except DimensionMismatchError as e:
        raise TypeCheckError('{0}: {1}'.format(where, e))


def filtration_to_json(F):
    jumps = [{'index': index, 'basis_rows': [[str(x) for x in v] for v in level.basis]}
             for index, level in F.levels]
    return {'jumps': jumps}


def filtration_from_json(dim, document, where='filtration'):
    """
    Decode ``{"jumps": [{"index": p, "basis_rows": [...]}]}``, a filtration
    of ``Q^dim``. Jumps sharing an index stand for the sum of their rows.
    """
    FILTRATION.check_input(document, where)
    jumps = document['jumps']
    where += '.jumps'
    check_items(JUMP, jumps, where)
    decoded = []
    for k, jump in enumerate(jumps):
        vectors = []
        for v in jump['basis_rows']:
            if len(v) != dim:
                raise TypeCheckError('{0}[{1}]: vector of length {2} in Q^{3}'
                                     .format(where, k, len(v), dim))
            vectors.append(tuple(_rational(x, where) for x in v))
        decoded.append((jump['index'], Subspace(dim, vectors)))
    try:
        return Filtration(dim, decoded)
    except FiltrationError as e:
        raise TypeCheckError('{0}: {1}'.format(where, e))


def module_to_json(M):
    spaces = []
    for chi in M.eigenvalues:
        space = M.spaces[chi]
        spaces.append({'eigenvalue': str(chi), 'dim': space.dim,
                       'F': filtration_to_json(space.F), 'W': filtration_to_json(space.W)})

    def maps(given):
        return [{'i': i, 'eigenvalue': str(chi), 'matrix': matrix_to_json(m)}
                for (i, chi), m in sorted(given.items()) if not m.is_zero()]

    return {
        'version': SCHEMA_VERSION,
        'r': M.r,
        'denominator': M.denom,
        'window': [str(M.window[0]), str(M.window[1])],
        'low': M.low_flag,
        'high': M.high_flag,
        'spaces': spaces,
        'zmaps': maps(M.zmaps),
        'dmaps': maps(M.dmaps),
    }


def module_from_json(document):
    """
    Decode and check a module document.

    :raises: :class:`TypeCheckError` for documents of the wrong shape,
             :class:`~hodgefl.mono.ModuleError` for inconsistent data
    """
    MODULE.check_input(document, 'module')
    if len(document['window']) != 2:
        raise TypeCheckError('module: window needs two entries')
    window = tuple(_rational(x, 'module.window') for x in document['window'])
    check_items(SPACE, document['spaces'], 'module.spaces')

    spaces = {}
    for k, item in enumerate(document['spaces']):
        where = 'module.spaces[{0}]'.format(k)
        chi = _rational(item['eigenvalue'], where)
        dim = item['dim']
        if dim < 0:
            raise TypeCheckError('{0}: negative dimension'.format(where))
        if chi in spaces:
            raise TypeCheckError('{0}: eigenvalue {1} given twice'.format(where, chi))
        F = filtration_from_json(dim, item['F'], where + '.F') if 'F' in item else None
        W = filtration_from_json(dim, item['W'], where + '.W') if 'W' in item else None
        spaces[chi] = FilteredSpace(dim, F, W)

    def dim(chi):
        return spaces[chi].dim if chi in spaces else 0

    def maps(name, step):
        items = document.get(name, [])
        check_items(MAP, items, 'module.' + name)
        decoded = {}
        for k, item in enumerate(items):
            where = 'module.{0}[{1}]'.format(name, k)
            chi = _rational(item['eigenvalue'], where)
            decoded[(item['i'], chi)] = matrix_from_json(item['matrix'], dim(chi + step),
                                                         dim(chi), where)
        return decoded

    return MonodromicModule(document['r'], document.get('denominator', 1), window, spaces,
                            maps('zmaps', 1), maps('dmaps', -1),
                            document.get('low', False), document.get('high', False))


def rmf_from_json(document):
    """
    Decode ``{"N": [[...]], "L": {"jumps": [...]}, "center": c}``.

    :returns: ``(N, L, center)``
    """
    RMF.check_input(document, 'rmf')
    n = len(document['N'])
    N = matrix_from_json(document['N'], n, n, 'rmf.N')
    L = filtration_from_json(n, document['L'], 'rmf.L')
    return N, L, document.get('center', 0)


def rmf_to_json(N, L, center=0):
    return {'version': SCHEMA_VERSION, 'N': matrix_to_json(N),
            'L': filtration_to_json(L), 'center': center}


def load(path):
    """
    Read a JSON file.

    :raises: :class:`TypeCheckError` if the file is not valid JSON
    """
    with open(path) as f:
        try:
            return json.load(f)
        except ValueError as e:
            raise TypeCheckError('{0} is not valid JSON: {1}'.format(path, e))


def load_module(path):
    log.info('loading module from {0}'.format(path))
    return module_from_json(load(path))


def dump(data, name):
    """
    ``data`` as a JSON document headed by system information, with stable
    key order.
    """
    document = {
        'system': {'hodgefl': __version__},
        'data': {name: jsonable(data)},
    }
    return json.dumps(document, indent=2, sort_keys=True)
