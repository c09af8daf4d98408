"""
Exact matrices over the rationals and the integers.

All entries are :class:`fractions.Fraction` (rational matrices) or ``int``
(integer matrices); nothing in here ever touches floating point. Matrices act
on column vectors, which are plain tuples. Elimination (echelon forms,
determinants, inverses) is done by sympy's :class:`DomainMatrix` over
``QQ`` and ``ZZ``.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from fractions import Fraction

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError


log = logging.getLogger(__name__)


class DimensionMismatchError(Exception):
    """
    Signals that shapes of matrices, vectors or subspaces do not fit together.
    """
    pass


class NotInSpanError(Exception):
    """
    Signals that a vector is not contained in a subspace.
    """
    pass


def rational(value):
    """
    Interpret ``value`` as an exact rational.

    Accepts :class:`~fractions.Fraction`, ``int`` and strings like ``"3"`` or
    ``"-2/7"``. Floats are refused.

    :param value: the value to convert
    :rtype: :class:`~fractions.Fraction`
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('{0!r} is not a rational'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError('{0!r} is not a rational'.format(value))


def vector(values):
    """
    Return ``values`` as a tuple of rationals.
    """
    return tuple(rational(v) for v in values)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatchError('cannot pair vectors of length {0} and {1}'
                                     .format(len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def combine(coefficients, vectors, length):
    """
    Linear combination ``sum(c * v)`` of ``vectors`` of the given length.
    """
    result = [Fraction(0)] * length
    for c, v in zip(coefficients, vectors):
        if c:
            for i, x in enumerate(v):
                result[i] += c * x
    return tuple(result)


def kron_vectors(u, v):
    return tuple(a * b for a in u for b in v)


def is_zero_vector(v):
    return all(x == 0 for x in v)


def to_domain_matrix(rows, nrows, ncols, domain=QQ):
    """
    The rational (or, with ``domain=ZZ``, integer) entries ``rows`` as a
    :class:`DomainMatrix`.
    """
    if domain == ZZ:
        convert = ZZ
    else:
        convert = lambda x: QQ(x.numerator, x.denominator)
    return DomainMatrix([[convert(x) for x in row] for row in rows], (nrows, ncols), domain)


def from_domain_element(x):
    return Fraction(int(x.numerator), int(x.denominator))


def rref(rows, ncols):
    """
    Reduced row echelon form of the matrix with the given rows.

    Zero rows are dropped, so the result is the canonical basis of the row
    space.

    :param rows: iterable of rows of length ``ncols``
    :param ncols: number of columns
    :type ncols: int
    :returns: pair of the nonzero reduced rows and their pivot columns
    :rtype: tuple
    """
    m = []
    for row in rows:
        row = [rational(x) for x in row]
        if len(row) != ncols:
            raise DimensionMismatchError('row of length {0} in a matrix with {1} columns'
                                         .format(len(row), ncols))
        m.append(row)
    if not m or not ncols:
        return (), ()

    reduced, pivots = to_domain_matrix(m, len(m), ncols).rref()
    rows = reduced.to_list()[:len(pivots)]
    return (tuple(tuple(from_domain_element(x) for x in row) for row in rows),
            tuple(pivots))


class QMatrix(object):
    """
    An immutable matrix over the rationals.

    Zero-sized matrices are allowed; their shape has to be passed explicitly
    because it cannot be read off the (empty) entries.
    """

    def __init__(self, entries, rows=None, cols=None):
        """
        :param entries: rows of the matrix, entries accepted by :func:`rational`
        :param rows: number of rows (defaults to ``len(entries)``)
        :param cols: number of columns (defaults to length of first row)
        """
        entries = tuple(vector(row) for row in entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            if not entries:
                raise DimensionMismatchError('shape of an empty matrix must be given')
            cols = len(entries[0])
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise DimensionMismatchError('entries do not form a {0}x{1} matrix'
                                         .format(rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def scalar(cls, n, value):
        value = rational(value)
        return cls([[value if i == j else Fraction(0) for j in range(n)]
                    for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns, rows):
        """
        Build the matrix whose columns are ``columns``.
        """
        columns = [vector(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @classmethod
    def block_diagonal(cls, *blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        entries = []
        offset = 0
        for b in blocks:
            for row in b.entries:
                entries.append([Fraction(0)] * offset + list(row)
                               + [Fraction(0)] * (cols - offset - b.cols))
            offset += b.cols
        return cls(entries, rows, cols)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, QMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return 'QMatrix({0}, {1}, {2})'.format(
            [[str(x) for x in row] for row in self.entries], self.rows, self.cols)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError('shapes {0} and {1} differ'
                                         .format(self.shape, other.shape))

    def __add__(self, other):
        self._check_same_shape(other)
        return QMatrix([[a + b for a, b in zip(r, s)]
                        for r, s in zip(self.entries, other.entries)],
                       self.rows, self.cols)

    def __sub__(self, other):
        self._check_same_shape(other)
        return QMatrix([[a - b for a, b in zip(r, s)]
                        for r, s in zip(self.entries, other.entries)],
                       self.rows, self.cols)

    def __neg__(self):
        return QMatrix([[-a for a in r] for r in self.entries], self.rows, self.cols)

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionMismatchError('cannot multiply {0} by {1}'
                                             .format(self.shape, other.shape))
            columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
            return QMatrix([[dot(row, col) for col in columns] for row in self.entries],
                           self.rows, other.cols)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QMatrix([[a * other for a in r] for r in self.entries],
                           self.rows, self.cols)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def apply(self, v):
        """
        Apply the matrix to the column vector ``v``.

        :rtype: tuple
        """
        if len(v) != self.cols:
            raise DimensionMismatchError('cannot apply a {0} matrix to a vector of length {1}'
                                         .format(self.shape, len(v)))
        return tuple(dot(row, v) for row in self.entries)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return QMatrix([self.column(j) for j in range(self.cols)], self.cols, self.rows)

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def rank(self):
        return len(rref(self.entries, self.cols)[0])

    def nullspace(self):
        """
        Basis of ``{v : Mv = 0}``, one vector per free column of the reduced
        echelon form.

        :rtype: list of tuples
        """
        reduced, pivots = rref(self.entries, self.cols)
        basis = []
        for free in range(self.cols):
            if free in pivots:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for row, p in zip(reduced, pivots):
                v[p] = -row[free]
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """
        One solution of ``M x = b``, free variables set to zero.

        :returns: tuple or ``None`` if the system is inconsistent
        """
        b = vector(b)
        if len(b) != self.rows:
            raise DimensionMismatchError('right hand side of length {0} for {1} equations'
                                         .format(len(b), self.rows))
        reduced, pivots = rref([row + (y,) for row, y in zip(self.entries, b)], self.cols + 1)
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for row, p in zip(reduced, pivots):
            x[p] = row[-1]
        return tuple(x)

    def power(self, k):
        if self.rows != self.cols:
            raise DimensionMismatchError('power of a non-square matrix')
        result = QMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_nilpotent(self):
        return self.rows == self.cols and self.power(self.rows).is_zero()

    def to_domain_matrix(self):
        return to_domain_matrix(self.entries, self.rows, self.cols)

    def determinant(self):
        if self.rows != self.cols:
            raise DimensionMismatchError('determinant of a non-square matrix')
        if not self.rows:
            return Fraction(1)
        return from_domain_element(self.to_domain_matrix().det())

    def inverse(self):
        """
        :raises: :class:`ZeroDivisionError` if the matrix is singular
        """
        if self.rows != self.cols:
            raise DimensionMismatchError('inverse of a non-square matrix')
        n = self.rows
        if not n:
            return self
        try:
            inverse = self.to_domain_matrix().inv()
        except DMNonInvertibleMatrixError:
            raise ZeroDivisionError('matrix is singular')
        return QMatrix([[from_domain_element(x) for x in row] for row in inverse.to_list()],
                       n, n)

    def kron(self, other):
        """
        Kronecker product, compatible with :func:`kron_vectors`.
        """
        return QMatrix([[a * b for a in r for b in s]
                        for r in self.entries for s in other.entries],
                       self.rows * other.rows, self.cols * other.cols)


class IntMatrix(object):
    """
    An immutable integer matrix, stored row-major.
    """

    def __init__(self, entries, rows=None, cols=None):
        entries = tuple(tuple(row) for row in entries)
        for row in entries:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError('{0!r} is not an integer'.format(x))
        if rows is None:
            rows = len(entries)
        if cols is None:
            if not entries:
                raise DimensionMismatchError('shape of an empty matrix must be given')
            cols = len(entries[0])
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise DimensionMismatchError('entries do not form a {0}x{1} matrix'
                                         .format(rows, cols))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def parse(cls, text):
        """
        Parse the CSV-like notation ``"1,1,1;0,1,2"`` (rows separated by
        semicolons).

        :raises: :class:`ValueError` on malformed input
        """
        rows = [r for r in text.strip().split(';')]
        entries = []
        for r in rows:
            if not r.strip():
                raise ValueError('empty row in matrix {0!r}'.format(text))
            entries.append([int(x) for x in r.split(',')])
        if any(len(row) != len(entries[0]) for row in entries):
            raise ValueError('rows of unequal length in matrix {0!r}'.format(text))
        return cls(entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return 'IntMatrix({0!r})'.format([list(row) for row in self.entries])

    def __str__(self):
        return ';'.join(','.join(str(x) for x in row) for row in self.entries)

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError('cannot multiply {0} by {1}'
                                         .format(self.shape, other.shape))
        return IntMatrix([[sum(self.entries[i][k] * other.entries[k][j]
                               for k in range(self.cols))
                           for j in range(other.cols)]
                          for i in range(self.rows)], self.rows, other.cols)

    def apply(self, v):
        if len(v) != self.cols:
            raise DimensionMismatchError('cannot apply a {0} matrix to a vector of length {1}'
                                         .format(self.shape, len(v)))
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix(self.columns(), self.cols, self.rows)

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def to_qmatrix(self):
        return QMatrix(self.entries, self.rows, self.cols)

    def rank(self):
        return self.to_qmatrix().rank()

    def to_domain_matrix(self):
        return to_domain_matrix(self.entries, self.rows, self.cols, ZZ)

    def determinant(self):
        """
        Determinant over ``ZZ`` (fraction-free elimination).
        """
        if self.rows != self.cols:
            raise DimensionMismatchError('determinant of a non-square matrix')
        if self.rows == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def is_unimodular(self):
        return self.rows == self.cols and abs(self.determinant()) == 1
