from fractions import Fraction

import unittest

from hodgefl.linalg import (QMatrix, IntMatrix, DimensionMismatchError, rational,
                            vector, rref)


class RationalTest(unittest.TestCase):
    def test_accepted(self):
        self.assertEqual(rational(3), Fraction(3))
        self.assertEqual(rational('-2/7'), Fraction(-2, 7))
        self.assertEqual(rational(' 5 '), Fraction(5))
        self.assertEqual(rational(Fraction(1, 2)), Fraction(1, 2))

    def test_refused(self):
        for value in (0.5, True, None, [1]):
            with self.assertRaises(TypeError):
                rational(value)
        with self.assertRaises(ValueError):
            rational('x')
        with self.assertRaises(ZeroDivisionError):
            rational('1/0')

    def test_vector(self):
        self.assertEqual(vector([1, '1/2']), (Fraction(1), Fraction(1, 2)))


class RrefTest(unittest.TestCase):
    def test_canonical(self):
        rows, pivots = rref([[2, 4, 2], [1, 2, 2], [3, 6, 4]], 3)
        self.assertEqual(rows, ((1, 2, 0), (0, 0, 1)))
        self.assertEqual(pivots, (0, 2))

    def test_entries_are_fractions(self):
        rows, pivots = rref([[2, 1], [Fraction(4, 3), Fraction(2, 3)]], 2)
        self.assertEqual(rows, ((1, Fraction(1, 2)),))
        self.assertEqual(pivots, (0,))
        self.assertTrue(all(type(x) is Fraction for x in rows[0]))
        self.assertIs(type(QMatrix([[2, 1], [1, 1]]).inverse()[0, 0]), Fraction)
        self.assertIs(type(QMatrix([[Fraction(1, 2)]]).determinant()), Fraction)
        self.assertIs(type(IntMatrix([[2]]).determinant()), int)

    def test_independent_of_spanning_set(self):
        a = rref([[1, 1, 0], [0, 1, 1]], 3)
        b = rref([[1, 2, 1], [1, 0, -1], [2, 2, 0]], 3)
        self.assertEqual(a, b)

    def test_empty(self):
        self.assertEqual(rref([], 3), ((), ()))

    def test_wrong_length(self):
        with self.assertRaises(DimensionMismatchError):
            rref([[1, 2]], 3)


class QMatrixTest(unittest.TestCase):
    def setUp(self):
        self.a = QMatrix([[1, 2], [3, 4]])
        self.n = QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])

    def test_shape(self):
        self.assertEqual(QMatrix([[1, 2, 3]]).shape, (1, 3))
        self.assertEqual(QMatrix.zeros(0, 3).shape, (0, 3))
        with self.assertRaises(DimensionMismatchError):
            QMatrix([])
        with self.assertRaises(DimensionMismatchError):
            QMatrix([[1, 2], [3]])

    def test_arithmetic(self):
        self.assertEqual(self.a + self.a, self.a * 2)
        self.assertEqual(self.a - self.a, QMatrix.zeros(2, 2))
        self.assertEqual(self.a * QMatrix.identity(2), self.a)
        self.assertEqual(self.a * self.a, QMatrix([[7, 10], [15, 22]]))
        self.assertEqual(Fraction(1, 2) * self.a, QMatrix([['1/2', 1], ['3/2', 2]]))
        with self.assertRaises(DimensionMismatchError):
            self.a * QMatrix([[1, 2, 3]])

    def test_zero_sized_products(self):
        left = QMatrix.zeros(2, 0)
        right = QMatrix.zeros(0, 3)
        self.assertEqual(left * right, QMatrix.zeros(2, 3))
        self.assertEqual(right.transpose().shape, (3, 0))

    def test_apply(self):
        self.assertEqual(self.a.apply((1, -1)), (-1, -1))
        with self.assertRaises(DimensionMismatchError):
            self.a.apply((1, 2, 3))

    def test_rank_and_nullspace(self):
        m = QMatrix([[1, 2, 3], [2, 4, 6]])
        self.assertEqual(m.rank(), 1)
        for v in m.nullspace():
            self.assertEqual(m.apply(v), (0, 0))
        self.assertEqual(len(m.nullspace()), 2)

    def test_solve(self):
        x = self.a.solve((5, 11))
        self.assertEqual(self.a.apply(x), (5, 11))
        self.assertIsNone(QMatrix([[1, 1], [1, 1]]).solve((1, 2)))

    def test_power_and_nilpotency(self):
        self.assertTrue(self.n.is_nilpotent())
        self.assertFalse(self.n.power(2).is_zero())
        self.assertTrue(self.n.power(3).is_zero())
        self.assertFalse(self.a.is_nilpotent())
        self.assertEqual(self.a.power(0), QMatrix.identity(2))

    def test_determinant_and_inverse(self):
        self.assertEqual(self.a.determinant(), -2)
        self.assertEqual(self.a * self.a.inverse(), QMatrix.identity(2))
        with self.assertRaises(ZeroDivisionError):
            self.n.inverse()

    def test_block_diagonal(self):
        b = QMatrix.block_diagonal(QMatrix([[1]]), QMatrix.zeros(0, 0), QMatrix([[2, 3]]))
        self.assertEqual(b, QMatrix([[1, 0, 0], [0, 2, 3]]))

    def test_kron(self):
        k = QMatrix([[0, 1], [0, 0]]).kron(QMatrix.identity(2))
        self.assertEqual(k.apply((0, 0, 1, 0)), (1, 0, 0, 0))


class IntMatrixTest(unittest.TestCase):
    def test_parse(self):
        A = IntMatrix.parse('1,1,1;0,1,2')
        self.assertEqual(A, IntMatrix([[1, 1, 1], [0, 1, 2]]))
        self.assertEqual(str(A), '1,1,1;0,1,2')
        for text in ('1,2;3', '1,a', '', '1,2;;3,4'):
            with self.assertRaises(ValueError):
                IntMatrix.parse(text)

    def test_integers_only(self):
        for entry in (Fraction(1, 2), 1.0, True):
            with self.assertRaises(TypeError):
                IntMatrix([[entry]])

    def test_determinant(self):
        self.assertEqual(IntMatrix([[2, 0], [0, 3]]).determinant(), 6)
        self.assertEqual(IntMatrix([[0, 1], [1, 0]]).determinant(), -1)
        self.assertEqual(IntMatrix([[1, 2], [2, 4]]).determinant(), 0)
        self.assertEqual(IntMatrix([[2, 1, 3], [0, 4, 1], [5, 2, 0]]).determinant(), -59)
        self.assertTrue(IntMatrix([[1, 5], [0, 1]]).is_unimodular())
        self.assertFalse(IntMatrix([[2, 0], [0, 1]]).is_unimodular())

    def test_determinant_agrees_with_rationals(self):
        A = IntMatrix([[0, 3, 1, 2], [4, 0, 2, 1], [1, 1, 0, 5], [2, 7, 3, 0]])
        self.assertEqual(A.determinant(), A.to_qmatrix().determinant())

    def test_product_and_rank(self):
        A = IntMatrix([[1, 2], [3, 4]])
        self.assertEqual(A * IntMatrix.identity(2), A)
        self.assertEqual(A.apply((1, 1)), (3, 7))
        self.assertEqual(IntMatrix([[1, 2], [2, 4]]).rank(), 1)
        self.assertEqual(A.columns(), [(1, 3), (2, 4)])
