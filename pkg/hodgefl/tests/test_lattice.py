import numpy as np

import unittest

from hodgefl.linalg import (IntMatrix, smith_normal_form, hermite_normal_form,
                            kernel_lattice, integer_solve, invariant_factors)
from hodgefl.tests.util import sympy_smith_diagonal


def random_matrix(rng, rows, cols, bound=6):
    return IntMatrix([[int(x) for x in row]
                      for row in rng.randint(-bound, bound + 1, size=(rows, cols))])


class SmithNormalFormTest(unittest.TestCase):
    def assertSmith(self, A):
        U, D, V = smith_normal_form(A)
        self.assertTrue(U.is_unimodular())
        self.assertTrue(V.is_unimodular())
        self.assertEqual(U * A * V, D)
        diagonal = [D[i, i] for i in range(min(D.rows, D.cols))]
        for i in range(D.rows):
            for j in range(D.cols):
                if i != j:
                    self.assertEqual(D[i, j], 0)
        self.assertTrue(all(d >= 0 for d in diagonal))
        for a, b in zip(diagonal, diagonal[1:]):
            if a == 0:
                self.assertEqual(b, 0)
            else:
                self.assertEqual(b % a, 0)
        return U, D, V

    def test_diagonal(self):
        _, D, _ = self.assertSmith(IntMatrix([[2, 0], [0, 3]]))
        self.assertEqual(D, IntMatrix([[1, 0], [0, 6]]))

    def test_identity(self):
        I = IntMatrix.identity(3)
        self.assertEqual(smith_normal_form(I), (I, I, I))

    def test_known_example(self):
        A = IntMatrix([[12, 6, 4, 8],
                       [3, 9, 6, 12],
                       [2, 16, 14, 28],
                       [20, 10, 10, 20]])
        _, D, _ = self.assertSmith(A)
        self.assertEqual([D[i, i] for i in range(4)], [1, 10, 30, 0])
        self.assertEqual(invariant_factors(A), [1, 10, 30])

    def test_gkz_matrix(self):
        self.assertEqual(invariant_factors(IntMatrix([[1, 1, 1], [0, 1, 2]])), [1, 1])
        self.assertEqual(invariant_factors(IntMatrix([[2, 0], [0, 2]])), [2, 2])

    def test_zero_matrix(self):
        _, D, _ = self.assertSmith(IntMatrix.zeros(2, 3))
        self.assertTrue(D.is_zero())
        self.assertEqual(invariant_factors(IntMatrix.zeros(2, 3)), [])

    def test_random_against_sympy(self):
        rng = np.random.RandomState(11)
        for _ in range(30):
            rows, cols = int(rng.randint(1, 4)), int(rng.randint(1, 5))
            A = random_matrix(rng, rows, cols)
            _, D, _ = self.assertSmith(A)
            diagonal = [D[i, i] for i in range(min(rows, cols)) if D[i, i]]
            self.assertEqual(diagonal, sympy_smith_diagonal(A))
            self.assertEqual(invariant_factors(A), diagonal)


class HermiteNormalFormTest(unittest.TestCase):
    def test_form(self):
        rng = np.random.RandomState(3)
        for _ in range(20):
            A = random_matrix(rng, int(rng.randint(1, 4)), int(rng.randint(1, 5)))
            H, U = hermite_normal_form(A)
            self.assertTrue(U.is_unimodular())
            self.assertEqual(U * A, H)
            last = -1
            for i in range(H.rows):
                row = H.row(i)
                if not any(row):
                    last = H.cols
                    continue
                self.assertLess(last, H.cols, 'zero row above a nonzero row')
                pivot = next(j for j, x in enumerate(row) if x)
                self.assertGreater(pivot, last)
                self.assertGreater(row[pivot], 0)
                for k in range(i):
                    self.assertTrue(0 <= H[k, pivot] < row[pivot])
                last = pivot

    def test_example(self):
        H, _ = hermite_normal_form(IntMatrix([[2, 4], [1, 3]]))
        self.assertEqual(H, IntMatrix([[1, 1], [0, 2]]))

    def test_rank_deficient(self):
        A = IntMatrix([[1, 2], [2, 4], [3, 6]])
        H, U = hermite_normal_form(A)
        self.assertEqual(H, IntMatrix([[1, 2], [0, 0], [0, 0]]))
        self.assertTrue(U.is_unimodular())
        self.assertEqual(U * A, H)

    def test_zero_matrix(self):
        H, U = hermite_normal_form(IntMatrix.zeros(2, 2))
        self.assertTrue(H.is_zero())
        self.assertTrue(U.is_unimodular())


class KernelLatticeTest(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(kernel_lattice(IntMatrix([[1, 1, 1]])), [(1, 0, -1), (0, 1, -1)])
        self.assertEqual(kernel_lattice(IntMatrix([[1, 1, 1], [0, 1, 2]])), [(1, -2, 1)])
        self.assertEqual(kernel_lattice(IntMatrix([[1, 2]])), [(2, -1)])
        self.assertEqual(kernel_lattice(IntMatrix.identity(2)), [])

    def test_saturated(self):
        # ker [2, 4] is spanned by (2, -1), not by a multiple
        self.assertEqual(kernel_lattice(IntMatrix([[2, 4]])), [(2, -1)])

    def test_random(self):
        rng = np.random.RandomState(5)
        for _ in range(20):
            A = random_matrix(rng, int(rng.randint(1, 3)), int(rng.randint(2, 5)), bound=3)
            basis = kernel_lattice(A)
            self.assertEqual(len(basis), A.cols - A.rank())
            for v in basis:
                self.assertFalse(any(A.apply(v)))
            if basis:
                # a basis of a saturated lattice has invariant factors 1
                B = IntMatrix(basis)
                self.assertEqual(invariant_factors(B), [1] * len(basis))


class IntegerSolveTest(unittest.TestCase):
    def test_solvable(self):
        A = IntMatrix([[1, 1, 1], [0, 1, 2]])
        y = integer_solve(A, (1, 1, 1))
        self.assertEqual(y, (1, 0))
        y = integer_solve(A, (2, 5, 8))
        self.assertEqual(tuple(sum(y[i] * A[i, j] for i in range(2)) for j in range(3)),
                         (2, 5, 8))

    def test_unsolvable(self):
        self.assertIsNone(integer_solve(IntMatrix([[1, 2]]), (1, 1)))
        self.assertIsNone(integer_solve(IntMatrix([[2, 0], [0, 2]]), (1, 1)))
        self.assertIsNone(integer_solve(IntMatrix([[1, 0]]), (0, 1)))

    def test_random_right_hand_sides(self):
        rng = np.random.RandomState(8)
        for _ in range(20):
            A = random_matrix(rng, 2, 3, bound=4)
            y = tuple(int(x) for x in rng.randint(-3, 4, size=2))
            b = tuple(sum(y[i] * A[i, j] for i in range(2)) for j in range(3))
            found = integer_solve(A, b)
            self.assertIsNotNone(found)
            self.assertEqual(tuple(sum(found[i] * A[i, j] for i in range(2))
                                   for j in range(3)), b)
