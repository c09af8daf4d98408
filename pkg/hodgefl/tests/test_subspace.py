from fractions import Fraction

import unittest

from hodgefl.linalg import (QMatrix, Subspace, NotInSpanError, DimensionMismatchError,
                            span, subspace_sum, intersect, image, preimage, kernel,
                            quotient_dim, restricted_map, quotient_map)


class SubspaceTest(unittest.TestCase):
    def setUp(self):
        self.xy = Subspace(3, [(1, 0, 0), (0, 1, 0)])
        self.yz = Subspace(3, [(0, 1, 0), (0, 0, 1)])
        self.diagonal = Subspace(3, [(1, 1, 1)])

    def test_canonical_equality(self):
        self.assertEqual(Subspace(3, [(1, 1, 0), (1, -1, 0)]), self.xy)
        self.assertEqual(Subspace(3, [(2, 2, 2), (1, 1, 1)]), self.diagonal)
        self.assertEqual(hash(Subspace(3, [(0, 3, 0), (5, 0, 0)])), hash(self.xy))
        self.assertNotEqual(Subspace(2, []), Subspace(3, []))

    def test_dims(self):
        self.assertEqual(self.xy.dim, 2)
        self.assertTrue(Subspace.zero(4).is_zero())
        self.assertTrue(Subspace.full(4).is_full())
        self.assertEqual(Subspace.full(0), Subspace.zero(0))

    def test_sum_and_intersection(self):
        self.assertEqual(self.xy + self.yz, Subspace.full(3))
        self.assertEqual(self.xy & self.yz, span(3, [(0, 1, 0)]))
        self.assertTrue((self.xy & self.diagonal).is_zero())
        self.assertEqual(subspace_sum(self.xy, self.diagonal), Subspace.full(3))
        self.assertEqual(intersect(self.xy, Subspace.full(3)), self.xy)
        with self.assertRaises(DimensionMismatchError):
            self.xy + Subspace.full(2)

    def test_modular_law(self):
        # S ⊆ U implies S + (T ∩ U) = (S + T) ∩ U
        S, T, U = span(3, [(1, 0, 0)]), self.diagonal, self.xy
        self.assertEqual(S + (T & U), (S + T) & U)

    def test_containment(self):
        self.assertTrue(self.xy.contains_vector((3, '1/2', 0)))
        self.assertFalse(self.xy.contains_vector((0, 0, 1)))
        self.assertTrue(Subspace.full(3).contains(self.xy))
        self.assertFalse(self.xy.contains(self.yz))

    def test_coordinates(self):
        plane = Subspace(3, [(1, 0, 2), (0, 1, 3)])
        self.assertEqual(plane.coordinates((2, 1, 7)), (2, 1))
        with self.assertRaises(NotInSpanError):
            plane.coordinates((0, 0, 1))

    def test_annihilator(self):
        plane = Subspace(3, [(1, 0, 2), (0, 1, 3)])
        (c,) = plane.annihilator()
        for v in plane.basis:
            self.assertEqual(sum(a * b for a, b in zip(c, v)), 0)
        self.assertEqual(len(Subspace.zero(2).annihilator()), 2)

    def test_quotient_coordinates(self):
        line = span(3, [(1, 1, 0)])
        q = line.quotient_coordinates((3, 1, 5))
        self.assertEqual(len(q), 2)
        self.assertEqual(line.quotient_coordinates((4, 2, 5)), q)
        lifted = line.quotient_lift(q)
        self.assertTrue(line.contains_vector(tuple(a - b for a, b in zip(lifted, (3, 1, 5)))))


class MapTest(unittest.TestCase):
    def setUp(self):
        self.n = QMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])

    def test_image_and_kernel(self):
        full = Subspace.full(3)
        self.assertEqual(image(self.n, full), span(3, [(1, 0, 0), (0, 1, 0)]))
        self.assertEqual(kernel(self.n), span(3, [(1, 0, 0)]))
        self.assertEqual(image(self.n, span(3, [(1, 0, 0)])), Subspace.zero(3))
        with self.assertRaises(DimensionMismatchError):
            image(self.n, Subspace.full(2))

    def test_preimage(self):
        self.assertEqual(preimage(self.n, Subspace.zero(3)), kernel(self.n))
        self.assertEqual(preimage(self.n, span(3, [(1, 0, 0)])),
                         span(3, [(1, 0, 0), (0, 1, 0)]))
        self.assertEqual(preimage(self.n, Subspace.full(3)), Subspace.full(3))

    def test_quotient_dim(self):
        self.assertEqual(quotient_dim(Subspace.full(3), kernel(self.n)), 2)
        with self.assertRaises(DimensionMismatchError):
            quotient_dim(kernel(self.n), Subspace.full(3))

    def test_restricted_map(self):
        source = span(3, [(0, 1, 0), (0, 0, 1)])
        target = span(3, [(1, 0, 0), (0, 1, 0)])
        m = restricted_map(self.n, source, target)
        self.assertEqual(m, QMatrix([[1, 0], [0, 1]]))
        with self.assertRaises(NotInSpanError):
            restricted_map(self.n, source, span(3, [(1, 0, 0)]))
        self.assertEqual(restricted_map(self.n, Subspace.zero(3), target).shape, (2, 0))

    def test_quotient_map(self):
        sub = kernel(self.n)
        m = quotient_map(self.n, sub)
        self.assertEqual(m.shape, (2, 2))
        self.assertTrue(m.is_nilpotent())
        self.assertEqual(m.rank(), 1)
        with self.assertRaises(NotInSpanError):
            quotient_map(self.n, span(3, [(0, 0, 1)]))
        self.assertEqual(quotient_map(self.n, Subspace.full(3)).shape, (0, 0))

    def test_exact_arithmetic(self):
        third = span(2, [(Fraction(1, 3), 1)])
        self.assertEqual(third.basis, ((1, 3),))
