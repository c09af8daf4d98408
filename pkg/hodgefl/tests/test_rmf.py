import unittest

from hodgefl import serialize
from hodgefl.linalg import QMatrix, Subspace, Filtration, span
from hodgefl.mono import RmfError, rmf, check_rmf
from hodgefl.tests.util import get_json_data, brute_force_rmf


def e(n, *indices):
    return span(n, [tuple(int(i == k) for i in range(n)) for k in indices])


def shift_matrix(n, pairs):
    """
    The matrix sending ``e_source`` to ``e_target`` for every pair.
    """
    entries = [[0] * n for _ in range(n)]
    for source, target in pairs:
        entries[target][source] = 1
    return QMatrix(entries)


JORDAN2 = shift_matrix(2, [(1, 0)])
JORDAN3 = shift_matrix(3, [(1, 0), (2, 1)])


def instances():
    """
    ``(name, N, L)`` for small inputs covering trivial, split, obstructed and
    non-split cases.
    """
    return [
        ('jordan2', JORDAN2, Filtration.trivial(2)),
        ('zero', QMatrix.zeros(2, 2), Filtration(2, [(0, e(2, 0)), (1, Subspace.full(2))])),
        ('obstructed', JORDAN2, Filtration(2, [(0, e(2, 0)), (1, Subspace.full(2))])),
        ('gap-two', JORDAN2, Filtration(2, [(0, e(2, 0)), (2, Subspace.full(2))])),
        ('jordan3', JORDAN3, Filtration.trivial(3)),
        ('block-and-line', shift_matrix(3, [(1, 0)]),
         Filtration(3, [(0, e(3, 0, 1)), (1, Subspace.full(3))])),
        ('three-steps', shift_matrix(3, [(2, 0)]),
         Filtration(3, [(0, e(3, 0)), (1, e(3, 0, 1)), (2, Subspace.full(3))])),
    ]


class RmfTest(unittest.TestCase):
    def test_trivial_filtration(self):
        W = rmf(JORDAN2, Filtration.trivial(2))
        self.assertEqual(W, Filtration(2, [(-1, e(2, 0)), (1, Subspace.full(2))]))
        self.assertEqual(rmf(JORDAN3, Filtration.trivial(3)).jumps, (-2, 0, 2))

    def test_center(self):
        W = rmf(JORDAN2, Filtration.trivial(2), center=3)
        self.assertEqual(W.jumps, (2, 4))

    def test_known_answers(self):
        cases = dict((name, (N, L)) for name, N, L in instances())
        N, L = cases['zero']
        self.assertEqual(rmf(N, L), L)
        N, L = cases['gap-two']
        self.assertEqual(rmf(N, L), L)
        N, L = cases['block-and-line']
        self.assertEqual(rmf(N, L), Filtration(3, [(-1, e(3, 0)), (1, Subspace.full(3))]))

    def test_obstructed(self):
        N, L, center = serialize.rmf_from_json(get_json_data('obstructed'))
        self.assertIsNone(rmf(N, L, center))

    def test_fixture(self):
        N, L, center = serialize.rmf_from_json(get_json_data('jordan2'))
        W = rmf(N, L, center)
        self.assertEqual(W.levels, ((-1, e(2, 0)), (1, Subspace.full(2))))
        self.assertTrue(check_rmf(N, L, W, center).passed)

    def test_invalid_input(self):
        with self.assertRaises(RmfError):
            rmf(QMatrix.identity(2), Filtration.trivial(2))
        with self.assertRaises(RmfError):
            rmf(QMatrix.zeros(2, 3), Filtration.trivial(2))
        with self.assertRaises(RmfError):
            rmf(JORDAN2, Filtration.trivial(3))
        with self.assertRaises(RmfError):
            rmf(JORDAN2, Filtration(2, [(0, e(2, 1)), (1, Subspace.full(2))]))

    def test_check_rejects_wrong_filtration(self):
        report = check_rmf(JORDAN2, Filtration.trivial(2), Filtration.trivial(2))
        self.assertFalse(report.passed)
        self.assertIn('nilpotent-shift', [c.name for c in report.failures])


class BruteForceTest(unittest.TestCase):
    def test_against_search(self):
        for name, N, L in instances():
            solutions = brute_force_rmf(N, L)
            self.assertTrue(len(solutions) <= 1, name)
            W = rmf(N, L)
            if W is None:
                self.assertEqual(solutions, [], name)
                continue
            self.assertTrue(check_rmf(N, L, W).passed, name)
            if solutions:
                self.assertEqual(solutions[0], W, name)
