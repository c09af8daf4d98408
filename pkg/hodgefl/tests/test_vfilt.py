from fractions import Fraction

import unittest

from hodgefl.mono import v_filtration, czmodel, deltamodel, external_product


class VFiltrationTest(unittest.TestCase):
    def test_polynomials(self):
        V, report = v_filtration(czmodel())
        self.assertTrue(report.passed, [c.name for c in report.failures])
        self.assertEqual(V.graded_dims(), {1: 1, 2: 1, 3: 1})
        self.assertEqual(V.dim(Fraction(2)), 2)
        self.assertEqual(V.dim(Fraction(-5)), 3)
        self.assertEqual(report.info['surjective-from'], 1)

    def test_delta(self):
        V, report = v_filtration(deltamodel())
        self.assertTrue(report.passed)
        self.assertEqual(V.dim(Fraction(1)), 0)
        self.assertEqual(V.jumps, [-2, -1, 0])
        self.assertEqual(V.to_json()['dims'], {'-2': 3, '-1': 2, '0': 1})

    def test_product(self):
        V, report = v_filtration(external_product(deltamodel(), deltamodel()))
        self.assertTrue(report.passed, [c.name for c in report.failures])
        self.assertEqual(V.dim(Fraction(-2)), 6)

    def test_generator_degrees(self):
        _, report = v_filtration(czmodel())
        degrees = report.checks[0].witness
        self.assertEqual(degrees['z1'], (1, 1))
        self.assertEqual(degrees['dz1'], (-1, -1))
