from fractions import Fraction

import numpy as np
import unittest

from hodgefl.weyl import (WeylElement, Variable, WeylError, ParseError, parse_element,
                          format_element, commutator, power, fl_automorphism, v_degree,
                          theta, s_operator, euler_operator)
from hodgefl.tests.util import random_word, word_element, naive_product


def p(text):
    return parse_element(text)


class ArithmeticTest(unittest.TestCase):
    def test_canonical_commutation(self):
        self.assertEqual(str(p('dx1*x1')), 'x1*dx1 + 1')
        self.assertEqual(commutator(p('dx1'), p('x1')), 1)
        self.assertEqual(commutator(p('dx1'), p('x2')), 0)
        self.assertEqual(commutator(p('dz1'), p('x1')), 0)
        self.assertEqual(commutator(p('x1'), p('z2')), 0)

    def test_powers(self):
        self.assertEqual(str(power(p('x1*dx1'), 2)), 'x1^2*dx1^2 + x1*dx1')
        self.assertEqual(power(p('dx1'), 0), 1)
        self.assertEqual(p('x1')**3, p('x1*x1*x1'))
        with self.assertRaises(WeylError):
            power(p('x1'), -1)

    def test_leibniz(self):
        self.assertEqual(commutator(p('dx1^2'), p('x1')), p('2*dx1'))
        self.assertEqual(commutator(theta('z', 1), p('z1^3')), p('3*z1^3'))
        self.assertEqual(commutator(p('dx1'), p('x1^3')), p('3*x1^2'))

    def test_against_word_rewriting(self):
        rng = np.random.RandomState(17)
        for _ in range(40):
            word = random_word(rng, int(rng.randint(1, 7)))
            self.assertEqual(word_element(word), naive_product(word), word)

    def test_associativity(self):
        rng = np.random.RandomState(2)
        for _ in range(10):
            a, b, c = [word_element(random_word(rng, 3)) + int(rng.randint(-2, 3))
                       for _ in range(3)]
            self.assertEqual((a * b) * c, a * (b * c))

    def test_rational_coefficients(self):
        e = p('1/2*x1') * 4
        self.assertEqual(e, p('2*x1'))
        self.assertEqual(e - e, WeylElement.zero())
        self.assertTrue((e - e).is_zero())
        self.assertEqual(3 - p('x1'), p('-x1 + 3'))

    def test_groups(self):
        self.assertEqual(p('x1*dz2 + t1').groups(), set(['x', 'z', 't']))
        self.assertTrue(p('x1*t2').is_derivation_free())
        self.assertTrue(p('d1*d2 - dm1').is_position_free())

    def test_variable(self):
        self.assertEqual(str(Variable('l', 'derivation', 2)), 'd2')
        self.assertEqual(str(Variable('xi', 'derivation')), 'dxi')
        for args in (('q',), ('x', 'other'), ('x', 'position', 0)):
            with self.assertRaises(WeylError):
                Variable(*args)


class GrammarTest(unittest.TestCase):
    def test_round_trip(self):
        for text in ('x1*dx1 + 1', 'd1*d3 - d2^2', '-1/2*x1^2*dz1 + y1*dy1 - 7',
                     'xi^2*dxi - m1', 'l1*d1 + l2*d2 - 1/2', '0'):
            self.assertEqual(format_element(p(text)), text)

    def test_parentheses(self):
        self.assertEqual(p('(x1 + 1)*(x1 - 1)'), p('x1^2 - 1'))
        self.assertEqual(p('-(x1 + dx1)'), p('-x1 - dx1'))

    def test_short_lambda_derivation(self):
        self.assertEqual(p('d1'), p('dl1'))
        self.assertEqual(str(p('dl2*l2')), 'l2*d2 + 1')

    def test_errors(self):
        for text in ('x0', 'q1', 'x1 +', 'x1^1/2', '', 'x1 $ x2', '(x1', 'x1)', 'd0',
                     'x1^x2'):
            with self.assertRaises(ParseError):
                p(text)


class FourierAutomorphismTest(unittest.TestCase):
    def test_euler_operator(self):
        image = fl_automorphism(theta('z', 1), 'z', 'y')
        self.assertEqual(image, p('-y1*dy1 - 1'))
        self.assertEqual(fl_automorphism(image, 'y', 'z', inverse=True), theta('z', 1))

    def test_generators(self):
        self.assertEqual(fl_automorphism(p('z1'), 'z', 'y'), p('dy1'))
        self.assertEqual(fl_automorphism(p('dz1'), 'z', 'y'), p('-y1'))
        self.assertEqual(fl_automorphism(p('l2'), 'l', 'm', inverse=True), p('-dm2'))
        self.assertEqual(fl_automorphism(p('d2'), 'l', 'm', inverse=True), p('m2'))

    def test_other_groups_untouched(self):
        self.assertEqual(fl_automorphism(p('x1*dx1*z1'), 'z', 'y'), p('x1*dx1*dy1'))

    def test_is_homomorphism(self):
        rng = np.random.RandomState(4)
        for _ in range(10):
            a = word_element(random_word(rng, 3, groups=('z', 'x')))
            b = word_element(random_word(rng, 3, groups=('z', 'x')))
            image = lambda e: fl_automorphism(e, 'z', 'y')
            self.assertEqual(image(a * b), image(a) * image(b))
            self.assertEqual(fl_automorphism(image(a), 'y', 'z', inverse=True), a)

    def test_refusals(self):
        with self.assertRaises(WeylError):
            fl_automorphism(p('z1'), 'z', 'z')
        with self.assertRaises(WeylError):
            fl_automorphism(p('z1*y1'), 'z', 'y')
        with self.assertRaises(WeylError):
            fl_automorphism(p('z1'), 'z', 'w')

    def test_mixed_groups_refused(self):
        for text in ('z1*t1', 'l1*z1', 'z1 + xi', 'dt1*dz2', 'x1*m1'):
            with self.assertRaises(WeylError) as cm:
                fl_automorphism(p(text), 'z', 'y')
            self.assertIn("'z'", str(cm.exception))
        with self.assertRaises(WeylError):
            fl_automorphism(p('x1*l1'), 'l', 'x')
        with self.assertRaises(WeylError):
            fl_automorphism(p('x1'), 'x', 'y')
        # spectators alone are fine
        self.assertEqual(fl_automorphism(p('x1*dx2 + 2'), 'z', 'y'), p('x1*dx2 + 2'))


class DegreeTest(unittest.TestCase):
    def test_v_degree(self):
        self.assertEqual(v_degree(p('t1'), 't'), (1, 1))
        self.assertEqual(v_degree(p('dt1'), 't'), (-1, -1))
        self.assertEqual(v_degree(p('t1*dt2 + 1'), 't'), (0, 0))
        self.assertEqual(v_degree(p('t1^2 + dt1 + x1'), 't'), (-1, 2))
        with self.assertRaises(WeylError):
            v_degree(WeylElement.zero(), 't')

    def test_theta_and_s(self):
        r = 2
        self.assertEqual(theta('z', r), p('z1*dz1 + z2*dz2'))
        self.assertEqual(s_operator('z', r), -theta('z', r) - r)
        z1 = p('z1')
        self.assertEqual(commutator(theta('z', r), z1), z1)

    def test_euler_operator(self):
        E = euler_operator('l', (1, 2), Fraction(1, 3))
        self.assertEqual(E, p('l1*d1 + 2*l2*d2 - 1/3'))
        self.assertEqual(euler_operator('l', (0, 0)), 0)

    def test_evaluate_symbol(self):
        box = p('d1*d3 - d2^2')
        self.assertEqual(box.evaluate_symbol('l', [2, 3, Fraction(9, 2)]), 0)
        self.assertEqual(p('d1 + 1').evaluate_symbol('l', [5]), 6)
        with self.assertRaises(WeylError):
            p('l1*d1').evaluate_symbol('l', [1])
