import os
import sys
from tempfile import NamedTemporaryFile

import unittest

from hodgefl import util
from hodgefl.weyl import WeylElement


class MemoizedTest(unittest.TestCase):
    def test_cache(self):
        calls = []

        @util.memoized
        def square(n):
            calls.append(n)
            return n * n

        self.assertEqual(square(3), 9)
        self.assertEqual(square(3), 9)
        self.assertEqual(calls, [3])
        self.assertEqual(square.cache, {(3,): 9})

    def test_docstring(self):
        @util.memoized
        def func():
            """product of two monomials"""
            pass

        self.assertEqual(func.__doc__, "product of two monomials")

    def test_unhashable_argument(self):
        calls = []

        @util.memoized
        def first(rows):
            calls.append(rows)
            return rows[0]

        self.assertEqual(first([[1, 2]]), [1, 2])
        self.assertEqual(first([[1, 2]]), [1, 2])
        self.assertEqual(len(calls), 2)

    def test_kwargs_order(self):
        f = util.memoized(lambda a, b: object())
        self.assertIs(f(a=1, b=2), f(b=2, a=1))

    def test_weyl_products_stay_correct(self):
        x = WeylElement.generator('x', 1)
        d = WeylElement.generator('x', 1, True)
        for _ in range(2):
            self.assertEqual(d * x, x * d + 1)


class ConfigFileTest(unittest.TestCase):
    def test_load_config(self):
        with NamedTemporaryFile(mode='w', suffix='rc') as tf:
            fname = tf.name
            tf.write('SEED = 5')
            tf.write(os.linesep)
            tf.write('FORMAT = "json"')
            tf.write(os.linesep)
            tf.flush()
            config = util.load_config(tf.name)
            self.assertEqual(config.SEED, 5)
            self.assertEqual(config.FORMAT, 'json')

        with self.assertRaises(IOError):
            util.load_config(fname)

    def test_no_bytecode_written(self):
        before = sys.dont_write_bytecode
        with util.disable_write_bytecode():
            self.assertTrue(sys.dont_write_bytecode)
        self.assertEqual(sys.dont_write_bytecode, before)

    def test_get_config_attrib(self):
        class Config:
            SEED = 7
        self.assertEqual(util.get_config_attribute(Config, 'SEED', 0), 7)
        self.assertEqual(util.get_config_attribute(Config, 'FORMAT', 'text'), 'text')
        self.assertEqual(util.get_config_attribute(None, 'SEED', 0), 0)


class DefaultTest(unittest.TestCase):
    def test_default(self):
        self.assertEqual(util.default(None, 3), 3)
        self.assertEqual(util.default(0, 3), 0)
        self.assertEqual(util.default('', 3), '')
