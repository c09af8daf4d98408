import json
import os
import sys
from io import StringIO
from tempfile import NamedTemporaryFile

import unittest

from hodgefl.cli import main, parse_matrix, parse_rationals, EXIT_PASS, EXIT_FAIL, EXIT_INPUT
from hodgefl.linalg import IntMatrix
from hodgefl.log import configure_for_tests
from hodgefl.tests.util import data_path


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.stdout, self.stderr = sys.stdout, sys.stderr
        sys.stdout, sys.stderr = StringIO(), StringIO()

    def tearDown(self):
        sys.stdout, sys.stderr = self.stdout, self.stderr
        configure_for_tests()

    def run_main(self, *argv):
        return main(list(argv) + ['-q'])

    def json_output(self):
        return json.loads(sys.stdout.getvalue())['data']


class GkzCommandTest(CliTestCase):
    def test_conic(self):
        self.assertEqual(self.run_main('gkz', '--matrix', '1,1,1;0,1,2', '--format', 'json'),
                         EXIT_PASS)
        data = self.json_output()
        self.assertEqual(data['report'], 'gkz')
        self.assertTrue(data['passed'])
        self.assertEqual(data['info']['system']['boxes'], ['d1*d3 - d2^2'])

    def test_matrix_file(self):
        self.assertEqual(self.run_main('gkz', '--matrix', data_path('twisted_cubic'),
                                       '--beta', '1,1/2', '--points', '3'), EXIT_PASS)
        self.assertIn('result: PASS', sys.stdout.getvalue())

    def test_bad_input(self):
        self.assertEqual(self.run_main('gkz', '--matrix', '1,x'), EXIT_INPUT)
        self.assertEqual(self.run_main('gkz', '--matrix', '0,0'), EXIT_INPUT)
        self.assertEqual(self.run_main('gkz', '--matrix', '1,1', '--beta', '1,2'), EXIT_INPUT)
        self.assertIn('hodgefl:', sys.stderr.getvalue())

    def test_bound(self):
        self.assertEqual(self.run_main('gkz', '--matrix', '1,1,1', '--bound', '2',
                                       '--format', 'json'), EXIT_PASS)
        self.assertEqual(len(self.json_output()['info']['system']['boxes']), 3)

    def test_strict_hypotheses(self):
        self.assertEqual(self.run_main('gkz', '--matrix', '1,2'), EXIT_PASS)
        self.assertEqual(self.run_main('gkz', '--matrix', '1,2', '--strict'), EXIT_FAIL)
        self.assertIn('FAIL hypotheses.homogeneous', sys.stdout.getvalue())
        self.assertIn('hodgefl: 1 of ', sys.stderr.getvalue())
        self.assertIn('hypotheses.homogeneous', sys.stderr.getvalue())

    def test_strict_not_pointed(self):
        self.assertEqual(self.run_main('gkz', '--matrix', '1,-1', '--strict', '--format',
                                       'json'), EXIT_FAIL)
        failed = [c['name'] for c in self.json_output()['checks'] if not c['passed']]
        self.assertEqual(failed, ['hypotheses.homogeneous', 'hypotheses.pointed'])
        self.assertIn('hodgefl: 2 of ', sys.stderr.getvalue())

    def test_strict_conic(self):
        self.assertEqual(self.run_main('gkz', '--matrix', '1,1,1;0,1,2', '--strict'),
                         EXIT_PASS)
        self.assertIn('PASS hypotheses.pointed', sys.stdout.getvalue())


class MonoCommandTest(CliTestCase):
    def test_validate(self):
        self.assertEqual(self.run_main('mono', 'validate', 'czmodel'), EXIT_PASS)
        self.assertEqual(self.run_main('mono', 'validate', data_path('czmodel')), EXIT_PASS)

    def test_broken(self):
        self.assertEqual(self.run_main('mono', 'validate', data_path('broken')), EXIT_FAIL)
        self.assertIn('FAIL hodge-compatibility', sys.stdout.getvalue())

    def test_fl(self):
        self.assertEqual(self.run_main('mono', 'fl', 'czmodel', '--format', 'json'), EXIT_PASS)
        data = self.json_output()
        self.assertEqual(data['info']['module']['window'], ['-2', '0'])
        self.assertEqual(data['info']['supported-at-origin'], {'input': False, 'output': True})

    def test_operations(self):
        for action in ('twist', 'antipode', 'inversion', 'restrict', 'flrestrict',
                       'canvar', 'vfilt'):
            self.assertEqual(self.run_main('mono', action, 'deltamodel'), EXIT_PASS, action)

    def test_rmf(self):
        self.assertEqual(self.run_main('mono', 'rmf', data_path('jordan2'), '--format', 'json'),
                         EXIT_PASS)
        self.assertEqual(self.json_output()['info']['W']['jumps'][0]['index'], -1)
        self.assertEqual(self.run_main('mono', 'rmf', data_path('obstructed')), EXIT_FAIL)

    def test_corpus(self):
        self.assertEqual(self.run_main('mono', 'corpus', '--count', '2', '--seed', '5'),
                         EXIT_PASS)

    def test_bad_input(self):
        self.assertEqual(self.run_main('mono', 'validate'), EXIT_INPUT)
        self.assertEqual(self.run_main('mono', 'validate', data_path('missing')), EXIT_INPUT)
        self.assertEqual(self.run_main('mono', 'rmf', data_path('czmodel')), EXIT_INPUT)
        self.assertEqual(self.run_main('mono', 'restrict', data_path('jordan2')), EXIT_INPUT)

    def test_output_file(self):
        with NamedTemporaryFile(mode='w', suffix='.json', delete=False) as tf:
            fname = tf.name
        try:
            self.assertEqual(self.run_main('mono', 'validate', 'deltamodel', '--format',
                                           'json', '--output', fname), EXIT_PASS)
            with open(fname) as f:
                self.assertTrue(json.load(f)['data']['passed'])
            self.assertEqual(sys.stdout.getvalue(), '')
        finally:
            os.remove(fname)


class MicroCommandTest(CliTestCase):
    def test_phi(self):
        self.assertEqual(self.run_main('micro', 'phi', '--elem', 'y1*delta_g', '--format',
                                       'json'), EXIT_PASS)
        info = self.json_output()['info']
        self.assertEqual(info['image'], '-dt1*delta_f')
        self.assertEqual(info['levels'], {'element': [3, 0], 'image': [3, 2]})

    def test_suites(self):
        self.assertEqual(self.run_main('micro', 'identities', '--samples', '3'), EXIT_PASS)
        self.assertEqual(self.run_main('micro', 'shifts', '--bound', '2'), EXIT_PASS)
        self.assertEqual(self.run_main('micro', 'decompose', '--elem',
                                       'y1*delta_g + dxi*delta_g'), EXIT_PASS)
        self.assertEqual(self.run_main('micro', 'identities', '--n', '1', '--f', 'x1^3',
                                       '--samples', '2'), EXIT_PASS)

    def test_bad_input(self):
        self.assertEqual(self.run_main('micro', 'phi'), EXIT_INPUT)
        self.assertEqual(self.run_main('micro', 'phi', '--elem', 'dt1*delta_f'), EXIT_INPUT)
        self.assertEqual(self.run_main('micro', 'phi', '--elem', 'y1*delta_h'), EXIT_INPUT)
        self.assertEqual(self.run_main('micro', 'shifts', '--r', '3'), EXIT_INPUT)
        self.assertEqual(self.run_main('micro', 'identities', '--samples', '0'), EXIT_INPUT)


class ReproducibilityTest(CliTestCase):
    def output_of(self, *argv):
        sys.stdout = StringIO()
        self.assertEqual(self.run_main(*argv), EXIT_PASS, argv)
        return sys.stdout.getvalue()

    def assertRepeatable(self, *argv):
        first = self.output_of(*argv)
        self.assertTrue(first)
        self.assertEqual(self.output_of(*argv).encode('utf-8'), first.encode('utf-8'))
        return first

    def test_corpus(self):
        for fmt in ('json', 'text'):
            self.assertRepeatable('mono', 'corpus', '--count', '4', '--seed', '3',
                                  '--format', fmt)

    def test_micro(self):
        self.assertRepeatable('micro', 'identities', '--samples', '5', '--seed', '3',
                              '--format', 'json')
        self.assertRepeatable('micro', 'shifts', '--bound', '2', '--seed', '3',
                              '--format', 'json')

    def test_gkz(self):
        self.assertRepeatable('gkz', '--matrix', '1,1,1;0,1,2', '--points', '4',
                              '--seed', '9', '--format', 'json')

    def test_output_files(self):
        names = []
        try:
            for _ in range(2):
                with NamedTemporaryFile(mode='w', suffix='.json', delete=False) as tf:
                    names.append(tf.name)
                self.assertEqual(self.run_main('micro', 'identities', '--samples', '4',
                                               '--seed', '11', '--format', 'json',
                                               '--output', names[-1]), EXIT_PASS)
            contents = []
            for name in names:
                with open(name, 'rb') as f:
                    contents.append(f.read())
            self.assertEqual(contents[0], contents[1])
        finally:
            for name in names:
                os.remove(name)


class ArgumentTest(CliTestCase):
    def test_usage_errors(self):
        with self.assertRaises(SystemExit):
            main(['mono', 'unknown-action'])
        with self.assertRaises(SystemExit):
            main([])

    def test_config_errors(self):
        self.assertEqual(self.run_main('mono', 'validate', 'czmodel', '--seed', '-1'),
                         EXIT_INPUT)
        self.assertEqual(self.run_main('mono', 'validate', 'czmodel', '-c',
                                       data_path('missing')), EXIT_INPUT)

    def test_parsers(self):
        self.assertEqual(parse_matrix('1,2;3,4'), IntMatrix([[1, 2], [3, 4]]))
        self.assertEqual(parse_rationals('0, 1/2'), (0, 0.5))
        self.assertEqual(parse_rationals(' '), ())
