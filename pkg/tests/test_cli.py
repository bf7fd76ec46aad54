'''
Tests for the command-line front end.

'''

import io
import json
import os
import os.path
import tempfile
import unittest
from unittest import mock

import diamond
from diamond.backend.core import Interpretation3
from diamond.backend.semantics import ResultSet
from diamond.backend.syntax import (
    ParseError,
    parse_functional,
    serialize_functional,
)
from diamond.frontend import diamondcli

DATADIR = os.path.join(os.path.dirname(diamond.__file__), 'data')
EXAMPLE1 = os.path.join(DATADIR, 'example1.lp')
EXAMPLE3_FORMULA = os.path.join(DATADIR, 'example3-formula.lp')
EXAMPLE3_FUNCTIONAL = os.path.join(DATADIR, 'example3-functional.lp')


def run_cli(*args):
    out = io.StringIO()
    status = diamondcli.main(['diamond'] + list(args), out=out)
    return status, out.getvalue()


class TestFormatting(unittest.TestCase):

    def test_format_interpretation(self):

        d = parse_functional(open(EXAMPLE3_FUNCTIONAL).read())

        self.assertEqual(diamondcli.format_interpretation(
            Interpretation3.from_literals(d, ['a'])), 'a')
        self.assertEqual(diamondcli.format_interpretation(
            Interpretation3.all_unknown(d)), '')
        self.assertEqual(diamondcli.format_interpretation(
            Interpretation3.from_literals(d, ['d', '-c', 'b', 'a'])),
            'a b -c d')


class TestRuns(unittest.TestCase):

    def test_grounded_with_transform(self):

        status, output = run_cli('-g', '--transform_pform', EXAMPLE3_FORMULA)

        self.assertEqual(status, 0)
        self.assertEqual(output, '[grounded] 1\na\n')

    def test_all_on_example1(self):

        status, output = run_cli('-all', EXAMPLE1)

        self.assertEqual(status, 0)
        self.assertEqual(output, '\n'.join([
            '[conflict-free] 3',
            'a b',
            'c',
            '',
            '[admissible] 5',
            'a b -c',
            'a b',
            '-a -b c',
            '-a -b',
            '',
            '[complete] 3',
            'a b -c',
            '-a -b c',
            '',
            '[grounded] 1',
            '',
            '[model] 2',
            'a b -c',
            '-a -b c',
            '[stable] 1',
            '-a -b c',
        ]) + '\n')

    def test_flags_keep_output_order(self):

        _, both = run_cli('-sm', '-m', EXAMPLE1)
        self.assertTrue(both.startswith('[model] 2\n'))
        self.assertIn('[stable] 1\n', both)

    def test_long_flag_names(self):
        self.assertEqual(run_cli('--stablemodel', EXAMPLE1),
                         run_cli('-sm', EXAMPLE1))

    def test_stdin_matches_file(self):

        with open(EXAMPLE3_FUNCTIONAL) as infd:
            text = infd.read()

        with mock.patch('sys.stdin', io.StringIO(text)):
            from_stdin = run_cli('-all')

        self.assertEqual(from_stdin, run_cli('-all', EXAMPLE3_FUNCTIONAL))

    def test_stdin_after_double_dash(self):

        with open(EXAMPLE3_FUNCTIONAL) as infd:
            text = infd.read()

        with mock.patch('sys.stdin', io.StringIO(text)):
            from_stdin = run_cli('-g', '--', '-')

        self.assertEqual(from_stdin, (0, '[grounded] 1\na\n'))

    def test_stdin_bytes_are_decoded(self):

        with open(EXAMPLE3_FUNCTIONAL, 'rb') as infd:
            data = infd.read()

        stdin = io.TextIOWrapper(io.BytesIO(data), encoding='utf-8')
        with mock.patch('sys.stdin', stdin):
            from_stdin = run_cli('-g')

        self.assertEqual(from_stdin, (0, '[grounded] 1\na\n'))

    def test_deeply_nested_formula(self):

        depth = 1500
        with tempfile.TemporaryDirectory() as tempdir:

            path = os.path.join(tempdir, 'deep.lp')
            with open(path, 'w') as outfd:
                outfd.write('statement(a). ac(a, %sa%s).\n' %
                            ('neg(' * depth, ')' * depth))

            status, output = run_cli('-g', '-m', path)

        self.assertEqual(status, 0)
        self.assertEqual(output, '[grounded] 1\n\n[model] 2\na\n-a\n')

    def test_dialect_detection(self):
        self.assertEqual(run_cli('-c', EXAMPLE3_FORMULA),
                         run_cli('-c', EXAMPLE3_FUNCTIONAL))

    def test_version(self):
        status, output = run_cli('--version')
        self.assertEqual(status, 0)
        self.assertEqual(output, 'diamond %s\n' % diamond.__version__)

    def test_transform_only(self):

        status, output = run_cli('--transform_pform', EXAMPLE3_FORMULA)

        with open(EXAMPLE3_FUNCTIONAL) as infd:
            expected = serialize_functional(parse_functional(infd.read()))

        self.assertEqual(status, 0)
        self.assertEqual(output, expected)

    def test_trace(self):

        status, output = run_cli('-g', '--trace', EXAMPLE3_FUNCTIONAL)

        self.assertEqual(status, 0)
        self.assertEqual(output,
                         '[grounded] 1\na\n[grounded-trace] 2\n\na\n')

    def test_json_output(self):

        status, output = run_cli('-g', '-m', '--output=json',
                                 EXAMPLE3_FUNCTIONAL)
        document = json.loads(output)

        self.assertEqual(status, 0)
        self.assertEqual(document['version'], diamond.__version__)

        grounded, model = document['results']
        self.assertEqual(model['semantics'], 'model')
        self.assertEqual(model['count'], 2)
        self.assertEqual(model['interpretations'],
                         [['a', 'b', 'c', '-d'], ['a', '-b', '-c', 'd']])
        self.assertEqual(grounded['interpretations'], [['a']])
        self.assertEqual(grounded['undecided'], ['b', 'c', 'd'])

    def test_crosscheck(self):
        status, _ = run_cli('-all', '--crosscheck', EXAMPLE1)
        self.assertEqual(status, 0)

    def test_background_workers(self):
        self.assertEqual(run_cli('-all', '--backgroundworkers=2', EXAMPLE1),
                         run_cli('-all', EXAMPLE1))


class TestPrioritisedRuns(unittest.TestCase):

    # a attacks b, c supports b, and c is preferred to a
    INSTANCE = 's(a). s(b). s(c). lm(a,b). lp(c,b). pref(c,a).\n'

    def setUp(self):
        tempdir = tempfile.TemporaryDirectory()
        self.addCleanup(tempdir.cleanup)
        self.path = os.path.join(tempdir.name, 'prio.lp')
        with open(self.path, 'w') as outfd:
            outfd.write(self.INSTANCE)

    def test_grounded_with_transform(self):

        status, output = run_cli('-g', '--transform_prio', self.path)

        self.assertEqual(status, 0)
        self.assertEqual(output, '[grounded] 1\na b c\n')

    def test_dialect_detection(self):
        self.assertEqual(run_cli('-g', self.path),
                         run_cli('-g', '--transform_prio', self.path))

    def test_transform_only(self):

        status, output = run_cli('--transform_prio', self.path)

        # b is accepted unless a is in without c
        self.assertEqual(status, 0)
        self.assertEqual(output, '\n'.join([
            's(a). s(b). s(c).',
            'l(a,b). l(c,b).',
            'ci(a).',
            'ci(b). co(b,1,a). ci(b,2,c). ci(b,3,a). ci(b,3,c).',
            'ci(c).',
        ]) + '\n')


class TestCrosscheck(unittest.TestCase):

    def test_disagreement_is_an_internal_error(self):

        # Given
        def empty_oracle(adf, kind, cap=None):
            return ResultSet(kind, adf.names, ())

        # When
        with mock.patch.object(diamondcli, 'brute_force', empty_oracle):
            status, output = run_cli('-g', '--crosscheck', EXAMPLE1)

        # Then
        self.assertEqual(status, 3)
        self.assertEqual(output, '')

    def test_oracle_failure_is_logged_and_skipped(self):

        def broken_oracle(adf, kind, cap=None):
            raise RuntimeError('oracle broke')

        with mock.patch.object(diamondcli, 'brute_force', broken_oracle):
            status, output = run_cli('-g', '--crosscheck', EXAMPLE1)

        self.assertEqual(status, 0)
        self.assertEqual(output, '[grounded] 1\n\n')


class TestConfigFile(unittest.TestCase):

    def test_conf_sets_output(self):

        with tempfile.TemporaryDirectory() as tempdir:

            conf = os.path.join(tempdir, 'diamond.conf')
            with open(conf, 'w') as outfd:
                outfd.write('output = "json"\n')

            status, output = run_cli('-g', '--conf=%s' % conf,
                                     EXAMPLE3_FUNCTIONAL)

        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output)['results'][0]['count'], 1)

    def test_command_line_wins(self):

        with tempfile.TemporaryDirectory() as tempdir:

            conf = os.path.join(tempdir, 'diamond.conf')
            with open(conf, 'w') as outfd:
                outfd.write('output = "json"\n')

            status, output = run_cli('-g', '--conf=%s' % conf,
                                     '--output=text', EXAMPLE3_FUNCTIONAL)

        self.assertEqual(status, 0)
        self.assertEqual(output, '[grounded] 1\na\n')


class TestExitCodes(unittest.TestCase):

    def test_nothing_to_do(self):
        status, _ = run_cli(EXAMPLE1)
        self.assertEqual(status, 1)

    def test_conflicting_transforms(self):
        status, _ = run_cli('-g', '--transform_pform', '--transform_prio',
                            EXAMPLE1)
        self.assertEqual(status, 1)

    def test_unknown_option(self):
        status, _ = run_cli('-x', EXAMPLE1)
        self.assertEqual(status, 1)

    def test_missing_file(self):
        status, _ = run_cli('-g', os.path.join(DATADIR, 'no-such-file.lp'))
        self.assertEqual(status, 2)

    def test_parse_error(self):

        with tempfile.TemporaryDirectory() as tempdir:

            path = os.path.join(tempdir, 'broken.lp')
            with open(path, 'w') as outfd:
                outfd.write('s(a).\ns(b) ci(a).\n')

            status, output = run_cli('-g', path)

        self.assertEqual(status, 2)
        self.assertEqual(output, '')

    def test_dialect_mismatch(self):
        status, _ = run_cli('-g', '--transform_prio', EXAMPLE3_FORMULA)
        self.assertEqual(status, 2)

    def test_invalid_utf8(self):

        with tempfile.TemporaryDirectory() as tempdir:

            path = os.path.join(tempdir, 'binary.lp')
            with open(path, 'wb') as outfd:
                outfd.write(b's(a). ci(a).\ns(b). % \xff\xfe\n')

            status, output = run_cli('-g', path)

        self.assertEqual(status, 2)
        self.assertEqual(output, '')

    def test_invalid_utf8_position(self):

        with self.assertRaises(ParseError) as cm:
            diamondcli._decode(b's(a).\ns(b). % \xff\n', 'x.lp')

        self.assertEqual((cm.exception.line, cm.exception.column), (2, 9))


if __name__ == '__main__':
    unittest.main()
