import json
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, settings

from ordinals.cnf import cmp
from ordinals.strategies import ordinals, sample_ordinals

from .services import RELATIONS, OrdLabService

GOLDEN = Path(__file__).resolve().parent / 'golden'


def ordlab(*args):
    out = StringIO()
    call_command('ordlab', *args, stdout=out)
    return out.getvalue()


class GoldenDocumentTests(SimpleTestCase):

    def assertGolden(self, name, *args):
        document = json.loads(ordlab(*args, '--json'))
        expected = json.loads((GOLDEN / name).read_text(encoding='utf-8'))
        self.assertEqual(document, expected)
        self.assertEqual(list(document), ['command', 'inputs', 'result', 'witnesses'])

    def test_eval(self):
        self.assertGolden('eval.json', 'eval', 'w^w + w*2 + 3')

    def test_fix(self):
        self.assertGolden('fix.json', 'fix', '--fn', 'f', '--below', 'w^w^2', '--count', '2')

    def test_embed_j(self):
        self.assertGolden('embed_j.json', 'embed-j', '--order', 'fin(1)', '--sequence', '0')


class ArithmeticCommandTests(SimpleTestCase):

    def test_eval(self):
        self.assertEqual(ordlab('eval', 'w^(w+1)').strip(), 'w^(w+1)')
        self.assertEqual(ordlab('eval', '2^w').strip(), 'w')

    def test_functions(self):
        self.assertEqual(ordlab('f', 'w^w').strip(), 'w^w')
        self.assertEqual(ordlab('f', '4').strip(), '11')
        self.assertEqual(ordlab('g', 'w+1').strip(), 'w*2 + 1')
        self.assertEqual(ordlab('fprime', '1').strip(), 'w^w')
        self.assertEqual(ordlab('gprime', '0').strip(), 'w')
        self.assertTrue(OrdLabService.apply_function('f', 'w^w').result['fixed_point'])

    def test_fix(self):
        self.assertEqual(ordlab('fix', '--fn', 'f', '--below', 'w^w^2', '--count', '2').split(), ['w', 'w^w'])
        self.assertEqual(ordlab('fix', '--fn', 'g', '--below', 'w^3', '--count', '5').split(), ['w', 'w^2'])

    def test_cmp(self):
        self.assertEqual(ordlab('cmp', 'w+1', 'w').strip(), 'w + 1 > w')
        self.assertEqual(ordlab('cmp', '1+w', 'w').strip(), 'w = w')

    @given(ordinals, ordinals)
    @settings(max_examples=100, deadline=None)
    def test_cmp_agrees_with_the_library(self, a, b):
        result = OrdLabService.compare(str(a), str(b))
        self.assertEqual(result.result['relation'], RELATIONS[cmp(a, b)])

    def test_printed_ordinals_read_back(self):
        for a in sample_ordinals(200, seed=3):
            self.assertEqual(OrdLabService.evaluate(str(a)).result['value'], str(a))

    def test_parse_errors_exit_with_two(self):
        with self.assertRaises(CommandError) as caught:
            ordlab('eval', 'w +')
        self.assertEqual(caught.exception.returncode, 2)
        self.assertIn('position', str(caught.exception))
        with self.assertRaises(CommandError) as caught:
            ordlab('eval', '3^w')
        self.assertEqual(caught.exception.returncode, 2)

    def test_oversized_powers_exit_with_two(self):
        for expression in ('2^20000', '(w+1)^4294967296'):
            with self.subTest(expression=expression):
                with self.assertRaises(CommandError) as caught:
                    ordlab('eval', expression)
                self.assertEqual(caught.exception.returncode, 2)
        self.assertEqual(len(ordlab('eval', '2^4096').strip()), 1234)

    def test_usage_errors(self):
        with self.assertRaises(CommandError):
            ordlab('integrate', 'w')
        with self.assertRaises(CommandError):
            ordlab('fix', '--fn', 'h', '--below', 'w')


class DilatorCommandTests(SimpleTestCase):

    def test_dil_check_passes(self):
        output = ordlab('dil-check', 'F', '--size', '3', '--elements', '20')
        self.assertIn('0 violations', output)
        self.assertIn('PASS', output)

    def test_dil_check_upper_derivative(self):
        document = json.loads(ordlab('dil-check', 'E', '--size', '2', '--elements', '15', '--upper', '--json'))
        self.assertTrue(document['result']['passed'])
        self.assertEqual(len(document['result']['reports']), 3)
        self.assertEqual(document['witnesses'], [])

    def test_dil_check_failure_exits_with_one(self):
        out = StringIO()
        with self.assertRaises(SystemExit) as caught:
            call_command('ordlab', 'dil-check', 'hollow_F', '--size', '2', '--elements', '10', '--json', stdout=out)
        self.assertEqual(caught.exception.code, 1)
        document = json.loads(out.getvalue())
        self.assertFalse(document['result']['passed'])
        self.assertIn('support-condition', {w['kind'] for w in document['witnesses']})

    def test_unknown_dilator(self):
        with self.assertRaises(CommandError) as caught:
            ordlab('dil-check', 'G')
        self.assertEqual(caught.exception.returncode, 2)

    def test_dil_extend(self):
        lines = ordlab('dil-extend', 'F', '--order', 'fin(2)', '--count', '10').splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[0].startswith('0: <{}, bot>'))
        document = json.loads(ordlab('dil-extend', 'E', '--order', 'ordinal(w)', '--count', '5', '--json'))
        self.assertEqual(len(document['result']['elements']), 5)
        self.assertEqual(document['result']['elements'][0]['denotes'], '0')

    def test_export_t0(self):
        lines = ordlab('export-T0', 'F', '--size', '2').splitlines()
        self.assertEqual(lines, [
            '(0, bot)',
            '(1, bot)', '(1, <0,bot>)',
            '(2, bot)', '(2, <0,bot>)', '(2, <1,bot>)', '(2, <1,0>)',
        ])

    def test_embed_j(self):
        output = ordlab('embed-j', '--order', 'ordinal(w^2)', '--sequence', 'w+1, w, 3')
        self.assertIn('J<w + 1,w,3>', output)
        document = json.loads(ordlab('embed-j', '--order', 'fin(4)', '--sequence', '3,2', '--json'))
        self.assertEqual(document['result']['defaults_used'], 0)
        self.assertEqual(len(document['result']['steps']), 3)

    def test_embed_j_rejects_bad_sequences(self):
        for sequence in ('0,1', '2,2', '7'):
            with self.assertRaises(CommandError) as caught:
                ordlab('embed-j', '--order', 'fin(4)', '--sequence', sequence)
            self.assertEqual(caught.exception.returncode, 2)


class SearchCommandTests(SimpleTestCase):

    def test_integers(self):
        document = json.loads(ordlab('wf-search', '--order', 'integers', '--budget', '20', '--json'))
        self.assertTrue(document['result']['found'])
        self.assertEqual(len(document['result']['chain']), 20)
        self.assertEqual(document['inputs']['strategy'], 'greedy-min-above')

    def test_well_order(self):
        output = ordlab('wf-search', '--order', 'ordinal(w^2)', '--budget', '20', '--strategy', 'random', '--seed', '1')
        self.assertIn('no descending chain', output)

    def test_bad_order(self):
        with self.assertRaises(CommandError) as caught:
            ordlab('wf-search', '--order', 'klein(2)')
        self.assertEqual(caught.exception.returncode, 2)
