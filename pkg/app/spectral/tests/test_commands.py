"""
Test the spectral management commands.
"""
import json
import os
import tempfile
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from core.exceptions import SingularSection
from core.gi import GIBound

EXAMPLE1 = {'example1': {'a': 0.8}}
EXAMPLE2 = {'example2': {'q': 0.25}}


class CommandTestCase(SimpleTestCase):
    """Runs commands against symbol files in a temporary directory."""

    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.directory = directory.name

    def symbol_file(self, data, name='symbol.json'):
        path = os.path.join(self.directory, name)
        with open(path, 'w', encoding='utf-8') as handle:
            json.dump(data, handle)
        return path

    def run_command(self, name, *args, **options):
        out = StringIO()
        err = StringIO()
        call_command(name, *args, stdout=out, stderr=err, **options)
        return out.getvalue(), err.getvalue()


class SymbolCommandTests(CommandTestCase):
    """Test winding, factorize and invert."""

    def test_winding(self):
        path = self.symbol_file({'coefficients': {'1': [2, 0], '2': [1, 0]}})

        out, _ = self.run_command('winding', symbol=path)

        self.assertEqual(out, '1\n')

    def test_factorize(self):
        out, err = self.run_command('factorize',
                                    symbol=self.symbol_file(EXAMPLE1))

        data = json.loads(out)
        self.assertEqual(data['minus']['0'], [1.0, 0.0])
        self.assertAlmostEqual(data['plus']['0'][0], 0.8)
        self.assertAlmostEqual(data['minus']['-1'][0], -0.5)
        self.assertEqual(data['winding'], 0)
        self.assertLess(data['reconstruction_error'], 1e-13)
        self.assertIn('Reconstruction error', err)

    def test_factorize_keeps_factors_within_band(self):
        out, _ = self.run_command('factorize',
                                  symbol=self.symbol_file(EXAMPLE1), band=4)

        data = json.loads(out)
        for key in ('plus', 'minus', 'plus_inv', 'minus_inv'):
            with self.subTest(factor=key):
                self.assertLessEqual(max(abs(int(k)) for k in data[key]), 4)
        self.assertAlmostEqual(data['plus_inv']['4'][0], 1.25 * 0.5 ** 4)

    def test_factorize_to_file(self):
        target = os.path.join(self.directory, 'factors.json')

        out, _ = self.run_command('factorize',
                                  symbol=self.symbol_file(EXAMPLE1),
                                  out=target)

        with open(target, encoding='utf-8') as handle:
            self.assertIn('plus_inv', json.load(handle))
        self.assertIn('Reconstruction error', out)

    def test_winding_symbol_exit_code(self):
        path = self.symbol_file({'coefficients': {'1': [1, 0]}})

        with self.assertRaises(CommandError) as ctx:
            self.run_command('factorize', symbol=path)

        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('NonzeroWinding', str(ctx.exception))

    def test_vanishing_symbol_exit_code(self):
        path = self.symbol_file({'coefficients': {'0': [1, 0], '1': [1, 0]}})

        with self.assertRaises(CommandError) as ctx:
            self.run_command('factorize', symbol=path)

        self.assertEqual(ctx.exception.returncode, 3)

    def test_invert(self):
        path = self.symbol_file(
            {'coefficients': {'-1': [1, 0], '0': [2, 0], '1': [1, 0]}})

        out, _ = self.run_command('invert', symbol=path, order=1)

        lines = out.splitlines()
        self.assertEqual(lines[0], 'j,k,re,im')
        self.assertEqual(len(lines), 5)
        j, k, re, im = lines[2].split(',')
        self.assertEqual((j, k), ('0', '1'))
        self.assertAlmostEqual(float(re), -1 / 3)

    def test_singular_section_exit_code(self):
        path = self.symbol_file({'coefficients': {'1': [1, 0]}})

        with self.assertRaises(CommandError) as ctx:
            self.run_command('invert', symbol=path, order=0)

        self.assertEqual(ctx.exception.returncode, 4)

    def test_bad_input(self):
        with self.assertRaises(CommandError):
            self.run_command('winding',
                             symbol=os.path.join(self.directory, 'none'))
        with self.assertRaises(CommandError):
            self.run_command('winding', symbol=self.symbol_file({'x': 1}))
        with self.assertRaises(CommandError):
            self.run_command('winding', symbol=self.symbol_file(EXAMPLE1),
                             grid=1000)
        with self.assertRaises(CommandError):
            self.run_command('winding', symbol=self.symbol_file(EXAMPLE1),
                             weight='exp:0.1')


class Theorem1CommandTests(CommandTestCase):
    """Test the finite-section decay command."""

    def test_header_and_pass(self):
        out, err = self.run_command('theorem1',
                                    symbol=self.symbol_file(EXAMPLE1),
                                    nmin=4, nmax=12)

        lines = out.splitlines()
        self.assertEqual(lines[0], 'n,j,k,error,bound,c_calibrated,pass')
        self.assertEqual(len(lines), 1 + 2 * 9)
        self.assertTrue(all(line.endswith(',true') for line in lines[1:]))
        self.assertIn('passed: true', err)

    def test_probes(self):
        out, _ = self.run_command('theorem1',
                                  symbol=self.symbol_file(EXAMPLE1),
                                  nmin=4, nmax=6, probes=['n-1,n'])

        rows = [line.split(',') for line in out.splitlines()[1:]]
        self.assertEqual([row[:3] for row in rows],
                         [['4', '3', '4'], ['5', '4', '5'], ['6', '5', '6']])

    def test_bad_probe(self):
        with self.assertRaises(CommandError):
            self.run_command('theorem1', symbol=self.symbol_file(EXAMPLE1),
                             probes=['n+2,0'])

    @patch('core.toeplitz.invert_section')
    def test_singular_exit_code(self, patched_invert):
        patched_invert.side_effect = SingularSection('forced')

        with self.assertRaises(CommandError) as ctx:
            self.run_command('theorem1', symbol=self.symbol_file(EXAMPLE1),
                             nmin=1, nmax=3)

        self.assertEqual(ctx.exception.returncode, 4)


class VerblunskyCommandTests(CommandTestCase):
    """Test the Verblunsky coefficient commands."""

    def test_both_methods(self):
        out, err = self.run_command('verblunsky',
                                    symbol=self.symbol_file(EXAMPLE1),
                                    nmax=5)

        lines = out.splitlines()
        self.assertEqual(lines[0], 'n,alpha_re,alpha_im,method,diag,delta')
        self.assertEqual(len(lines), 11)
        n, alpha_re, _, method, _, delta = lines[1].split(',')
        self.assertEqual((n, method), ('1', 'moments'))
        self.assertAlmostEqual(float(alpha_re), -0.4)
        self.assertLess(float(delta), 1e-10)
        self.assertEqual(lines[2].split(',')[3], 'bo')
        self.assertIn('max_delta:', err)
        self.assertIn('n0: 1', err)

    def test_single_method(self):
        out, _ = self.run_command('verblunsky',
                                  symbol=self.symbol_file(EXAMPLE2),
                                  nmax=4, method='bo')

        lines = out.splitlines()
        self.assertEqual(lines[0], 'n,alpha_re,alpha_im,method,diag')
        self.assertEqual(len(lines), 5)
        self.assertAlmostEqual(float(lines[2].split(',')[1]), -0.25)

    def test_identity_weight(self):
        path = self.symbol_file({'coefficients': {'0': [1, 0]}})

        out, _ = self.run_command('verblunsky', symbol=path, nmax=3)

        for line in out.splitlines()[1:]:
            self.assertEqual(float(line.split(',')[1]), 0)

    @override_settings(SPECTRAL={'DELTA_TOL': -1.0})
    def test_disagreement_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('verblunsky', symbol=self.symbol_file(EXAMPLE1),
                             nmax=3)

        self.assertEqual(ctx.exception.returncode, 5)

    def test_example1(self):
        out, _ = self.run_command('example1', nmax=6)

        lines = out.splitlines()
        self.assertEqual(lines[0],
                         'n,alpha_closed,alpha_moments,alpha_bo,minus_residue')
        for line in lines[1:]:
            _, closed, moments, bo, scaled = map(float, line.split(','))
            self.assertAlmostEqual(closed, moments, places=12)
            self.assertAlmostEqual(closed, bo, places=12)
            self.assertGreater(scaled, 1.5)
        self.assertAlmostEqual(scaled, 1.5, places=3)

    def test_example2(self):
        out, err = self.run_command('example2', nmax=8, q=0.25)

        for line in out.splitlines()[1:]:
            residue = float(line.split(',')[4])
            self.assertAlmostEqual(residue, 2, places=9)
        self.assertIn('pole: -2', err)

    def test_output_is_deterministic(self):
        first = os.path.join(self.directory, 'first.csv')
        second = os.path.join(self.directory, 'second.csv')

        self.run_command('example1', nmax=8, out=first)
        self.run_command('example1', nmax=8, out=second)

        with open(first, 'rb') as a, open(second, 'rb') as b:
            self.assertEqual(a.read(), b.read())


class ReportCommandTests(CommandTestCase):
    """Test the baxter, born and gi commands."""

    def test_baxter_identity(self):
        path = self.symbol_file({'coefficients': {'0': [1, 0]}})

        out, _ = self.run_command('baxter', symbol=path, nmax=5)

        for line in out.splitlines()[1:]:
            self.assertEqual(float(line.split(',')[-1]), 0)

    def test_baxter(self):
        out, err = self.run_command('baxter',
                                    symbol=self.symbol_file(EXAMPLE1),
                                    nmax=10, weight='exp:1.5')

        self.assertEqual(out.splitlines()[0],
                         'n,phi_zero_abs,nu,increment,partial_sum')
        self.assertIn('in_class: true', err)

    def test_born_with_pole(self):
        out, _ = self.run_command('born', symbol=self.symbol_file(EXAMPLE2),
                                  nmax=10, pole=-2.0)

        lines = out.splitlines()
        self.assertTrue(lines[0].endswith('residue_re,residue_im'))
        self.assertAlmostEqual(float(lines[10].split(',')[-2]), 2, places=6)

    def test_gi_pass(self):
        out, _ = self.run_command('gi', symbol=self.symbol_file(EXAMPLE1),
                                  nmax=12)

        self.assertEqual(out.splitlines()[-1], 'PASS')

    @patch('core.gi.rho', return_value=1.0)
    def test_gi_no_contraction(self, patched_rho):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('gi', symbol=self.symbol_file(EXAMPLE1), nmax=4)

        self.assertEqual(ctx.exception.returncode, 6)

    @patch('spectral.tables.gi_bound_report')
    def test_gi_fail(self, patched_report):
        patched_report.return_value = GIBound(
            n0=1, rho=0.5, lhs=2.0, rhs=0.5 / 0.75, truncated_at=4)

        with self.assertRaises(CommandError) as ctx:
            self.run_command('gi', symbol=self.symbol_file(EXAMPLE1), nmax=4)

        self.assertEqual(ctx.exception.returncode, 1)
