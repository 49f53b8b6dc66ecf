"""
Tests for the symbol and configuration serializers.
"""
from django.test import SimpleTestCase

from core.config import RunConfig
from core.symbols import (
    CoefficientSymbol,
    Example1Symbol,
    Example2Symbol,
    ExpSymbol,
    ProductSymbol,
)
from spectral.serializers import (
    ReportRequestSerializer,
    RunConfigSerializer,
    SpectralRequestSerializer,
    SymbolSpecSerializer,
    VerblunskyRequestSerializer,
)


def symbol_serializer(data, band=8):
    return SymbolSpecSerializer(data=data, context={'band': band})


class SymbolSpecSerializerTests(SimpleTestCase):
    """Test parsing symbol specifications."""

    def test_coefficients(self):
        serializer = symbol_serializer(
            {'coefficients': {'1': [0.5, 0], '0': [2, 0], '-1': [0, 1]}})

        self.assertTrue(serializer.is_valid(), serializer.errors)
        spec = serializer.save()

        self.assertEqual(spec, CoefficientSymbol(
            ((-1, 1j), (0, 2 + 0j), (1, 0.5 + 0j))))

    def test_examples(self):
        serializer = symbol_serializer({'example1': {'a': 0.8}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), Example1Symbol(0.8))

        serializer = symbol_serializer({'example2': {'q': 0.25, 'terms': 6}})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), Example2Symbol(0.25, 6))

    def test_nested_kinds(self):
        serializer = symbol_serializer({'product': [
            {'example1': {'a': 0.5}},
            {'exp_of': {'coefficients': {'1': [0.1, 0]}}},
        ]})

        self.assertTrue(serializer.is_valid(), serializer.errors)
        spec = serializer.save()

        self.assertIsInstance(spec, ProductSymbol)
        self.assertIsInstance(spec.factors[1], ExpSymbol)
        self.assertEqual(spec.factors[1].inner,
                         CoefficientSymbol(((1, 0.1 + 0j),)))

    def test_invalid_specs(self):
        samples = [
            {},
            {'coefficients': {'x': [1, 0]}},
            {'coefficients': {'9': [1, 0]}},
            {'coefficients': {'0': [1]}},
            {'example1': {'a': 1.5}},
            {'example2': {'q': 0}},
            {'example1': {'a': 0.5}, 'example2': {'q': 0.5}},
            {'exp_of': {'unknown': 1}},
            {'product': []},
            {'wavelet': {}},
        ]
        for data in samples:
            with self.subTest(data=data):
                self.assertFalse(symbol_serializer(data).is_valid())

    def test_roundtrip_through_to_dict(self):
        spec = ProductSymbol((
            CoefficientSymbol(((0, 1 + 0j), (1, 0.25 + 0j))),
            Example2Symbol(0.5),
        ))

        serializer = symbol_serializer(spec.to_dict())

        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), spec)


class RunConfigSerializerTests(SimpleTestCase):
    """Test per-run configuration overrides."""

    def test_defaults_from_settings(self):
        serializer = RunConfigSerializer(data={})

        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()

        self.assertIsInstance(config, RunConfig)
        self.assertEqual(config.grid, 1024)

    def test_overrides(self):
        serializer = RunConfigSerializer(data={
            'band': 8, 'grid': 32, 'nmax': 5, 'weight': 'exp:1.5',
            'normalize': 'none',
        })

        self.assertTrue(serializer.is_valid(), serializer.errors)
        config = serializer.save()

        self.assertEqual((config.band, config.grid, config.nmax), (8, 32, 5))
        self.assertFalse(config.normalized)

    def test_invalid_configs(self):
        samples = [
            {'band': 8, 'grid': 16},
            {'grid': 1000},
            {'nmin': 6, 'nmax': 5},
            {'weight': 'exp:0.5'},
            {'weight': 'gauss'},
            {'normalize': 'max'},
            {'nmax': 0},
        ]
        for data in samples:
            with self.subTest(data=data):
                self.assertFalse(RunConfigSerializer(data=data).is_valid())


class RequestSerializerTests(SimpleTestCase):
    """Test the API request payloads."""

    def test_symbol_checked_against_config_band(self):
        data = {
            'symbol': {'coefficients': {'6': [1, 0]}},
            'config': {'band': 4, 'grid': 16},
        }

        serializer = SpectralRequestSerializer(data=data)

        self.assertFalse(serializer.is_valid())
        self.assertIn('symbol', serializer.errors)

    def test_validated_objects(self):
        serializer = VerblunskyRequestSerializer(data={
            'symbol': {'example1': {'a': 0.8}},
            'config': {'nmax': 4},
        })

        self.assertTrue(serializer.is_valid(), serializer.errors)

        self.assertEqual(serializer.validated_data['method'], 'both')
        self.assertEqual(serializer.validated_data['config'].nmax, 4)
        self.assertEqual(serializer.validated_data['symbol'],
                         Example1Symbol(0.8))

    def test_probes(self):
        valid = ReportRequestSerializer(data={
            'symbol': {'example1': {'a': 0.8}}, 'probes': ['0,0', 'n-1,n']})
        invalid = ReportRequestSerializer(data={
            'symbol': {'example1': {'a': 0.8}}, 'probes': ['n+1,0']})

        self.assertTrue(valid.is_valid(), valid.errors)
        self.assertFalse(invalid.is_valid())
        self.assertIn('probes', invalid.errors)
