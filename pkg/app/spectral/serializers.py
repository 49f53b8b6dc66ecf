"""
Serializers for symbol specifications, run configuration and API payloads.
"""
from rest_framework import serializers

from core.config import NORMALIZE_CHOICES, RunConfig
from core.exceptions import BandAliasingError, WeightAxiomViolation
from core.opuc import BO, MOMENTS
from core.series import check_grid
from core.symbols import (
    SYMBOL_KINDS,
    CoefficientSymbol,
    Example1Symbol,
    Example2Symbol,
    ExpSymbol,
    ProductSymbol,
)
from core.toeplitz import Probe
from core.weights import BeurlingWeight

BOTH = 'both'
METHOD_CHOICES = (MOMENTS, BO, BOTH)


class Example1Serializer(serializers.Serializer):
    a = serializers.FloatField()

    def validate_a(self, value):
        if not 0 < value < 1:
            raise serializers.ValidationError('a must lie in (0, 1).')
        return value


class Example2Serializer(serializers.Serializer):
    q = serializers.FloatField()
    terms = serializers.IntegerField(required=False, min_value=1,
                                     max_value=1000)

    def validate_q(self, value):
        if not 0 < value < 1:
            raise serializers.ValidationError('q must lie in (0, 1).')
        return value


class SymbolSpecSerializer(serializers.Serializer):
    """Exactly one of the symbol kinds; exp_of and product nest."""
    coefficients = serializers.DictField(
        child=serializers.ListField(
            child=serializers.FloatField(), min_length=2, max_length=2),
        required=False,
        allow_empty=False,
    )
    example1 = Example1Serializer(required=False)
    example2 = Example2Serializer(required=False)
    exp_of = serializers.DictField(required=False)
    product = serializers.ListField(
        child=serializers.DictField(), required=False, allow_empty=False)

    def _nested(self, data):
        nested = SymbolSpecSerializer(data=data, context=self.context)
        nested.is_valid(raise_exception=True)
        return nested.save()

    def validate_coefficients(self, value):
        band = self.context.get('band')
        pairs = []
        for key, (real, imag) in value.items():
            try:
                index = int(key)
            except ValueError:
                raise serializers.ValidationError(
                    f'Coefficient index {key!r} is not an integer.')
            if band is not None and abs(index) > band:
                raise serializers.ValidationError(
                    f'Index {index} lies outside the band {band}.')
            pairs.append((index, complex(real, imag)))
        return tuple(sorted(pairs))

    def validate_exp_of(self, value):
        return self._nested(value)

    def validate_product(self, value):
        return tuple(self._nested(item) for item in value)

    def validate(self, attrs):
        unknown = set(self.initial_data) - set(SYMBOL_KINDS)
        if unknown:
            raise serializers.ValidationError(
                f'Unknown symbol kinds: {", ".join(sorted(unknown))}')
        if len(attrs) != 1:
            raise serializers.ValidationError(
                f'Give exactly one of: {", ".join(SYMBOL_KINDS)}')
        return attrs

    def create(self, validated_data):
        (kind, value), = validated_data.items()
        if kind == 'coefficients':
            return CoefficientSymbol(value)
        if kind == 'example1':
            return Example1Symbol(**value)
        if kind == 'example2':
            return Example2Symbol(**value)
        if kind == 'exp_of':
            return ExpSymbol(value)
        return ProductSymbol(value)


class RunConfigSerializer(serializers.Serializer):
    """Per-run overrides of settings.SPECTRAL."""
    band = serializers.IntegerField(required=False, min_value=0)
    grid = serializers.IntegerField(required=False, min_value=2)
    bo_size = serializers.IntegerField(required=False, min_value=1)
    nmin = serializers.IntegerField(required=False, min_value=0)
    nmax = serializers.IntegerField(required=False, min_value=1)
    weight = serializers.CharField(required=False)
    normalize = serializers.ChoiceField(choices=NORMALIZE_CHOICES,
                                       required=False)
    vanish_tol = serializers.FloatField(required=False, min_value=0)
    solve_tol = serializers.FloatField(required=False, min_value=0)

    def validate_weight(self, value):
        try:
            BeurlingWeight.parse(value)
        except WeightAxiomViolation as exc:
            raise serializers.ValidationError(str(exc))
        return value

    def validate(self, attrs):
        config = RunConfig.from_settings(**attrs)
        try:
            check_grid(config.grid, config.band)
        except BandAliasingError as exc:
            raise serializers.ValidationError({'grid': str(exc)})
        if config.nmin > config.nmax:
            raise serializers.ValidationError(
                {'nmin': 'nmin must not exceed nmax.'})
        return attrs

    def create(self, validated_data):
        return RunConfig.from_settings(**validated_data)


class SpectralRequestSerializer(serializers.Serializer):
    """A symbol together with optional run settings."""
    symbol = serializers.DictField()
    config = RunConfigSerializer(required=False)

    def validate(self, attrs):
        config = RunConfig.from_settings(**attrs.get('config', {}))
        symbol = SymbolSpecSerializer(
            data=attrs['symbol'], context={'band': config.band})
        if not symbol.is_valid():
            raise serializers.ValidationError({'symbol': symbol.errors})
        attrs['config'] = config
        attrs['symbol'] = symbol.save()
        return attrs


class VerblunskyRequestSerializer(SpectralRequestSerializer):
    method = serializers.ChoiceField(choices=METHOD_CHOICES, default=BOTH)


class ReportRequestSerializer(SpectralRequestSerializer):
    pole = serializers.FloatField(required=False)
    probes = serializers.ListField(
        child=serializers.CharField(), required=False, allow_empty=False)

    def validate_probes(self, value):
        for text in value:
            try:
                Probe.parse(text)
            except ValueError as exc:
                raise serializers.ValidationError(str(exc))
        return value


class TableSerializer(serializers.Serializer):
    """Rows of a report keyed by column name, plus the summary values."""
    header = serializers.ListField(child=serializers.CharField())
    rows = serializers.ListField(child=serializers.DictField())
    summary = serializers.DictField()
    footer = serializers.CharField(allow_null=True)


class FactorizationSerializer(serializers.Serializer):
    plus = serializers.DictField()
    minus = serializers.DictField()
    plus_inv = serializers.DictField()
    minus_inv = serializers.DictField()
    log_symbol = serializers.DictField()
    winding = serializers.IntegerField()
    reconstruction_error = serializers.FloatField()


class ErrorSerializer(serializers.Serializer):
    error = serializers.CharField()
    detail = serializers.CharField()
