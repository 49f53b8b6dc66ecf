"""
Symbol specifications: the JSON-shaped description of a symbol or weight and
how it turns into a LaurentSeries.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Tuple

from core.closedforms import Example1Family, Example2Family
from core.exceptions import BandAliasingError
from core.series import LaurentSeries, exp_series, multiply

COEFFICIENTS = 'coefficients'
EXAMPLE1 = 'example1'
EXAMPLE2 = 'example2'
EXP_OF = 'exp_of'
PRODUCT = 'product'
SYMBOL_KINDS = (COEFFICIENTS, EXAMPLE1, EXAMPLE2, EXP_OF, PRODUCT)


def _check_band(series, config):
    if series.half_bandwidth > config.band:
        raise BandAliasingError(
            f'Symbol has half bandwidth {series.half_bandwidth}, '
            f'more than the configured band {config.band}.'
        )
    return series


@dataclass(frozen=True)
class CoefficientSymbol:
    """Explicit coefficients, stored as sorted (index, value) pairs."""
    coefficients: Tuple[Tuple[int, complex], ...]

    def build(self, config):
        return _check_band(
            LaurentSeries.from_dict(dict(self.coefficients)), config)

    def to_dict(self):
        return {COEFFICIENTS: {
            str(k): [value.real, value.imag] for k, value in self.coefficients
        }}


@dataclass(frozen=True)
class Example1Symbol:
    a: float

    def build(self, config):
        return Example1Family(self.a).weight()

    def to_dict(self):
        return {EXAMPLE1: {'a': self.a}}


@dataclass(frozen=True)
class Example2Symbol:
    q: float
    terms: Optional[int] = None

    def build(self, config):
        family = Example2Family(self.q, self.terms)
        return _check_band(family.weight(config.compress_tol), config)

    def to_dict(self):
        body = {'q': self.q}
        if self.terms is not None:
            body['terms'] = self.terms
        return {EXAMPLE2: body}


@dataclass(frozen=True)
class ExpSymbol:
    inner: object

    def build(self, config):
        series = exp_series(self.inner.build(config), config.grid)
        return _check_band(series.compress(config.compress_tol), config)

    def to_dict(self):
        return {EXP_OF: self.inner.to_dict()}


@dataclass(frozen=True)
class ProductSymbol:
    factors: Tuple[object, ...]

    def build(self, config):
        series = reduce(
            multiply,
            (factor.build(config) for factor in self.factors),
        )
        return _check_band(series.compress(config.compress_tol), config)

    def to_dict(self):
        return {PRODUCT: [factor.to_dict() for factor in self.factors]}
