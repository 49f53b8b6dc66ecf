"""
Weights whose Verblunsky coefficients and Szego functions are known in closed
form. They serve as ground truth for both computation paths.
"""
import math
from functools import cached_property

import numpy as np

from core.exceptions import DomainError
from core.series import DEFAULT_COMPRESS_TOL, LaurentSeries

PRODUCT_TAIL_TOL = 1e-12


class Example1Family:
    """w = 1 - a cos(theta), a single nontrivial moment."""

    def __init__(self, a):
        a = float(a)
        if not 0 < a < 1:
            raise DomainError(f'Example 1 needs 0 < a < 1, got {a}')
        self.a = a

    @cached_property
    def mu_plus(self):
        return 1 / self.a + math.sqrt(1 / self.a ** 2 - 1)

    @cached_property
    def mu_minus(self):
        return 1 / self.a - math.sqrt(1 / self.a ** 2 - 1)

    @property
    def residue(self):
        """Res(S, mu_plus) = -(mu_plus - mu_minus)."""
        return -(self.mu_plus - self.mu_minus)

    def alpha(self, n):
        if n < 0:
            raise DomainError(f'Verblunsky index must be nonnegative: {n}')
        return -(self.mu_plus - self.mu_minus) / (
            self.mu_plus ** (n + 2) - self.mu_minus ** (n + 2))

    def Di(self, z):
        """sqrt(a / (2 mu_-)) (1 - z / mu_+), zero at z = mu_+."""
        return math.sqrt(self.a / (2 * self.mu_minus)) * (1 - z / self.mu_plus)

    def weight(self):
        half = self.a / 2
        return LaurentSeries.from_dict({-1: -half, 0: 1.0, 1: -half})


class Example2Family:
    """Rogers-Szego weight, |D_i|^2 for the product over j of
    (1 - q^{j+1})^{1/2} (1 + q^{j+1/2} z).
    """

    def __init__(self, q, terms=None):
        q = float(q)
        if not 0 < q < 1:
            raise DomainError(f'Example 2 needs 0 < q < 1, got {q}')
        if terms is None:
            terms = math.ceil(math.log(PRODUCT_TAIL_TOL) / math.log(q)) + 1
        if terms < 1:
            raise DomainError(f'Product needs at least one factor: {terms}')
        self.q = q
        self.terms = int(terms)

    @property
    def pole(self):
        return -self.q ** -0.5

    @property
    def residue(self):
        """Res(S, -q^{-1/2}) = q^{-1/2}."""
        return self.q ** -0.5

    @property
    def tail_bound(self):
        return self.q ** self.terms

    def alpha(self, n):
        if n < 0:
            raise DomainError(f'Verblunsky index must be nonnegative: {n}')
        return (-1) ** n * self.q ** ((n + 1) / 2)

    def S(self, z):
        root = math.sqrt(self.q)
        return -root * z / (1 + root * z)

    @cached_property
    def _constant(self):
        j = np.arange(self.terms)
        return float(np.prod(np.sqrt(1 - self.q ** (j + 1))))

    @cached_property
    def _polynomial(self):
        coeffs = np.ones(1)
        for j in range(self.terms):
            coeffs = np.convolve(coeffs, [1.0, self.q ** (j + 0.5)])
        return self._constant * coeffs

    def Di(self, z):
        """Truncated product at z, with the tail bound q^terms."""
        z = np.asarray(z, dtype=complex)
        j = np.arange(self.terms)
        factors = 1 + self.q ** (j + 0.5) * z[..., np.newaxis]
        value = self._constant * np.prod(factors, axis=-1)
        if value.ndim == 0:
            value = complex(value)
        return value, self.tail_bound

    def weight(self, compress_tol=DEFAULT_COMPRESS_TOL):
        """|D_i|^2 on the circle as a trigonometric polynomial."""
        d = self._polynomial
        coeffs = np.convolve(d, d[::-1]).astype(complex)
        coeffs = (coeffs + np.conj(coeffs[::-1])) / 2
        return LaurentSeries(coeffs).compress(compress_tol)


def ex1_mu(a):
    family = Example1Family(a)
    return family.mu_plus, family.mu_minus


def ex1_alpha(a, n):
    return Example1Family(a).alpha(n)


def ex1_Di(a, z):
    return Example1Family(a).Di(z)


def ex2_alpha(q, n):
    return Example2Family(q).alpha(n)


def ex2_S(q, z):
    return Example2Family(q).S(z)


def ex2_Di(q, z, terms=None):
    return Example2Family(q, terms).Di(z)
