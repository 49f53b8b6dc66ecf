"""
Beurling weights and the weighted coefficient norms built on them.
"""
import math

import numpy as np

from core.exceptions import WeightAxiomViolation

EXPONENTIAL = 'exponential'
POLYNOMIAL = 'polynomial'
WIENER = 'wiener'
CUSTOM = 'custom'


class BeurlingWeight:
    """Even, submultiplicative sequence nu_j >= 1.

    ``exponential(gamma)`` is gamma^|j|, ``polynomial(alpha)`` is
    (1 + |j|)^alpha, ``wiener`` is identically 1 and ``custom`` reads
    nu_0, nu_1, ... from a table.
    """

    def __init__(self, kind, parameter=None, table=None):
        self.kind = kind
        self.parameter = parameter
        self._table = None if table is None else np.asarray(table, float)
        self._growth_rate = None

        if kind == EXPONENTIAL and (parameter is None or parameter < 1):
            raise WeightAxiomViolation('Exponential weights need gamma >= 1.')
        if kind == POLYNOMIAL and (parameter is None or parameter < 0):
            raise WeightAxiomViolation('Polynomial weights need alpha >= 0.')
        if kind == CUSTOM and (self._table is None or self._table.size == 0):
            raise WeightAxiomViolation('Custom weights need a table.')
        if kind not in (EXPONENTIAL, POLYNOMIAL, WIENER, CUSTOM):
            raise WeightAxiomViolation(f'Unknown weight kind: {kind}')

    @classmethod
    def exponential(cls, gamma):
        return cls(EXPONENTIAL, float(gamma))

    @classmethod
    def polynomial(cls, alpha):
        return cls(POLYNOMIAL, float(alpha))

    @classmethod
    def wiener(cls):
        return cls(WIENER)

    @classmethod
    def custom(cls, table):
        return cls(CUSTOM, table=table)

    @classmethod
    def parse(cls, text):
        """Parse ``exp:1.5``, ``poly:2`` or ``wiener``."""
        name, _, value = text.partition(':')
        try:
            if name == 'wiener' and not value:
                return cls.wiener()
            if name == 'exp':
                return cls.exponential(float(value))
            if name == 'poly':
                return cls.polynomial(float(value))
        except ValueError as exc:
            raise WeightAxiomViolation(
                f'Bad weight parameter: {text}') from exc
        raise WeightAxiomViolation(f'Unknown weight: {text}')

    def __call__(self, j):
        j = np.abs(np.asarray(j, dtype=float))
        if self.kind == EXPONENTIAL:
            return self.parameter ** j
        if self.kind == POLYNOMIAL:
            return (1.0 + j) ** self.parameter
        if self.kind == WIENER:
            return np.ones_like(j)
        index = j.astype(int)
        if np.any(index >= self._table.size):
            raise IndexError('Index outside the custom weight table.')
        return self._table[index]

    @property
    def increasing(self):
        """Whether nu is nondecreasing on the nonnegative integers."""
        if self.kind == CUSTOM:
            return bool(np.all(np.diff(self._table) >= 0))
        return True

    def growth_rate(self, horizon=64):
        """A(nu) = inf_k log(nu_k) / k, approximated over 1 <= k <= horizon.

        Exact for the built-in kinds: log(gamma) for exponential weights and
        0 for polynomial and Wiener weights. Custom tables use the minimum
        over the window, which can only overestimate the infimum.
        """
        if self.kind == EXPONENTIAL:
            return math.log(self.parameter)
        if self.kind in (POLYNOMIAL, WIENER):
            return 0.0
        horizon = min(horizon, self._table.size - 1)
        if horizon < 1:
            return 0.0
        if self._growth_rate is None or self._growth_rate[0] != horizon:
            k = np.arange(1, horizon + 1)
            rate = float(np.min(np.log(self(k)) / k))
            self._growth_rate = (horizon, rate)
        return self._growth_rate[1]

    def validate(self, window=64):
        """Check the weight axioms for |j|, |k| <= window.

        nu_j >= 1, evenness and submultiplicativity.
        """
        if self.kind == CUSTOM:
            window = min(window, (self._table.size - 1) // 2)
        j = np.arange(-window, window + 1)
        values = self(j)
        if np.any(values < 1):
            raise WeightAxiomViolation('Weight takes values below 1.')
        if not np.allclose(values, values[::-1], rtol=1e-14, atol=0):
            raise WeightAxiomViolation('Weight is not even.')
        jj, kk = np.meshgrid(j, j)
        products = values[:, None] * values[None, :]
        if np.any(self(jj + kk) > products * (1 + 1e-12)):
            raise WeightAxiomViolation('Weight is not submultiplicative.')
        return True

    def __repr__(self):
        if self.kind in (EXPONENTIAL, POLYNOMIAL):
            return f'BeurlingWeight({self.kind}, {self.parameter:g})'
        return f'BeurlingWeight({self.kind})'


def annulus_radius(nu, horizon=64):
    """Outer radius e^{A(nu)} of the annulus R_nu."""
    return math.exp(nu.growth_rate(horizon))


def beurling_norm(s, nu):
    """||s||_nu = sum nu_k |c_k| over the band."""
    return float(np.sum(nu(s.indices) * np.abs(s.coeffs)))


def beurling_seminorm(s, nu, n):
    """Tail sum over |k| >= n."""
    if n < 0:
        raise ValueError('Seminorm index must be nonnegative.')
    tail = np.abs(s.indices) >= n
    return float(np.sum(nu(s.indices[tail]) * np.abs(s.coeffs[tail])))


def growth_rate(nu, horizon=64):
    return nu.growth_rate(horizon)


def triple_norm(factorization, nu, n=None):
    """max of the (semi)norms of phi+, phi-, 1/phi+ and 1/phi-."""
    factors = (
        factorization.plus,
        factorization.minus,
        factorization.plus_inv,
        factorization.minus_inv,
    )
    if n is None:
        return max(beurling_norm(f, nu) for f in factors)
    return max(beurling_seminorm(f, nu, n) for f in factors)
