"""
The H^{1/2} side of the Szego picture: the norm, the map B(f) = exp(I f) and
the bound (sum_{n >= n0} n |alpha_{n-1}|^2)^{1/2} <= rho / (1 - rho^2).
"""
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional

import numpy as np

from core.bo import DEFAULT_SIZE, fixed_point, prepare_reflection
from core.exceptions import NoContraction, SymmetryViolation
from core.series import (
    DEFAULT_GRID,
    DEFAULT_VANISH_TOL,
    LaurentSeries,
    exp_series,
    log_series,
)

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
DEFAULT_RHO_MARGIN = 1e-9


class SobolevHalfElement:
    """Real-valued function on the circle, held as Laurent coefficients."""

    def __init__(self, series, tol=SYMMETRY_TOL):
        if not series.is_conjugate_symmetric(tol):
            raise SymmetryViolation(
                'Coefficients are not conjugate symmetric; '
                'the function is not real on the circle.'
            )
        self.series = series

    @cached_property
    def norm(self):
        """(sum (1 + |l|) |f_l|^2)^{1/2}."""
        s = self.series
        return float(np.sqrt(np.sum((1 + np.abs(s.indices))
                                    * np.abs(s.coeffs) ** 2)))


def _element(f):
    if isinstance(f, SobolevHalfElement):
        return f
    return SobolevHalfElement(f)


def h_half_norm(f):
    return _element(f).norm


def born_map(f, size=DEFAULT_GRID):
    """B(f) = exp(-sum_{k>0} f_k z^k + sum_{k<0} f_k z^k)."""
    series = _element(f).series
    signs = -np.sign(series.indices)
    return exp_series(LaurentSeries(series.coeffs * signs), size)


def rho(r, n0):
    """(sum_{n >= n0} (n + 1) |r_n|^2)^{1/2}."""
    if n0 < 0:
        raise ValueError('n0 must be nonnegative.')
    n = np.arange(n0, max(r.half_bandwidth, n0) + 1)
    return float(np.sqrt(np.sum((n + 1) * np.abs(r.take(n)) ** 2)))


@dataclass
class GIRow:
    n: int
    alpha: complex
    intermediate: float
    intermediate_bound: float
    ibragimov4: float
    ibragimov4_bound: float

    @property
    def passed(self):
        return (self.intermediate <= self.intermediate_bound + 1e-12
                and self.ibragimov4 <= self.ibragimov4_bound + 1e-10)


@dataclass
class GIBound:
    """lhs is truncated at truncated_at; every dropped summand is >= 0."""
    n0: int
    rho: float
    lhs: float
    rhs: float
    rows: List[GIRow] = field(default_factory=list)
    truncated_at: Optional[int] = None

    @property
    def passed(self):
        return (self.lhs <= self.rhs + 1e-12
                and all(row.passed for row in self.rows))


def minimal_n0(r, n_max, margin=DEFAULT_RHO_MARGIN):
    for n0 in range(n_max + 1):
        if rho(r, n0) < 1 - margin:
            return n0
    raise NoContraction(
        f'rho(n0) >= 1 for every n0 <= {n_max}; the reflection tail never '
        'becomes a contraction.'
    )


def gi_bound_report(w, n_max=64, size=DEFAULT_SIZE, grid=DEFAULT_GRID,
                    vanish_tol=DEFAULT_VANISH_TOL, solve_tol=1e-10,
                    rho_margin=DEFAULT_RHO_MARGIN):
    # only real weights have a real logarithm
    SobolevHalfElement(log_series(w, grid, vanish_tol))
    reflection = prepare_reflection(w, grid, vanish_tol)
    n0 = minimal_n0(reflection.r, n_max, rho_margin)
    value = rho(reflection.r, n0)
    squared = value ** 2
    intermediate_bound = value ** 4 / (1 - squared) ** 2
    logger.debug('GI bound: n0=%d, rho=%.6g', n0, value)

    total = 0.0
    rows = []
    for n in range(max(n0, 1), n_max + 1):
        point = fixed_point(reflection, n, size, solve_tol)
        total += n * abs(point.alpha) ** 2
        rows.append(GIRow(
            n=n,
            alpha=point.alpha,
            intermediate=n * float(np.sum(np.abs(point.correction) ** 2)),
            intermediate_bound=intermediate_bound,
            ibragimov4=n * float(np.sum(np.abs(point.operator.e0_image) ** 2)),
            ibragimov4_bound=value ** 4,
        ))
    return GIBound(
        n0=n0,
        rho=value,
        lhs=math.sqrt(total),
        rhs=value / (1 - squared),
        rows=rows,
        truncated_at=n_max,
    )
