"""
Monic orthogonal polynomials on the unit circle from the moments of a weight.

Each Phi_n comes from its own dense solve, so nothing here shares a
recurrence with the fixed-point path in core.bo.
"""
import logging
import warnings
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy import linalg

from core.exceptions import SingularMomentSection
from core.toeplitz import build_section

logger = logging.getLogger(__name__)

MOMENTS = 'moments'
BO = 'bo'
PIVOT_TOL = 1e-12
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class MonicPolynomial:
    """Phi_n(z) = sum_k coeffs[k] z^k with coeffs[n] = 1."""
    coeffs: np.ndarray
    residual: float = 0.0

    @property
    def degree(self):
        return self.coeffs.size - 1

    @property
    def at_zero(self):
        return complex(self.coeffs[0])

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], z)


@dataclass
class VerblunskyRow:
    n: int
    alpha: Optional[complex]
    phi_zero: Optional[complex]
    method: str
    diagnostic: Optional[float] = None
    below_threshold: bool = False
    error: Optional[str] = None


@dataclass
class VerblunskyReport:
    """alpha_{n-1} = -conj(Phi_n(0)) for n = 1..n_max."""
    method: str
    rows: List[VerblunskyRow] = field(default_factory=list)
    n0: Optional[int] = None

    def alphas(self):
        """alpha_0, alpha_1, ... with None where a row failed."""
        return [row.alpha for row in self.rows]

    def alpha(self, n):
        for row in self.rows:
            if row.n == n + 1:
                return row.alpha
        raise KeyError(n)

    @property
    def failed(self):
        return [row for row in self.rows if row.error]


def monic_opuc(w, n, pivot_tol=PIVOT_TOL):
    """Solve sum_k (Phi_n)_k w_{j-k} = 0, 0 <= j < n, with (Phi_n)_n = 1."""
    if n == 0:
        return MonicPolynomial(np.ones(1, dtype=complex))
    moments = build_section(w, n - 1).entries
    rhs = -w.take(np.arange(n) - n)
    scale = np.abs(moments).sum(axis=1).max()
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', linalg.LinAlgWarning)
        lu, piv = linalg.lu_factor(moments)
    if scale == 0 or np.abs(np.diag(lu)).min() <= pivot_tol * scale:
        raise SingularMomentSection(
            f'Moment section of order {n} is singular.')
    lower = linalg.lu_solve((lu, piv), rhs)
    coeffs = np.append(lower, 1.0 + 0j)
    full = build_section(w, n).entries[:n]
    residual = float(np.abs(full @ coeffs).max())
    if residual > RESIDUAL_TOL * max(scale, 1.0):
        raise SingularMomentSection(
            f'Orthogonality residual {residual:.3e} at order {n}.')
    return MonicPolynomial(coeffs, residual)


def verblunsky_from_moments(w, n_max):
    report = VerblunskyReport(method=MOMENTS)
    for n in range(1, n_max + 1):
        try:
            phi_zero = monic_opuc(w, n).at_zero
        except SingularMomentSection as exc:
            logger.info('n=%d: %s', n, exc)
            report.rows.append(VerblunskyRow(
                n, None, None, MOMENTS, error=exc.name))
            continue
        report.rows.append(VerblunskyRow(
            n, -phi_zero.conjugate(), phi_zero, MOMENTS))
    return report
