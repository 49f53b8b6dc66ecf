"""
The Borodin-Okounkov operator of a weight and the fixed-point route to
Verblunsky coefficients.

For n >= 0 the operator acts on l^2(Z+) by

    (A f)_l = sum_{i >= 0} r_{l+n+1+i} sum_{p >= 0} (r^{-1})_{-(n+1+p+i)} f_p,

so it is the product R Q of two Hankel matrices built from the tails of the
reflection coefficient r and of its reciprocal. For real weights
(r^{-1})_{-j} = conj(r_j) and Q is the conjugate transpose of R.
"""
import logging
import warnings
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy import linalg

from core.exceptions import (
    ContractionFailure,
    NearVanishingSymbol,
    ReflectionNotInvertible,
)
from core.opuc import BO, VerblunskyReport, VerblunskyRow
from core.series import (
    ANALYTIC,
    DEFAULT_COMPRESS_TOL,
    DEFAULT_GRID,
    DEFAULT_VANISH_TOL,
    LaurentSeries,
    reciprocal,
)
from core.toeplitz import fit_geometric_rate
from core.wienerhopf import (
    is_positive_symbol,
    nonvanishing_on_annulus,
    reflection_pair,
)

logger = logging.getLogger(__name__)

DEFAULT_SIZE = 64
MAX_SIZE = 4096
DEFAULT_SOLVE_TOL = 1e-10
DOUBLING_TOL = 1e-10
NEUMANN_BOUND = 0.5


@dataclass(frozen=True)
class BOOperator:
    """L x L truncation of A^(n) together with its source series."""
    n: int
    size: int
    matrix: np.ndarray
    r: LaurentSeries
    r_inv: LaurentSeries
    real: bool
    trace_bound: float

    @property
    def e0_image(self):
        """A e_0, the first column."""
        return self.matrix[:, 0]


@dataclass(frozen=True)
class MuTilde:
    n: int
    coeffs: np.ndarray
    residual: float
    below_threshold: bool = False


@dataclass(frozen=True)
class Reflection:
    """r and 1/r of a normalized weight, and whether the weight is real."""
    r: LaurentSeries
    r_inv: LaurentSeries
    real: bool


@dataclass(frozen=True)
class FixedPoint:
    """Accepted solution of mu = e_0 + A mu at one n."""
    operator: BOOperator
    mu: MuTilde
    phi_zero: complex
    alpha: complex
    delta: float

    @property
    def n(self):
        return self.operator.n

    @property
    def correction(self):
        """(1 - A)^{-1} A e_0, which equals mu - e_0."""
        return self.operator.matrix @ self.mu.coeffs


def prepare_reflection(w, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL,
                       compress_tol=DEFAULT_COMPRESS_TOL):
    real = is_positive_symbol(w, size)
    r, r_inv = reflection_pair(w, size, vanish_tol, normalize=True)
    return Reflection(r.compress(compress_tol), r_inv.compress(compress_tol),
                      real)


def trace_norm_bound(r, n):
    """sum_{m > n} (1 + m) |r_m|^2."""
    m = np.arange(n + 1, r.half_bandwidth + 1)
    if m.size == 0:
        return 0.0
    return float(np.sum((1 + m) * np.abs(r.take(m)) ** 2))


def _tail_hankel(series, start, sign, rows, columns):
    """Matrix with entry (a, b) = series_{sign * (start + a + b)}."""
    first = series.take(sign * (start + np.arange(rows)))
    last = series.take(sign * (start + rows - 1 + np.arange(columns)))
    return linalg.hankel(first, last)


def build_bo(r, n, size=DEFAULT_SIZE, r_inv=None, real=None,
             grid=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL):
    """Assemble the size x size truncation of A^(n).

    Without r_inv the reciprocal comes from pointwise inversion on the grid.
    Rows past the band of r vanish, so the truncation never needs more rows
    than the band allows.
    """
    if size < 1:
        raise ValueError('Operator truncation must be at least 1.')
    if r_inv is None:
        try:
            r_inv = reciprocal(r, grid, vanish_tol)
        except NearVanishingSymbol as exc:
            raise ReflectionNotInvertible(str(exc)) from exc
    if real is None:
        real = False
    terms = max(max(r.half_bandwidth, r_inv.half_bandwidth) - n, 1)
    tail = _tail_hankel(r, n + 1, 1, size, terms)
    if real:
        matrix = tail @ tail.conj().T
    else:
        matrix = tail @ _tail_hankel(r_inv, n + 1, -1, terms, size)
    return BOOperator(n, size, matrix, r, r_inv, bool(real),
                      trace_norm_bound(r, n))


def trace_norm(operator):
    return float(linalg.svdvals(operator.matrix).sum())


def operator_norm(operator):
    return float(linalg.svdvals(operator.matrix).max())


def _neumann(operator, tol=1e-14, max_iter=500):
    e0 = np.zeros(operator.size, dtype=complex)
    e0[0] = 1.0
    mu = e0.copy()
    for _ in range(max_iter):
        updated = e0 + operator.matrix @ mu
        if np.abs(updated - mu).max() <= tol:
            return updated
        mu = updated
    return mu


def solve_mu(operator, solve_tol=DEFAULT_SOLVE_TOL):
    """Solve mu = e_0 + A mu by dense LU of I - A."""
    size = operator.size
    system = np.eye(size) - operator.matrix
    e0 = np.zeros(size, dtype=complex)
    e0[0] = 1.0
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', linalg.LinAlgWarning)
        try:
            lu, piv = linalg.lu_factor(system)
            mu = linalg.lu_solve((lu, piv), e0)
        except (linalg.LinAlgError, ValueError) as exc:
            raise ContractionFailure(
                f'I - A^({operator.n}) could not be factored: {exc}') from exc
    residual = float(np.abs(system @ mu - e0).max())
    if not np.isfinite(residual) or residual > solve_tol:
        raise ContractionFailure(
            f'Fixed-point residual {residual:.3e} at n={operator.n} '
            f'(trace bound {operator.trace_bound:.3e})'
        )
    if operator.trace_bound < NEUMANN_BOUND:
        gap = np.abs(_neumann(operator) - mu).max()
        if gap > 1e-10:
            logger.warning(
                'n=%d: Neumann series disagrees with LU by %.3e',
                operator.n, gap,
            )
    return MuTilde(operator.n, mu, residual, operator.trace_bound >= 1)


def phi_n_zero(mu, r_inv):
    """Phi_n(0) = sum_l mu_l (r^{-1})_{-n-l}."""
    index = -(mu.n + np.arange(mu.coeffs.size))
    return complex(np.sum(mu.coeffs * r_inv.take(index)))


def _leading_column(reflection, n, count):
    """(r^{-1})_{-(n+l)} for l < count; conj(r_{n+l}) for real weights."""
    index = n + np.arange(count)
    if reflection.real:
        return np.conj(reflection.r.take(index))
    return reflection.r_inv.take(-index)


def _effective_size(reflection, n, size):
    band = max(reflection.r.half_bandwidth, reflection.r_inv.half_bandwidth)
    return max(1, min(size, band - n))


def fixed_point(reflection, n, size=DEFAULT_SIZE, solve_tol=DEFAULT_SOLVE_TOL,
                max_size=MAX_SIZE):
    """Solve at n, doubling the truncation until alpha settles.

    Rows of A^(n) past the band of r vanish, so once the truncation covers
    the band the result is exact and no further doubling happens.
    """
    current = _effective_size(reflection, n, size)
    previous = None
    while True:
        operator = build_bo(reflection.r, n, current, reflection.r_inv,
                            reflection.real)
        mu = solve_mu(operator, solve_tol)
        phi_zero = complex(np.sum(
            mu.coeffs * _leading_column(reflection, n, current)))
        alpha = -phi_zero.conjugate()
        delta = 0.0 if previous is None else abs(alpha - previous.alpha)
        point = FixedPoint(operator, mu, phi_zero, alpha, delta)
        if previous is not None and delta < DOUBLING_TOL:
            return point
        larger = _effective_size(reflection, n, 2 * current)
        if larger == current:
            return point
        if larger > max_size:
            logger.warning(
                'n=%d: truncation reached %d with alpha change %.3e',
                n, current, delta,
            )
            return point
        logger.debug('n=%d: doubling truncation to %d', n, larger)
        previous = point
        current = larger


def verblunsky_bo(w, n_max, size=DEFAULT_SIZE, grid=DEFAULT_GRID,
                  vanish_tol=DEFAULT_VANISH_TOL, solve_tol=DEFAULT_SOLVE_TOL,
                  compress_tol=DEFAULT_COMPRESS_TOL):
    """alpha_{n-1} for n = 1..n_max from the fixed-point equation.

    Every row carries the trace-norm bound of A^(n) as its diagnostic; n0 is
    the first n whose bound is below 1.
    """
    reflection = prepare_reflection(w, grid, vanish_tol, compress_tol)
    report = VerblunskyReport(method=BO)
    for n in range(1, n_max + 1):
        bound = trace_norm_bound(reflection.r, n)
        if report.n0 is None and bound < 1:
            report.n0 = n
        try:
            point = fixed_point(reflection, n, size, solve_tol)
        except ContractionFailure as exc:
            logger.info('n=%d: %s', n, exc)
            report.rows.append(VerblunskyRow(
                n, None, None, BO, bound, bound >= 1, exc.name))
            continue
        report.rows.append(VerblunskyRow(
            n, point.alpha, point.phi_zero, BO, bound, bound >= 1))
    return report


def born_series(alphas):
    """S(z) = -sum_{n >= 1} alpha_{n-1} z^n."""
    alphas = np.asarray([0 if a is None else a for a in alphas], complex)
    count = alphas.size
    coeffs = np.zeros(2 * count + 1, dtype=complex)
    coeffs[count + 1:] = -alphas
    return LaurentSeries(coeffs, ANALYTIC)


def residue_sequence(alphas, pole):
    """alpha_{n-1} pole^{n+1}, n = 1, 2, ...; tends to Res(S, pole)."""
    return [
        None if alpha is None else complex(alpha * pole ** (n + 1))
        for n, alpha in enumerate(alphas, start=1)
    ]


@dataclass
class BaxterRow:
    n: int
    phi_zero_abs: Optional[float]
    nu: float
    increment: Optional[float]
    partial_sum: float


@dataclass
class BaxterReport:
    rows: List[BaxterRow] = field(default_factory=list)
    increment_ratio: Optional[float] = None
    in_class: bool = True
    n0: Optional[int] = None

    @property
    def increments_decay(self):
        return self.increment_ratio is None or self.increment_ratio < 1


def baxter_report(w, nu, n_max, size=DEFAULT_SIZE, grid=DEFAULT_GRID,
                  vanish_tol=DEFAULT_VANISH_TOL, solve_tol=DEFAULT_SOLVE_TOL):
    """Partial sums of nu_n |Phi_n(0)| and the decay of their increments."""
    verblunsky = verblunsky_bo(w, n_max, size, grid, vanish_tol, solve_tol)
    report = BaxterReport(
        in_class=nonvanishing_on_annulus(w, nu, grid, vanish_tol),
        n0=verblunsky.n0,
    )
    if not report.in_class:
        logger.info('Weight vanishes on the annulus of %r', nu)
    total = 0.0
    for row in verblunsky.rows:
        weight = float(nu(row.n))
        if row.phi_zero is None:
            report.rows.append(BaxterRow(row.n, None, weight, None, total))
            continue
        increment = weight * abs(row.phi_zero)
        total += increment
        report.rows.append(BaxterRow(
            row.n, abs(row.phi_zero), weight, increment, total))
    live = [row for row in report.rows if row.increment]
    report.increment_ratio = fit_geometric_rate(
        [row.n for row in live], [row.increment for row in live])
    return report


@dataclass
class BornRow:
    n: int
    phi_zero: Optional[complex]
    r_inv_coefficient: complex
    difference: Optional[complex]
    weighted: Optional[float]
    partial_sum: float
    ratio: Optional[float] = None
    residue: Optional[complex] = None


@dataclass
class BornReport:
    """Phi_n(0) against its leading term (r^{-1})_{-n}."""
    rows: List[BornRow] = field(default_factory=list)
    fitted_ratio: Optional[float] = None
    increment_ratio: Optional[float] = None
    in_class: bool = True

    @property
    def tail_estimate(self):
        """Geometric bound on the remaining sum past the last row."""
        if self.increment_ratio is None:
            return 0.0
        if self.increment_ratio >= 1:
            return float('inf')
        last = next(
            (row.weighted for row in reversed(self.rows) if row.weighted),
            0.0)
        return last * self.increment_ratio / (1 - self.increment_ratio)


def born_report(w, nu, n_max, pole=None, fit_from=6, size=DEFAULT_SIZE,
                grid=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL,
                solve_tol=DEFAULT_SOLVE_TOL):
    """d_n = Phi_n(0) - (r^{-1})_{-n} and the partial sums of nu_n^3 |d_n|.

    d_n is summed directly from A mu, which avoids subtracting two nearly
    equal numbers.
    """
    if not nu.increasing:
        logger.warning('%r is not increasing on the nonnegative integers', nu)
    reflection = prepare_reflection(w, grid, vanish_tol)
    report = BornReport(in_class=nonvanishing_on_annulus(w, nu, grid,
                                                         vanish_tol))
    total = 0.0
    previous = None
    for n in range(1, n_max + 1):
        leading = complex(_leading_column(reflection, n, 1)[0])
        weight = float(nu(n))
        try:
            point = fixed_point(reflection, n, size, solve_tol)
        except ContractionFailure as exc:
            logger.info('n=%d: %s', n, exc)
            report.rows.append(BornRow(n, None, leading, None, None, total))
            previous = None
            continue
        difference = complex(np.sum(point.correction * _leading_column(
            reflection, n, point.mu.coeffs.size)))
        weighted = weight ** 3 * abs(difference)
        total += weighted
        row = BornRow(n, point.phi_zero, leading, difference, weighted, total)
        if previous:
            row.ratio = abs(difference) / previous
        if pole is not None:
            row.residue = complex(point.alpha * pole ** (n + 1))
        previous = abs(difference)
        report.rows.append(row)

    fitted = [row for row in report.rows
              if row.n >= fit_from and row.difference is not None]
    report.fitted_ratio = fit_geometric_rate(
        [row.n for row in fitted], [abs(row.difference) for row in fitted])
    report.increment_ratio = fit_geometric_rate(
        [row.n for row in fitted], [row.weighted for row in fitted])
    return report
