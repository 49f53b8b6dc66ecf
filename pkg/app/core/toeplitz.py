"""
Finite Toeplitz sections, their inverses, Krein's inverse of the full
operator and the explicit finite-n approximation built from the Wiener-Hopf
factors.
"""
import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy import linalg

from core.exceptions import SingularSection
from core.series import DEFAULT_GRID, DEFAULT_VANISH_TOL
from core.weights import BeurlingWeight, triple_norm
from core.wienerhopf import factorize, is_positive_symbol

logger = logging.getLogger(__name__)

PIVOT_TOL = 1e-12
ROUNDOFF_FLOOR = 1e-14


@dataclass(frozen=True)
class ToeplitzSection:
    """(n+1) x (n+1) matrix with entry (j, k) = phi_{j-k}."""
    n: int
    entries: np.ndarray

    @property
    def is_hermitian(self):
        return np.allclose(self.entries, self.entries.conj().T, rtol=0,
                           atol=1e-14)


def build_section(phi, n):
    index = np.arange(n + 1)
    return ToeplitzSection(
        n, linalg.toeplitz(phi.take(index), phi.take(-index)))


def invert_section(section, pivot_tol=PIVOT_TOL):
    """Dense LU inverse; pivots below pivot_tol * ||T|| count as singular."""
    matrix = section.entries
    scale = np.abs(matrix).sum(axis=1).max()
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', linalg.LinAlgWarning)
        lu, piv = linalg.lu_factor(matrix)
    pivots = np.abs(np.diag(lu))
    if scale == 0 or pivots.min() <= pivot_tol * scale:
        raise SingularSection(
            f'Section of size {section.n + 1} has pivot '
            f'{pivots.min():.3e} against norm {scale:.3e}'
        )
    inverse = linalg.lu_solve((lu, piv), np.eye(section.n + 1))
    residual = np.abs(matrix @ inverse - np.eye(section.n + 1)).max()
    condition = scale * np.abs(inverse).sum(axis=1).max()
    if residual > 1e-10 * max(condition, 1.0):
        logger.warning(
            'Section inverse residual %.3e exceeds the conditioned tolerance',
            residual,
        )
    return inverse


def is_positive_definite(section):
    if not section.is_hermitian:
        return False
    try:
        linalg.cholesky(section.entries, lower=True)
    except linalg.LinAlgError:
        return False
    return True


def toeplitz_product_entry(a, b, p, q):
    """[T(a) T(b)]_{p,q} = sum_{m >= 0} a_{p-m} b_{m-q}, finite by band."""
    upper = min(p + a.half_bandwidth, q + b.half_bandwidth)
    if upper < 0:
        return 0j
    m = np.arange(upper + 1)
    return complex(np.sum(a.take(p - m) * b.take(m - q)))


def full_inverse_entry(factorization, j, k):
    """Krein: T(phi)^{-1} = T(1/phi_+) T(1/phi_-)."""
    m = np.arange(min(j, k) + 1)
    return complex(np.sum(
        factorization.plus_inv.take(j - m)
        * factorization.minus_inv.take(m - k)
    ))


def tninf_inverse_entry(factorization, n, j, k):
    """Explicit approximation of T_n(phi)^{-1}_{jk} from the factors.

    [T(1/phi_+) T(1/phi_-)]_{jk} minus the tail
    sum_{m >= n+1-j-k} (1/phi_+)_{j+m} (1/phi_-)_{-(m+k)}; the tail stops at
    the stored bands, which is exact for band-limited factors.
    """
    plus_inv = factorization.plus_inv
    minus_inv = factorization.minus_inv
    start = n + 1 - j - k
    stop = min(plus_inv.half_bandwidth - j, minus_inv.half_bandwidth - k)
    correction = 0j
    if stop >= start:
        m = np.arange(start, stop + 1)
        correction = np.sum(plus_inv.take(j + m) * minus_inv.take(-(m + k)))
    return full_inverse_entry(factorization, j, k) - complex(correction)


@dataclass(frozen=True)
class Probe:
    """Matrix position, each coordinate measured from 0 or from n."""
    j: int
    k: int
    j_from_corner: bool = False
    k_from_corner: bool = False

    @classmethod
    def origin(cls, j=0, k=0):
        return cls(j, k)

    @classmethod
    def corner(cls, j=0, k=0):
        return cls(j, k, True, True)

    @classmethod
    def parse(cls, text):
        """``"0,0"`` is the top-left entry; ``"n,n"`` and ``"n-1,n"`` count
        from n.
        """
        parts = [part.strip() for part in text.split(',')]
        if len(parts) != 2:
            raise ValueError(f'Probe needs two coordinates: {text}')
        values = []
        for part in parts:
            if part.startswith('n'):
                offset = part[1:].replace(' ', '')
                if offset and not offset.startswith('-'):
                    raise ValueError(
                        f'Probe offsets count down from n: {text}')
                values.append((int(offset[1:]) if offset else 0, True))
            else:
                values.append((int(part), False))
        (j, j_corner), (k, k_corner) = values
        return cls(j, k, j_corner, k_corner)

    def resolve(self, n):
        j = n - self.j if self.j_from_corner else self.j
        k = n - self.k if self.k_from_corner else self.k
        return j, k

    def __str__(self):
        def show(value, corner):
            if not corner:
                return str(value)
            return 'n' if value == 0 else f'n-{value}'
        return (f'{show(self.j, self.j_from_corner)},'
                f'{show(self.k, self.k_from_corner)}')


@dataclass
class DecayRow:
    n: int
    probe: Probe
    j: int
    k: int
    error: Optional[float] = None
    bound: Optional[float] = None
    growth_bound: Optional[float] = None
    weight_bound: Optional[float] = None
    tninf_error: Optional[float] = None
    tninf_bound: Optional[float] = None
    c_calibrated: Optional[float] = None
    calibration: bool = False
    singular: bool = False
    passed: bool = False


@dataclass
class ProbeSummary:
    probe: Probe
    c_calibrated: float
    fitted_rate: Optional[float]
    tninf_constant: Optional[float]
    passed: bool


@dataclass
class DecayReport:
    """Finite-section errors against Krein's inverse, per n and probe."""
    rows: List[DecayRow]
    summaries: List[ProbeSummary] = field(default_factory=list)
    positive: bool = False

    @property
    def singular_ns(self):
        return sorted({row.n for row in self.rows if row.singular})

    @property
    def passed(self):
        return all(row.passed for row in self.rows if not row.singular)

    def summary(self, probe):
        for item in self.summaries:
            if item.probe == probe:
                return item
        raise KeyError(str(probe))


def fit_geometric_rate(ns, values):
    """exp(slope) of a least-squares line through log(values) against n."""
    ns = np.asarray(ns, float)
    values = np.abs(np.asarray(values, float))
    keep = values > 0
    if keep.sum() < 2:
        return None
    slope = np.polyfit(ns[keep], np.log(values[keep]), 1)[0]
    return float(np.exp(slope))


def _weighted_bounds(nu, n, j, k):
    reach = n + 1 - min(j, k)
    growth = math.exp(-reach * nu.growth_rate())
    weight = float(1.0 / nu(reach)) if nu.increasing else None
    return growth, weight


def theorem1_report(phi, n_range, probes, nu=None, size=DEFAULT_GRID,
                    vanish_tol=DEFAULT_VANISH_TOL, slack=2.0):
    """Compare inv(T_n) with T(phi)^{-1} at probes for every n in n_range.

    The first third of n_range calibrates c = slack * max(e_n / b_n) per
    probe; the remaining rows must satisfy e_n <= c * b_n.
    """
    factorization = factorize(phi, size, vanish_tol)
    wiener = BeurlingWeight.wiener()
    n_values = list(n_range)
    calibration_ns = set(n_values[:math.ceil(len(n_values) / 3)])
    report = DecayReport(rows=[], positive=is_positive_symbol(phi, size))

    for n in n_values:
        section = build_section(phi, n)
        try:
            inverse = invert_section(section)
        except SingularSection as exc:
            logger.warning('n=%d: %s', n, exc)
            for probe in probes:
                j, k = probe.resolve(n)
                report.rows.append(DecayRow(n, probe, j, k, singular=True))
            continue
        for probe in probes:
            j, k = probe.resolve(n)
            if not (0 <= j <= n and 0 <= k <= n):
                continue
            row = DecayRow(
                n, probe, j, k,
                error=abs(
                    inverse[j, k] - full_inverse_entry(factorization, j, k)),
                bound=triple_norm(factorization, wiener, n + 1 - min(j, k)),
                tninf_error=abs(inverse[j, k] - tninf_inverse_entry(
                    factorization, n, j, k)),
                tninf_bound=triple_norm(factorization, wiener, n + 1),
                calibration=n in calibration_ns,
            )
            if nu is not None:
                row.growth_bound, row.weight_bound = _weighted_bounds(
                    nu, n, j, k)
            report.rows.append(row)

    for probe in probes:
        rows = [
            row for row in report.rows
            if row.probe == probe and not row.singular
        ]
        ratios = [
            row.error / row.bound for row in rows
            if row.calibration and row.bound > 0
        ]
        c = slack * max(ratios) if ratios else 0.0
        tninf_ratios = [
            row.tninf_error / row.tninf_bound for row in rows
            if row.tninf_bound > 0
        ]
        for row in rows:
            row.c_calibrated = c
            row.passed = row.error <= c * row.bound + ROUNDOFF_FLOOR
        report.summaries.append(ProbeSummary(
            probe=probe,
            c_calibrated=c,
            fitted_rate=fit_geometric_rate(
                [row.n for row in rows], [row.error for row in rows]),
            tninf_constant=max(tninf_ratios) if tninf_ratios else None,
            passed=all(row.passed for row in rows),
        ))
        logger.debug('Probe %s: c=%.3e', probe, c)
    return report
