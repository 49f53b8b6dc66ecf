"""
Winding numbers, Wiener-Hopf factorization, the Szego function and the
reflection coefficient of a weight.
"""
import logging
from dataclasses import dataclass

import numpy as np

from core.exceptions import NearVanishingSymbol, PointOnCircle
from core.series import (
    COANALYTIC,
    DEFAULT_COMPRESS_TOL,
    DEFAULT_GRID,
    DEFAULT_VANISH_TOL,
    LaurentSeries,
    check_modulus,
    exp_series,
    log_series,
    project_minus,
    project_plus,
    samples_from_coeffs,
    samples_on_circle,
    winding_from_samples,
)
from core.weights import annulus_radius

logger = logging.getLogger(__name__)

INTERIOR = 'interior'
EXTERIOR = 'exterior'


@dataclass(frozen=True)
class WienerHopfFactorization:
    """phi = plus * minus with plus analytic and minus(infinity) = 1.

    plus and plus_inv are the delta_+ side, minus_inv is delta_-.
    """
    plus: LaurentSeries
    minus: LaurentSeries
    plus_inv: LaurentSeries
    minus_inv: LaurentSeries
    log_symbol: LaurentSeries
    winding: int = 0

    def reconstruction_error(self, symbol, size=DEFAULT_GRID):
        """max |plus * minus - phi| on the grid, relative to max |phi|."""
        target = samples_from_coeffs(symbol, size).samples
        product = (
            samples_from_coeffs(self.plus, size).samples
            * samples_from_coeffs(self.minus, size).samples
        )
        return float(np.abs(product - target).max() / np.abs(target).max())


@dataclass(frozen=True)
class SzegoEvaluation:
    point: complex
    value: complex
    side: str


def winding_number(phi, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL):
    """Degree of theta -> phi(e^{i theta}) around the origin."""
    samples = samples_from_coeffs(phi, size).samples
    check_modulus(samples, vanish_tol)
    return winding_from_samples(samples)


def _with_unit_constant(s):
    coeffs = np.array(s.coeffs)
    coeffs[s.half_bandwidth] = 1.0
    return LaurentSeries(coeffs, COANALYTIC)


def _fit_band(s, half_bandwidth, compress_tol):
    s = s.compress(compress_tol)
    if half_bandwidth is not None and s.half_bandwidth > half_bandwidth:
        s = s.resized(half_bandwidth)
    return s


def factorize(phi, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL,
              half_bandwidth=None, compress_tol=DEFAULT_COMPRESS_TOL):
    """Wiener-Hopf factors exp(P+ log phi) and exp(P- log phi).

    The constant mode of log phi goes entirely to the plus factor, so the
    minus factors have constant term exactly 1.
    """
    log_phi = log_series(phi, size, vanish_tol)
    log_plus = project_plus(log_phi)
    log_minus = project_minus(log_phi)

    plus = exp_series(log_plus, size)
    plus_inv = exp_series(-log_plus, size)
    minus = _with_unit_constant(exp_series(log_minus, size))
    minus_inv = _with_unit_constant(exp_series(-log_minus, size))

    factorization = WienerHopfFactorization(
        plus=_fit_band(plus, half_bandwidth, compress_tol),
        minus=_fit_band(minus, half_bandwidth, compress_tol),
        plus_inv=_fit_band(plus_inv, half_bandwidth, compress_tol),
        minus_inv=_fit_band(minus_inv, half_bandwidth, compress_tol),
        log_symbol=_fit_band(log_phi, half_bandwidth, compress_tol),
    )
    logger.debug(
        'Factorized symbol of band %d: factor bands %d/%d',
        phi.half_bandwidth,
        factorization.plus.half_bandwidth,
        factorization.minus.half_bandwidth,
    )
    return factorization


def szego_D(w, z, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL):
    """Szego function from the coefficients of log w.

    D_i(z) = exp((log w)_0 / 2 + sum_{k>=1} (log w)_k z^k) inside the disc,
    D_e(z) = exp(-(log w)_0 / 2 - sum_{k>=1} (log w)_{-k} z^{-k}) outside.
    """
    z = complex(z)
    if abs(abs(z) - 1.0) < 1e-12:
        raise PointOnCircle(f'Szego function is not evaluated on |z| = 1: {z}')
    log_w = log_series(w, size, vanish_tol)
    k = np.arange(1, log_w.half_bandwidth + 1)
    if abs(z) < 1:
        exponent = log_w[0] / 2 + np.sum(log_w.take(k) * z ** k)
        side = INTERIOR
    else:
        exponent = -log_w[0] / 2 - np.sum(log_w.take(-k) * z ** (-k))
        side = EXTERIOR
    return SzegoEvaluation(z, complex(np.exp(exponent)), side)


def szego_D_quadrature(w, z, size=DEFAULT_GRID,
                       vanish_tol=DEFAULT_VANISH_TOL):
    """Rectangle rule for exp((1/4pi) int log w (e^it + z)/(e^it - z) dt)."""
    z = complex(z)
    if abs(abs(z) - 1.0) < 1e-12:
        raise PointOnCircle(f'Szego function is not evaluated on |z| = 1: {z}')
    log_w = samples_from_coeffs(log_series(w, size, vanish_tol), size).samples
    zeta = np.exp(2j * np.pi * np.arange(size) / size)
    kernel = (zeta + z) / (zeta - z)
    return complex(np.exp(0.5 * np.mean(log_w * kernel)))


def normalize_weight(w, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL):
    """Scale w so that (log w)_0 = 0."""
    log_mean = log_series(w, size, vanish_tol)[0]
    return w / complex(np.exp(log_mean))


def reflection_pair(w, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL,
                    normalize=True):
    """r = exp(P- log w - P+ log w) and its reciprocal.

    With normalize, the constant mode of log w is dropped first, which is the
    same as dividing w by exp((log w)_0).
    """
    log_w = log_series(w, size, vanish_tol)
    if normalize:
        log_mean = log_w[0]
        if abs(log_mean) > 1e-14:
            logger.debug('Normalizing weight: (log w)_0 = %s', log_mean)
        coeffs = np.array(log_w.coeffs)
        coeffs[log_w.half_bandwidth] = 0
        log_w = LaurentSeries(coeffs)
    exponent = project_minus(log_w) - project_plus(log_w)
    return exp_series(exponent, size), exp_series(-exponent, size)


def reflection_coefficient(w, size=DEFAULT_GRID,
                           vanish_tol=DEFAULT_VANISH_TOL, normalize=True):
    """r = delta_+^{-1} delta_-^{-1} = phi_+^{-1} phi_-."""
    return reflection_pair(w, size, vanish_tol, normalize)[0]


def is_positive_symbol(phi, size=DEFAULT_GRID):
    """Real on the circle and strictly positive on the grid."""
    if not phi.is_conjugate_symmetric(1e-12):
        return False
    return bool(samples_from_coeffs(phi, size).samples.real.min() > 0)


def nonvanishing_on_annulus(phi, nu, size=DEFAULT_GRID,
                            vanish_tol=DEFAULT_VANISH_TOL,
                            compress_tol=DEFAULT_COMPRESS_TOL, circles=9):
    """phi has no zeros on e^{-A(nu)} <= |z| <= e^{A(nu)}.

    Checked on concentric circles: no near-vanishing sample on any of them
    and the same winding number on all of them.
    """
    phi = phi.compress(compress_tol)
    outer = annulus_radius(nu)
    radii = np.geomspace(1.0 / outer, outer, circles) if outer > 1 else [1.0]
    windings = set()
    for radius in radii:
        samples = samples_on_circle(phi, radius, size).samples
        try:
            check_modulus(samples, vanish_tol)
        except NearVanishingSymbol:
            return False
        windings.add(winding_from_samples(samples))
    return len(windings) == 1
