"""
Laurent series on the unit circle.

A series stores the coefficient band c_k, -N <= k <= N, in a flat array with
c_k at offset k + N. Everything outside the band is exactly zero. Pointwise
operations (exp, log, reciprocals) go through samples on the grid
z_m = exp(2 pi i m / M).
"""
import logging
from dataclasses import dataclass
from numbers import Number

import numpy as np

from core.exceptions import (
    BandAliasingError,
    NearVanishingSymbol,
    NonzeroWinding,
)

logger = logging.getLogger(__name__)

GENERAL = 'general'
ANALYTIC = 'analytic'
COANALYTIC = 'coanalytic'
KINDS = (GENERAL, ANALYTIC, COANALYTIC)

DEFAULT_GRID = 1024
DEFAULT_VANISH_TOL = 1e-8
DEFAULT_COMPRESS_TOL = 1e-15


class LaurentSeries:
    """Finite band of complex Fourier coefficients.

    An ``analytic`` series has c_k = 0 for k < 0 and a ``coanalytic`` one has
    c_k = 0 for k > 0; the masking happens on construction so the one-sided
    support is exact.
    """
    __slots__ = ('_coeffs', '_kind')

    def __init__(self, coeffs, kind=GENERAL):
        if kind not in KINDS:
            raise ValueError(f'Unknown series kind: {kind}')
        array = np.array(coeffs, dtype=complex).ravel()
        if array.size % 2 == 0:
            raise ValueError('Coefficient array must have odd length 2N+1.')
        n = array.size // 2
        if kind == ANALYTIC:
            array[:n] = 0
        elif kind == COANALYTIC:
            array[n + 1:] = 0
        array.setflags(write=False)
        self._coeffs = array
        self._kind = kind

    @classmethod
    def from_dict(cls, mapping, kind=GENERAL):
        """Build from ``{k: c_k}``; the band is the largest |k| given."""
        if not mapping:
            return cls.zero()
        n = max(abs(int(k)) for k in mapping)
        coeffs = np.zeros(2 * n + 1, dtype=complex)
        for k, value in mapping.items():
            coeffs[int(k) + n] += value
        return cls(coeffs, kind)

    @classmethod
    def constant(cls, value=1.0):
        return cls([value])

    @classmethod
    def monomial(cls, k, value=1.0):
        return cls.from_dict({k: value})

    @classmethod
    def zero(cls):
        return cls([0.0])

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def kind(self):
        return self._kind

    @property
    def half_bandwidth(self):
        return self._coeffs.size // 2

    @property
    def indices(self):
        n = self.half_bandwidth
        return np.arange(-n, n + 1)

    def coefficient(self, k):
        n = self.half_bandwidth
        if abs(k) > n:
            return 0j
        return complex(self._coeffs[k + n])

    __getitem__ = coefficient

    def take(self, indices):
        """Coefficients at an array of indices, zero outside the band."""
        indices = np.asarray(indices, dtype=int)
        n = self.half_bandwidth
        out = np.zeros(indices.shape, dtype=complex)
        inside = np.abs(indices) <= n
        out[inside] = self._coeffs[indices[inside] + n]
        return out

    def evaluate(self, z):
        """Sum c_k z^k at a point or an array of points."""
        z = np.asarray(z, dtype=complex)
        powers = z[..., np.newaxis] ** self.indices
        return np.sum(powers * self._coeffs, axis=-1)

    def to_dict(self):
        return {
            int(k): complex(c)
            for k, c in zip(self.indices, self._coeffs) if c != 0
        }

    def resized(self, n):
        """Pad with zeros or truncate to half bandwidth n."""
        current = self.half_bandwidth
        if n >= current:
            coeffs = np.zeros(2 * n + 1, dtype=complex)
            coeffs[n - current:n + current + 1] = self._coeffs
        else:
            coeffs = self._coeffs[current - n:current + n + 1]
        return LaurentSeries(coeffs, self._kind)

    def compress(self, tol=DEFAULT_COMPRESS_TOL):
        """Drop coefficients below tol * max|c_k| and shrink the band."""
        modulus = np.abs(self._coeffs)
        peak = modulus.max()
        if peak == 0:
            return LaurentSeries.zero()
        coeffs = np.where(modulus < tol * peak, 0, self._coeffs)
        support = np.nonzero(coeffs)[0] - self.half_bandwidth
        n = int(np.abs(support).max())
        return LaurentSeries(coeffs, self._kind).resized(n)

    def shift(self, n):
        """Multiply by z^n."""
        return multiply(self, LaurentSeries.monomial(n))

    def conjugate_reflection(self):
        """The series of conj(f) on the circle: c_k -> conj(c_{-k})."""
        kind = {ANALYTIC: COANALYTIC, COANALYTIC: ANALYTIC}.get(
            self._kind, GENERAL)
        return LaurentSeries(np.conj(self._coeffs[::-1]), kind)

    def is_conjugate_symmetric(self, tol=1e-12):
        scale = max(np.abs(self._coeffs).max(), 1.0)
        gap = np.abs(self._coeffs - np.conj(self._coeffs[::-1])).max()
        return gap <= tol * scale

    def allclose(self, other, atol=1e-10):
        n = max(self.half_bandwidth, other.half_bandwidth)
        return np.allclose(
            self.resized(n).coeffs, other.resized(n).coeffs,
            rtol=0, atol=atol,
        )

    def _combine(self, other, sign):
        n = max(self.half_bandwidth, other.half_bandwidth)
        kind = self._kind if self._kind == other.kind else GENERAL
        return LaurentSeries(
            self.resized(n).coeffs + sign * other.resized(n).coeffs, kind)

    def __add__(self, other):
        if isinstance(other, Number):
            other = LaurentSeries.constant(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Number):
            other = LaurentSeries.constant(other)
        return self._combine(other, -1)

    def __neg__(self):
        return LaurentSeries(-self._coeffs, self._kind)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return multiply(self, other)
        return LaurentSeries(self._coeffs * other, self._kind)

    __rmul__ = __mul__

    def __truediv__(self, value):
        return LaurentSeries(self._coeffs / value, self._kind)

    def __repr__(self):
        return (
            f'LaurentSeries(N={self.half_bandwidth}, kind={self._kind}, '
            f'nonzero={np.count_nonzero(self._coeffs)})'
        )


@dataclass(frozen=True)
class GridSampling:
    """Samples of a series at z_m = exp(2 pi i m / size)."""
    size: int
    samples: np.ndarray


def check_grid(size, half_bandwidth):
    """Raise unless the grid holds the band 2N+1 without aliasing."""
    if size < 2 or size & (size - 1):
        raise BandAliasingError(f'Grid size {size} is not a power of two.')
    if size < 2 * half_bandwidth + 2:
        raise BandAliasingError(
            f'Grid size {size} aliases a band of half width '
            f'{half_bandwidth}; need at least {2 * half_bandwidth + 2}.'
        )


def grid_band(size):
    """Largest half bandwidth a grid of this size can hold."""
    return size // 2 - 1


def samples_from_coeffs(s, size=DEFAULT_GRID):
    check_grid(size, s.half_bandwidth)
    spectrum = np.zeros(size, dtype=complex)
    spectrum[s.indices % size] = s.coeffs
    return GridSampling(size, np.fft.ifft(spectrum) * size)


def coeffs_from_samples(grid, half_bandwidth=None, kind=GENERAL):
    if half_bandwidth is None:
        half_bandwidth = grid_band(grid.size)
    check_grid(grid.size, half_bandwidth)
    spectrum = np.fft.fft(grid.samples) / grid.size
    folded = np.arange(-half_bandwidth, half_bandwidth + 1) % grid.size
    return LaurentSeries(spectrum[folded], kind)


def samples_on_circle(s, radius, size=DEFAULT_GRID):
    """Samples of s on |z| = radius."""
    scaled = LaurentSeries(s.coeffs * float(radius) ** s.indices, s.kind)
    return samples_from_coeffs(scaled, size)


def multiply(a, b):
    """Cauchy product; the band grows to N_a + N_b."""
    kind = a.kind if a.kind == b.kind else GENERAL
    return LaurentSeries(np.convolve(a.coeffs, b.coeffs), kind)


def check_modulus(samples, vanish_tol=DEFAULT_VANISH_TOL):
    modulus = np.abs(samples)
    peak = modulus.max()
    floor = vanish_tol * peak
    if not np.isfinite(peak) or peak == 0 or modulus.min() <= floor:
        raise NearVanishingSymbol(
            f'min |f| = {modulus.min():.3e} against max {peak:.3e} '
            f'(tolerance {vanish_tol:g})'
        )


def _phase_steps(samples):
    return np.angle(np.roll(samples, -1) / samples)


def winding_from_samples(samples):
    """Total argument increment around the grid divided by 2 pi."""
    turns = np.sum(_phase_steps(samples)) / (2 * np.pi)
    winding = int(np.rint(turns))
    if abs(turns - winding) > 1e-6:
        logger.warning(
            'Phase increment %.6f turns is not an integer; grid too coarse?',
            turns,
        )
    return winding


def log_series(s, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL,
               half_bandwidth=None):
    """Continuous-branch logarithm of a non-vanishing winding-0 series."""
    samples = samples_from_coeffs(s, size).samples
    check_modulus(samples, vanish_tol)
    winding = winding_from_samples(samples)
    if winding != 0:
        raise NonzeroWinding(winding)
    steps = _phase_steps(samples)
    increments = np.concatenate(([0.0], np.cumsum(steps[:-1])))
    phase = np.angle(samples[0]) + increments
    logs = np.log(np.abs(samples)) + 1j * phase
    return coeffs_from_samples(GridSampling(size, logs), half_bandwidth)


def exp_series(s, size=DEFAULT_GRID, half_bandwidth=None):
    """Pointwise exponential on the grid; one-sided kinds are preserved."""
    samples = samples_from_coeffs(s, size).samples
    return coeffs_from_samples(
        GridSampling(size, np.exp(samples)), half_bandwidth, s.kind)


def reciprocal(s, size=DEFAULT_GRID, vanish_tol=DEFAULT_VANISH_TOL,
               half_bandwidth=None):
    """1/s by pointwise inversion on the grid."""
    samples = samples_from_coeffs(s, size).samples
    check_modulus(samples, vanish_tol)
    return coeffs_from_samples(
        GridSampling(size, 1.0 / samples), half_bandwidth)


def project_plus(s):
    """Riesz projection onto k >= 0."""
    return LaurentSeries(s.coeffs, ANALYTIC)


def project_minus(s):
    """Complementary projection onto k < 0, so that P+ + P- = id."""
    coeffs = np.array(s.coeffs)
    coeffs[s.half_bandwidth] = 0
    return LaurentSeries(coeffs, COANALYTIC)


def l2_norm(s, size=DEFAULT_GRID):
    """sqrt(2 pi * mean |f|^2) over the grid."""
    samples = samples_from_coeffs(s, size).samples
    return float(np.sqrt(2 * np.pi * np.mean(np.abs(samples) ** 2)))
