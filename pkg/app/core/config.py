"""
Run configuration shared by the CLI and the HTTP API.
"""
from dataclasses import dataclass, fields, replace
from typing import Optional

from django.conf import settings

from core.weights import BeurlingWeight


NORMALIZE_NONE = 'none'
NORMALIZE_LOG_MEAN_ZERO = 'log-mean-zero'
NORMALIZE_CHOICES = (NORMALIZE_NONE, NORMALIZE_LOG_MEAN_ZERO)

_SETTINGS_KEYS = {
    'band': 'BAND',
    'grid': 'GRID',
    'bo_size': 'BO_SIZE',
    'vanish_tol': 'VANISH_TOL',
    'solve_tol': 'SOLVE_TOL',
    'compress_tol': 'COMPRESS_TOL',
    'calibration_slack': 'CALIBRATION_SLACK',
    'rho_margin': 'RHO_MARGIN',
    'delta_tol': 'DELTA_TOL',
}


@dataclass(frozen=True)
class RunConfig:
    """Numerical parameters of one run."""
    band: int = 256
    grid: int = 1024
    bo_size: int = 64
    vanish_tol: float = 1e-8
    solve_tol: float = 1e-10
    compress_tol: float = 1e-15
    calibration_slack: float = 2.0
    rho_margin: float = 1e-9
    delta_tol: float = 1e-6
    weight: str = 'wiener'
    nmin: int = 1
    nmax: int = 20
    normalize: Optional[str] = None

    @classmethod
    def from_settings(cls, **overrides):
        """Build a config from settings.SPECTRAL, then apply overrides."""
        configured = getattr(settings, 'SPECTRAL', {})
        values = {
            attr: configured[key]
            for attr, key in _SETTINGS_KEYS.items()
            if key in configured
        }
        known = {f.name for f in fields(cls)}
        values.update({
            key: value for key, value in overrides.items()
            if key in known and value is not None
        })
        return cls(**values)

    def with_normalize(self, default):
        """Fill in the per-command normalization default."""
        if self.normalize is not None:
            return self
        return replace(self, normalize=default)

    @property
    def normalized(self):
        return self.normalize == NORMALIZE_LOG_MEAN_ZERO

    def beurling_weight(self):
        return BeurlingWeight.parse(self.weight)
