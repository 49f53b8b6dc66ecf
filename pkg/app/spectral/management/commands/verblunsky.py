"""
Django command computing Verblunsky coefficients by moments and by the
fixed-point equation.
"""
from django.core.management.base import CommandError

from core.config import NORMALIZE_LOG_MEAN_ZERO
from spectral.management.base import SpectralCommand
from spectral.serializers import BOTH, METHOD_CHOICES
from spectral.tables import verblunsky_table

DELTA_EXIT_CODE = 5


class Command(SpectralCommand):
    help = 'Verblunsky coefficients alpha_{n-1}, n = 1..nmax.'
    default_normalize = NORMALIZE_LOG_MEAN_ZERO

    def add_command_arguments(self, parser):
        parser.add_argument('--method', choices=METHOD_CHOICES, default=BOTH)

    def run(self, w, config, options):
        return verblunsky_table(w, config, options['method'])

    def finish(self, table, config, options):
        delta = table.summary['max_delta']
        if delta is not None and delta > config.delta_tol:
            raise CommandError(
                f'Methods disagree by {delta:.3e} '
                f'(tolerance {config.delta_tol:g})',
                returncode=DELTA_EXIT_CODE,
            )
