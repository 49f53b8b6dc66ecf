"""
Django command checking the bound on sum n |alpha_{n-1}|^2 for a real weight.
"""
from django.core.management.base import CommandError

from core.config import NORMALIZE_LOG_MEAN_ZERO
from spectral.management.base import SpectralCommand
from spectral.tables import gi_table


class Command(SpectralCommand):
    help = ('Check (sum n |alpha_{n-1}|^2)^{1/2} <= rho / (1 - rho^2); the '
            'output ends with PASS or FAIL.')
    default_normalize = NORMALIZE_LOG_MEAN_ZERO

    def run(self, w, config, options):
        return gi_table(w, config)

    def finish(self, table, config, options):
        if table.footer != 'PASS':
            raise CommandError(
                f'Bound failed: lhs {table.summary["lhs"]:.6g} > '
                f'rhs {table.summary["rhs"]:.6g}'
            )
