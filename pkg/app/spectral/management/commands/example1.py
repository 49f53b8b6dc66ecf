from core.config import NORMALIZE_LOG_MEAN_ZERO
from spectral.management.base import SpectralCommand
from spectral.tables import example1_table


class Command(SpectralCommand):
    help = ('Closed-form Verblunsky coefficients of 1 - a cos(theta) next to '
            'both computed ones.')
    needs_symbol = False
    default_normalize = NORMALIZE_LOG_MEAN_ZERO

    def add_command_arguments(self, parser):
        parser.add_argument('--a', type=float, default=0.8)

    def run(self, series, config, options):
        return example1_table(options['a'], config)
