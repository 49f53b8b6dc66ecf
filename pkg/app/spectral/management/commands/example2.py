from core.config import NORMALIZE_LOG_MEAN_ZERO
from spectral.management.base import SpectralCommand
from spectral.tables import example2_table


class Command(SpectralCommand):
    help = ('Closed-form Verblunsky coefficients of the Rogers-Szego weight '
            'next to both computed ones.')
    needs_symbol = False
    default_normalize = NORMALIZE_LOG_MEAN_ZERO

    def add_command_arguments(self, parser):
        parser.add_argument('--q', type=float, default=0.25)
        parser.add_argument('--terms', type=int,
                            help='Factors kept in the product for D_i.')

    def run(self, series, config, options):
        return example2_table(options['q'], config, options['terms'])
