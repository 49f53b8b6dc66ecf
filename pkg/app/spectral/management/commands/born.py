from core.config import NORMALIZE_LOG_MEAN_ZERO
from spectral.management.base import SpectralCommand
from spectral.tables import born_table


class Command(SpectralCommand):
    help = ('Differences Phi_n(0) - (r^{-1})_{-n}, their nu^3-weighted sums '
            'and the fitted decay ratio.')
    default_normalize = NORMALIZE_LOG_MEAN_ZERO

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--pole', type=float,
            help='Real pole of S; adds the residue estimate columns.',
        )

    def run(self, w, config, options):
        return born_table(w, config, options['pole'])
