from core.config import NORMALIZE_LOG_MEAN_ZERO
from spectral.management.base import SpectralCommand
from spectral.tables import baxter_table


class Command(SpectralCommand):
    help = 'Partial sums of nu_n |Phi_n(0)| for the chosen Beurling weight.'
    default_normalize = NORMALIZE_LOG_MEAN_ZERO

    def run(self, w, config, options):
        return baxter_table(w, config)
