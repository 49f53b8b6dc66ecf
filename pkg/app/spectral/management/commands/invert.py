from spectral.management.base import SpectralCommand
from spectral.tables import invert_table


class Command(SpectralCommand):
    help = 'Dense inverse of the finite section T_n of a symbol.'

    def add_command_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, dest='order',
                            help='Section order; the matrix is (n+1)x(n+1).')

    def run(self, phi, config, options):
        return invert_table(phi, options['order'])
