from spectral.management.base import SpectralCommand
from spectral.tables import winding_table


class Command(SpectralCommand):
    help = 'Winding number of a symbol around the origin.'

    def run(self, phi, config, options):
        return winding_table(phi, config)

    def emit(self, table, options):
        self.stdout.write(str(table.summary['winding']))
