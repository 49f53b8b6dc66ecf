"""
Django command writing the Wiener-Hopf factors of a symbol.
"""
from spectral.management.base import SpectralCommand
from spectral.output import write_json
from spectral.tables import factorization_payload


class Command(SpectralCommand):
    help = 'Wiener-Hopf factors of a symbol as coefficient JSON.'

    def run(self, phi, config, options):
        return factorization_payload(phi, config)

    def emit(self, payload, options):
        if options.get('out'):
            with open(options['out'], 'w', encoding='utf-8') as handle:
                write_json(payload, handle)
        else:
            write_json(payload, self.stdout)
        self.report_stream(options).write(self.style.SUCCESS(
            'Reconstruction error '
            f'{payload["reconstruction_error"]:.3e}'
        ))
