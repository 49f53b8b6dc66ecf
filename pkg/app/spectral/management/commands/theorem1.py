"""
Django command comparing finite-section inverses with the full inverse.
"""
from django.core.management.base import CommandError

from core.exceptions import SingularSection
from core.toeplitz import Probe
from spectral.management.base import SpectralCommand
from spectral.tables import DEFAULT_PROBES, theorem1_table


class Command(SpectralCommand):
    help = ('Errors of inv(T_n) against T(phi)^{-1} at the probes, with the '
            'calibrated decay bound.')

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--probe', action='append', dest='probes',
            help='Matrix position such as 0,0 or n,n; repeatable.',
        )

    def run(self, phi, config, options):
        probes = options['probes'] or DEFAULT_PROBES
        for probe in probes:
            try:
                Probe.parse(probe)
            except ValueError as exc:
                raise CommandError(str(exc))
        return theorem1_table(phi, config, probes)

    def finish(self, table, config, options):
        singular = table.summary['singular']
        if singular:
            raise CommandError(
                f'{SingularSection.__name__}: singular sections at n = '
                f'{", ".join(map(str, singular))}',
                returncode=SingularSection.exit_code,
            )
        if not table.summary['passed']:
            raise CommandError('Decay bound violated after calibration.')
