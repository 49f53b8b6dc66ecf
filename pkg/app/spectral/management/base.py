"""
Shared plumbing for the spectral management commands.
"""
import json
import logging

from django.core.management.base import BaseCommand, CommandError

from core.config import NORMALIZE_CHOICES, NORMALIZE_NONE
from core.exceptions import SpectralError
from spectral.output import format_value, write_table
from spectral.serializers import RunConfigSerializer, SymbolSpecSerializer
from spectral.tables import prepare_symbol

CONFIG_OPTIONS = ('band', 'grid', 'bo_size', 'nmin', 'nmax', 'weight',
                  'normalize')


class SpectralCommand(BaseCommand):
    """Base for commands that read a symbol, run a report and write a table."""
    needs_symbol = True
    default_normalize = NORMALIZE_NONE

    def add_arguments(self, parser):
        if self.needs_symbol:
            parser.add_argument(
                '--symbol', required=True,
                help='JSON file with the symbol specification.',
            )
        parser.add_argument(
            '--band', type=int,
            help='Half bandwidth N of symbol input and factor output.',
        )
        parser.add_argument('--grid', type=int,
                            help='FFT grid size M, a power of two.')
        parser.add_argument('--bo-size', type=int, dest='bo_size',
                            help='Initial truncation L of A^(n).')
        parser.add_argument('--nmin', type=int)
        parser.add_argument('--nmax', type=int)
        parser.add_argument('--weight',
                            help='Beurling weight: exp:G, poly:A or wiener.')
        parser.add_argument('--normalize', choices=NORMALIZE_CHOICES)
        parser.add_argument('--out', help='Output file; stdout if omitted.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        if options['verbosity'] >= 2:
            for name in ('core', 'spectral'):
                logging.getLogger(name).setLevel(logging.DEBUG)
        config = self.load_config(options)
        try:
            if self.needs_symbol:
                spec = self.load_symbol(options['symbol'], config)
                series, config = prepare_symbol(
                    spec, config, self.default_normalize)
            else:
                series = None
                config = config.with_normalize(self.default_normalize)
            result = self.run(series, config, options)
        except SpectralError as exc:
            raise CommandError(f'{exc.name}: {exc}',
                               returncode=exc.exit_code) from exc
        self.emit(result, options)
        self.finish(result, config, options)

    def load_config(self, options):
        data = {
            key: options[key] for key in CONFIG_OPTIONS
            if options.get(key) is not None
        }
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f'Invalid configuration: {serializer.errors}')
        return serializer.save()

    def load_symbol(self, path, config):
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except (OSError, ValueError) as exc:
            raise CommandError(f'Cannot read symbol file {path}: {exc}')
        serializer = SymbolSpecSerializer(
            data=data, context={'band': config.band})
        if not serializer.is_valid():
            raise CommandError(f'Invalid symbol: {serializer.errors}')
        return serializer.save()

    def run(self, series, config, options):
        raise NotImplementedError

    def report_stream(self, options):
        """Summaries go to stderr when the table itself is on stdout."""
        return self.stdout if options.get('out') else self.stderr

    def emit(self, table, options):
        if options.get('out'):
            with open(options['out'], 'w', newline='',
                      encoding='utf-8') as handle:
                write_table(table, handle)
        else:
            write_table(table, self.stdout)
        stream = self.report_stream(options)
        for key, value in table.summary.items():
            if isinstance(value, dict):
                value = ', '.join(
                    f'{name}={format_value(item)}'
                    for name, item in value.items())
            elif isinstance(value, list):
                value = ' '.join(format_value(item) for item in value)
            else:
                value = format_value(value)
            stream.write(f'{key}: {value}')

    def finish(self, result, config, options):
        """Raise CommandError for runs whose output fails its check."""
