import sys

from django.core.management.base import BaseCommand, CommandError

import app_config

from busbar import cli
from busbar.forces import Method
from busbar.forms import FORMATS
from busbar.kernels import COMPONENTS


def _add_output_arguments(parser):
    parser.add_argument('--format', choices=FORMATS, help='Output format (default: csv, or the config\'s).')
    parser.add_argument('--output', help='Output file. Standard output when omitted.')


class Command(BaseCommand):
    help = 'Electrodynamic forces between two parallel rectangular busbars.'

    requires_system_checks = []

    def add_arguments(self, parser):
        # Usage errors exit 1 like config errors
        parser.called_from_command_line = False

        parser.add_argument('--profile', choices=cli.PROFILES, default='ci', help='Run profile (default: ci).')

        subparsers = parser.add_subparsers(dest='subcommand', required=True)

        compute = subparsers.add_parser('compute', help='Force for one geometry and one pair of currents.')
        compute.add_argument('--a', type=float, required=True, help='Conductor half-width in m.')
        compute.add_argument('--b', type=float, required=True, help='Conductor half-height in m.')
        compute.add_argument('--d', type=float, required=True, help='Horizontal centre distance in m.')
        compute.add_argument('--h', type=float, help='Vertical centre distance in m (non-adjacent only).')
        compute.add_argument('--i1', type=float, required=True, help='Current of conductor 1 in A.')
        compute.add_argument('--i2', type=float, required=True, help='Current of conductor 2 in A.')
        compute.add_argument('--method', choices=[m.value for m in Method], default=app_config.DEFAULT_METHOD)
        compute.add_argument('--components', nargs='+', choices=COMPONENTS)
        compute.add_argument('--order', type=int)
        compute.add_argument('--max-subdivisions', type=int)
        compute.add_argument('--rel-tol', type=float)
        compute.add_argument('--filament-n', type=int)
        _add_output_arguments(compute)

        for name, description in (
            ('sweep', 'Run a sweep config.'),
            ('timeseries', 'Run a time-series config.'),
        ):
            sub = subparsers.add_parser(name, help=description)
            sub.add_argument('--config', required=True, help='JSON run config.')
            _add_output_arguments(sub)

        example = subparsers.add_parser('example', help='Run a built-in example.')
        example.add_argument('name', choices=sorted(app_config.EXAMPLES))
        _add_output_arguments(example)

        validate = subparsers.add_parser('validate', help='Check a config without computing anything.')
        validate.add_argument('--config', required=True, help='JSON run config.')

    def run_from_argv(self, argv):
        try:
            super(Command, self).run_from_argv(argv)
        except CommandError as e:
            self.stderr.write('CommandError: {0}'.format(e))
            sys.exit(e.returncode)

    def handle(self, *args, **options):
        cli.apply_profile(options['profile'])
        cli.execute(options['subcommand'], options, self.stdout)
