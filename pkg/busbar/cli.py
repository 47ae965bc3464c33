"""
Command-line front end, run as

    python manage.py busbar <compute|sweep|timeseries|example|validate> ...

or through main(argv). Exit codes: 0 success, 1 domain or config error,
2 quadrature did not converge, 3 I/O error.
"""

import app_config
import logging
import os
import sys

from django.core.management.base import CommandError

from .examples import load_example
from .exceptions import ArgumentError, ConfigError, ConvergenceError, DomainError
from .forces import force, force_series, series_summary
from .forms import SWEEP, TIMESERIES
from .model import ADJACENT, NON_ADJACENT
from .output import emit, scalar_table, sweep_table, timeseries_table
from .runconfig import load_run_config, parse_run_config
from .sweep import run_sweep

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_CONVERGENCE = 2
EXIT_IO = 3

PROFILES = ('ci', 'acceptance')


def apply_profile(profile):
    """
    Switch app_config to a run profile and bring the package loggers to
    its level.
    """
    app_config.configure_targets(profile)

    for name in list(logging.root.manager.loggerDict):
        if name == 'busbar' or name.startswith('busbar.'):
            logging.getLogger(name).setLevel(app_config.LOG_LEVEL)


def compute_config(options):
    """
    Run config for the compute subcommand, validated like a config file.
    """
    data = {
        'mode': ADJACENT if options.get('h') is None else NON_ADJACENT,
        'geometry': {'a': options['a'], 'b': options['b'], 'd': options['d']},
        'currents': {'i1': options['i1'], 'i2': options['i2']},
        'method': {'name': options.get('method') or app_config.DEFAULT_METHOD},
        'output': {'format': options.get('format') or 'csv'},
    }

    if options.get('h') is not None:
        data['geometry']['h'] = options['h']

    if options.get('components'):
        data['components'] = list(options['components'])

    if options.get('output'):
        data['output']['path'] = options['output']

    for key in ('order', 'max_subdivisions', 'rel_tol', 'filament_n'):
        if options.get(key) is not None:
            data['method'][key] = options[key]

    return parse_run_config(data)


def expect_mode(config, *modes):
    if config.mode not in modes:
        raise ConfigError('mode: expected {0}, got {1!r}'.format(' or '.join(modes), config.mode))

    return config


def build_table(config):
    """
    Compute the results of a validated run config as an output table.
    """
    logger.info('%s run with %s', config.mode, config.method.describe())

    if config.mode == SWEEP:
        return sweep_table(config, run_sweep(config.sweep_config()))

    components = config.requested_components()

    if config.mode == TIMESERIES:
        forces = force_series(config.layout, config.series, components, config.method)
        summaries = {
            component: series_summary([getattr(f, 'f' + component) for f in forces], config.series)
            for component in components
        }

        return timeseries_table(config, forces, summaries)

    return scalar_table(config, force(config.layout, config.currents, config.method, components))


def run(config, stream=None):
    return emit(build_table(config), config.output, stream)


def describe_config(config):
    """
    One line summary of a valid config, for the validate subcommand.
    """
    if config.mode == SWEEP:
        points = len(config.sweep_config().grid())
    elif config.mode == TIMESERIES:
        points = len(config.series)
    else:
        points = 1

    return 'ok: {0} config, {1} point(s), method {2}'.format(config.mode, points, config.method.method)


def execute(subcommand, options, stream=None):
    """
    Run one subcommand. Library errors are turned into CommandError with
    the exit code of their class.
    """
    try:
        if subcommand == 'compute':
            config = compute_config(options)
        elif subcommand == 'example':
            config = load_example(options['name'])
        else:
            config = load_run_config(options['config'])

        if subcommand == 'validate':
            (stream or sys.stdout).write(describe_config(config) + '\n')
            return

        if subcommand in (SWEEP, TIMESERIES):
            expect_mode(config, subcommand)

        config = config.with_output(options.get('format'), options.get('output'))
        run(config, stream)
    except (DomainError, ArgumentError, ConfigError) as e:
        raise CommandError(str(e), returncode=EXIT_CONFIG)
    except ConvergenceError as e:
        raise CommandError(str(e), returncode=EXIT_CONVERGENCE)
    except OSError as e:
        raise CommandError('I/O error: {0}'.format(e), returncode=EXIT_IO)


def main(argv=None):
    """
    Run the busbar command with argv (sys.argv[1:] by default) and return
    its exit code.
    """
    import django

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    django.setup()

    from .management.commands.busbar import Command

    argv = sys.argv[1:] if argv is None else list(argv)

    try:
        Command().run_from_argv(['manage.py', 'busbar'] + argv)
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK

        return e.code if isinstance(e.code, int) else EXIT_CONFIG

    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
