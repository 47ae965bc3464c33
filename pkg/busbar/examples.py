"""
Built-in example configs.

The configs live in confs/ as Jinja2 templates rendered with the
app_config context, so the examples follow the configured defaults.
"""

import app_config
import copy
import logging
import math
import os

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from .exceptions import ConfigError
from .runconfig import loads_run_config

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _environment():
    return Environment(
        loader=FileSystemLoader(os.path.join(BASE_DIR, app_config.CONFS_PATH)),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
    )


def _context():
    context = copy.copy(app_config.__dict__)
    context['pi'] = math.pi

    return context


def render_example(name):
    """
    Rendered JSON text of example name ('1', '2' or '3').
    """
    try:
        template_name = app_config.EXAMPLES[str(name)]
    except KeyError:
        raise ConfigError('unknown example {0!r}, expected one of {1}'.format(
            name, ', '.join(sorted(app_config.EXAMPLES))
        ))

    return _environment().get_template(template_name).render(**_context())


def load_example(name):
    return loads_run_config(render_example(name), 'example {0}'.format(name))


def render_examples(path):
    """
    Write every rendered example config into path. Returns the written
    paths.
    """
    os.makedirs(path, exist_ok=True)
    written = []

    for name, template_name in sorted(app_config.EXAMPLES.items()):
        rendered_path = os.path.join(path, template_name)

        with open(rendered_path, 'w') as f:
            f.write(render_example(name))

        logger.info('rendered example %s to %s', name, rendered_path)
        written.append(rendered_path)

    return written
