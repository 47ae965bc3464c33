#!/usr/bin/env python

"""
Commands that render and run the built-in examples.
"""

import logging
import os

from fabric.api import hide, local, settings, task
from fabric.state import env
from slugify import slugify

import app_config

# django setup
from fabric.contrib import django
django.settings_module('config.settings')
import django
django.setup()
from busbar.examples import render_examples

logging.basicConfig(format=app_config.LOG_FORMAT)
logger = logging.getLogger(__name__)
logger.setLevel(app_config.LOG_LEVEL)


def _get_output_path(name, extension, path=None):
    """
    Derive the path of the output of an example.
    """
    filename = slugify('{0} example {1}'.format(app_config.PROJECT_SLUG, name))

    return os.path.join(path or app_config.OUTPUT_PATH, '{0}.{1}'.format(filename, extension))


def _run_example(name, format, path=None):
    output_path = _get_output_path(name, format, path)

    local('python manage.py busbar --profile %s example %s --format %s --output %s' % (
        env.get('settings', 'ci'), name, format, output_path
    ))

    return output_path

@task
def render(path=None):
    """
    Render the example configs from confs/ with the current profile.
    """
    render_examples(os.path.join(path or app_config.OUTPUT_PATH, 'confs'))

@task
def run(format='csv', path=None):
    """
    Run every built-in example into the output folder.
    """
    with settings(warn_only=True):
        local('mkdir -p %s' % (path or app_config.OUTPUT_PATH))

    for name in sorted(app_config.EXAMPLES):
        output_path = _run_example(name, format, path)
        logger.info('example %s written to %s', name, output_path)

@task
def check_determinism(format='csv'):
    """
    Run every example twice and compare the outputs byte for byte.
    """
    first = os.path.join(app_config.OUTPUT_PATH, 'first')
    second = os.path.join(app_config.OUTPUT_PATH, 'second')

    run(format, first)
    run(format, second)

    failed = []

    for name in sorted(app_config.EXAMPLES):
        with settings(warn_only=True), hide('output', 'running'):
            result = local('cmp -s %s %s' % (
                _get_output_path(name, format, first), _get_output_path(name, format, second)
            ))

        if result.failed:
            failed.append(name)

    if failed:
        logger.error('examples %s are not deterministic', ', '.join(failed))
    else:
        logger.info('every example produced identical output twice')
