import app_config

from fabric.api import local, task
from fabric.state import env

# Other fabfiles
from . import examples

"""
Profiles
Changing profile changes the filament resolution of the
oracle and the log level.
"""
env.settings = 'ci'

@task
def ci():
    """
    Run with the fast filament oracle (N = 128).
    """
    env.settings = 'ci'
    app_config.configure_targets(env.settings)

@task
def acceptance():
    """
    Run with the acceptance filament oracle (N = 256).
    """
    env.settings = 'acceptance'
    app_config.configure_targets(env.settings)

"""
Tests
"""
@task
def tests(label='busbar'):
    """
    Run the test suite.
    """
    local('python manage.py test %s' % label)
