#!/usr/bin/env python

"""
Project-wide application configuration.

Numeric defaults live here so the management command, the Fabric tasks
and the tests all agree on them. Physical constants do not: see
busbar.model.
"""

import logging

"""
NAMES
"""
# Project name to be used in output file names
# Use dashes, not underscores!
PROJECT_SLUG = 'busbar-forces'

VERSION = '1.0.0'

"""
NUMERICS
"""
# One of 'closed-form', 'reduced-quadrature', 'direct-4d', 'filament', 'thin-wire'
DEFAULT_METHOD = 'closed-form'

# Gauss-Legendre points per panel per dimension
QUADRATURE_ORDER = 32
QUADRATURE_MAX_SUBDIVISIONS = 6
QUADRATURE_REL_TOL = 1e-10

# Filaments per direction per conductor, set by configure_targets()
FILAMENT_N_CI = 128
FILAMENT_N_ACCEPTANCE = 256

"""
OUTPUT
"""
# 9 significant digits
NUMBER_FORMAT = '{0:.8e}'
FORCE_UNITS = 'N/m'
OUTPUT_PATH = 'output'
CONFS_PATH = 'confs'

# Built-in example confs, rendered from confs/ by busbar.examples
EXAMPLES = {
    '1': 'example1.json',
    '2': 'example2.json',
    '3': 'example3.json',
}

# These variables will be set at runtime. See configure_targets() below
FILAMENT_N = None
DEBUG = True

"""
Logging
"""
LOG_FORMAT = '%(levelname)s:%(name)s:%(asctime)s: %(message)s'


"""
Utilities
"""
def configure_targets(profile):
    """
    Configure run profiles. Abstracted so the CLI and the fabfile can
    switch profile after import.
    """
    global FILAMENT_N
    global DEBUG
    global PROFILE
    global LOG_LEVEL

    if profile == 'acceptance':
        FILAMENT_N = FILAMENT_N_ACCEPTANCE
        LOG_LEVEL = logging.WARNING
        DEBUG = False
    else:
        FILAMENT_N = FILAMENT_N_CI
        LOG_LEVEL = logging.INFO
        DEBUG = True

    PROFILE = profile or 'ci'

"""
Run automated configuration
"""
configure_targets(None)
