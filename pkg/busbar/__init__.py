"""
Electrodynamic forces between two massive rectangular busbar conductors.
"""

import app_config

__version__ = app_config.VERSION
