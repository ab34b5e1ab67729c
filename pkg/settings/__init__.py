"""
Numeric defaults and environment settings.
"""

from settings.defaults import *  # noqa: F401,F403
from settings.environment import debug_enabled, output_directory  # noqa: F401
