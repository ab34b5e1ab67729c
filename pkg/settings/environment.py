"""
Environment-variable driven settings.
"""

import os
from pathlib import Path

OUTPUT_DIR_VARIABLE = "DHT_LAB_OUTPUT_DIR"
DEBUG_VARIABLE = "DHT_LAB_DEBUG"
DEFAULT_OUTPUT_DIR = "output"


def output_directory():
    """
    Resolve the default output directory.

    Returns:
        Path: Directory from DHT_LAB_OUTPUT_DIR, or ./output
    """
    return Path(os.environ.get(OUTPUT_DIR_VARIABLE) or DEFAULT_OUTPUT_DIR)


def debug_enabled():
    """Whether DHT_LAB_DEBUG asks for debug logging."""
    return os.environ.get(DEBUG_VARIABLE, "").strip().lower() in ("1", "true", "yes", "on")
