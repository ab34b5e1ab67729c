"""
Version string in git-describe style.
"""

import logging
import subprocess
from pathlib import Path

__version__ = "0.3.0"

logger = logging.getLogger(__name__)

_REPO_ROOT = Path(__file__).resolve().parent.parent


def describe_version():
    """
    Return a git-describe-style version string.

    Falls back to "v<package version>" outside a git checkout.

    Returns:
        str: Version such as "v0.3.0-4-gabc1234-dirty"
    """
    try:
        result = subprocess.run(
            ["git", "describe", "--tags", "--always", "--dirty"],
            cwd=_REPO_ROOT,
            capture_output=True,
            text=True,
            timeout=5,
            check=True,
        )
    except (OSError, subprocess.SubprocessError) as exc:
        logger.debug("git describe unavailable: %s", exc)
        return f"v{__version__}"
    described = result.stdout.strip()
    if not described:
        return f"v{__version__}"
    if described.startswith("v"):
        return described
    # untagged checkout: only the abbreviated commit is known
    return f"v{__version__}-g{described}"
