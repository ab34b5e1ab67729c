"""
JSON rendering of reports, studies and check results.
"""

import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)


def to_json(data):
    return json.dumps(data, indent=2, sort_keys=True)


def write_json(data, path):
    """
    Write a JSON document.

    Returns:
        Path: The written file
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(data) + "\n", encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def verdict(report, tol):
    """Report dictionary extended with the tolerance and the pass flag."""
    data = report.to_dict()
    data["tolerance"] = tol
    data["passed"] = report.passes(tol)
    return data


def residual_sidecar(csv_path):
    """Path of the residual report written next to an approximate grid."""
    csv_path = Path(csv_path)
    return csv_path.with_name(csv_path.stem + ".residual.json")
