"""
CSV rendering of sampled fields.
"""

import csv
import logging
from pathlib import Path

from settings.defaults import CSV_DIGITS

logger = logging.getLogger(__name__)


def format_number(value, digits=CSV_DIGITS):
    """Fixed significant-digit text for a float."""
    return f"{float(value):.{digits}g}"


def _open(path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path.open("w", newline="", encoding="utf-8")


def write_rows(stream, header, rows, digits=CSV_DIGITS):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(value, digits) for value in row])


def write_field_grid(field_grid, path, digits=CSV_DIGITS):
    """
    Write a FieldGrid as t,x,u,v rows in row-major order.

    Args:
        field_grid (FieldGrid): Samples to write
        path (str or Path): Output file, parent directories are created
        digits (int): Significant digits

    Returns:
        Path: The written file
    """
    with _open(path) as stream:
        write_rows(stream, ("t", "x", "u", "v"), field_grid.rows(), digits)
    logger.info("wrote %s", path)
    return Path(path)


def write_component(field_grid, component, path, digits=CSV_DIGITS):
    """
    Write one component as t,x,<component> rows.

    Args:
        field_grid (FieldGrid): Samples
        component (str): "u" or "v"
        path (str or Path): Output file

    Returns:
        Path: The written file
    """
    index = {"u": 2, "v": 3}[component]
    rows = ((row[0], row[1], row[index]) for row in field_grid.rows())
    with _open(path) as stream:
        write_rows(stream, ("t", "x", component), rows, digits)
    logger.info("wrote %s", path)
    return Path(path)


def sample_line(t, x, sample, digits=CSV_DIGITS):
    """One t,x,u,v line for a single evaluation."""
    return ",".join(format_number(value, digits) for value in (t, x, sample.u, sample.v))
