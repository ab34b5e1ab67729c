"""
Text and JSON rendering of the solution catalogue.
"""


def render_catalogue(entries, transform_kinds=()):
    """
    Catalogue as an aligned text table.

    Args:
        entries (list): CatalogueEntry objects
        transform_kinds (sequence): Transform names listed after the table

    Returns:
        str: Table text
    """
    header = ("family", "title", "constraints", "forms")
    rows = [(e.family.value, e.title, e.constraints, ",".join(e.forms)) for e in entries]
    widths = [max(len(str(row[k])) for row in [header] + rows) for k in range(len(header))]
    lines = ["  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip()
             for row in [header] + rows]
    if transform_kinds:
        lines.append("")
        lines.append("transforms: " + ", ".join(transform_kinds))
    return "\n".join(lines)


def catalogue_data(entries, transform_kinds=()):
    return {"families": [e.to_dict() for e in entries], "transforms": list(transform_kinds)}
