"""
Grid data behind the six surface figures.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

from models.grid import FieldGrid, GridSpec
from models.params import ModelParams
from models.solution import Family, SolutionSpec
from settings.defaults import FIGURE_WINDOW, FIGURE_WINDOW_WIDE
from solutions.catalogue import instantiate
from superpose.superposition import SUPERPOSITION_GUARD, SuperpositionSpec, build
from utils.errors import InvalidParameterError
from verify.residuals import residual_report
from views.csv_writer import write_component
from views.report_view import residual_sidecar, write_json

logger = logging.getLogger(__name__)

FIG5_SHIFTS = ((-1.0, -30.0), (0.0, 0.0), (1.0, 30.0))


@dataclass(frozen=True)
class FigureSpec:
    """
    Attributes:
        number (int): Figure number, 1..6
        caption (str): Parameter summary
        window (tuple): Default (t0, t1, nt, x0, x1, nx)
        components (tuple): Components written, each to its own file
    """

    number: int
    caption: str
    window: tuple
    components: tuple

    def solution(self):
        n = self.number
        if n in (1, 2):
            R = 1.5 if n == 1 else 0.5
            params = ModelParams(A=0.0, R=R, S=3.0, d=1.0)
            return instantiate(SolutionSpec(Family.F6_GAUSSIAN_SOURCE, params, {"t0": 0.1}, form="shifted"))
        if n in (3, 4):
            S, C = (2.0, -0.25) if n == 3 else (1.4, -0.125)
            params = ModelParams(A=0.0, R=S, S=S, d=1.0)
            return instantiate(SolutionSpec(Family.F8_CONDITIONAL_EQUAL, params, {"C": C}, form="special"))
        return build(SuperpositionSpec(2.0, -0.35, FIG5_SHIFTS))


FIGURES = {
    1: FigureSpec(1, "F6 shifted, d=1, S=3, R=1.5, t0=0.1", FIGURE_WINDOW, ("u", "v")),
    2: FigureSpec(2, "F6 shifted, d=1, S=3, R=0.5, t0=0.1", FIGURE_WINDOW, ("u", "v")),
    3: FigureSpec(3, "F8 special, S=2, C=-0.25", FIGURE_WINDOW, ("u", "v")),
    4: FigureSpec(4, "F8 special, S=1.4, C=-0.125", FIGURE_WINDOW, ("u", "v")),
    5: FigureSpec(5, "U of the three-peak superposition, S=2, C=-0.35", FIGURE_WINDOW_WIDE, ("u",)),
    6: FigureSpec(6, "V of the three-peak superposition, S=2, C=-0.35", FIGURE_WINDOW_WIDE, ("v",)),
}


def figure_grid(number, grid=None):
    """
    Sample the solution of a figure.

    Returns:
        tuple: (FigureSpec, ExactSolution, FieldGrid)
    """
    if number not in FIGURES:
        raise InvalidParameterError("figure", f"must be one of 1..6, got {number}")
    figure = FIGURES[number]
    grid = grid or GridSpec(*figure.window)
    sol = figure.solution()
    return figure, sol, FieldGrid.from_solution(sol, grid)


def write_figure(number, out_dir, grid=None):
    """
    Write the CSV files of one figure, plus a residual report for approximate data.

    Returns:
        list: Written paths
    """
    figure, sol, samples = figure_grid(number, grid)
    out_dir = Path(out_dir)
    written = []
    for component in figure.components:
        path = write_component(samples, component, out_dir / f"figure{number}_{component}.csv")
        written.append(path)
        if sol.approximate:
            report = residual_report(sol, samples.grid, guard=SUPERPOSITION_GUARD)
            written.append(write_json(report.to_dict(), residual_sidecar(path)))
    logger.info("figure %d: %s", number, figure.caption)
    return written
