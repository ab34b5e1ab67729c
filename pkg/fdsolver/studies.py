"""
Comparison of numerical runs with closed forms, and grid-refinement studies.
"""

import logging
from dataclasses import dataclass

import numpy as np

from fdsolver.config import BoundaryCondition, BoundaryKind
from fdsolver.solver import simulate
from utils.errors import DomainError, InvalidParameterError
from utils.finite_difference import observed_order

logger = logging.getLogger(__name__)

# errors below this count as the double-precision floor
ERROR_FLOOR = 1e-12


@dataclass(frozen=True)
class ComparisonReport:
    """
    Discrete norms of numeric minus exact, one entry per time level.

    Attributes:
        times (tuple): Time levels
        linf_u, linf_v (tuple): Max-norm errors
        l2_u, l2_v (tuple): sqrt(dx sum diff^2) errors
    """

    times: tuple
    linf_u: tuple
    linf_v: tuple
    l2_u: tuple
    l2_v: tuple

    @property
    def final_linf(self):
        return max(self.linf_u[-1], self.linf_v[-1])

    def to_dict(self):
        return {
            "times": list(self.times),
            "linf_u": list(self.linf_u),
            "linf_v": list(self.linf_v),
            "l2_u": list(self.l2_u),
            "l2_v": list(self.l2_v),
        }


def _window_mask(xs, x_window):
    if x_window is None:
        return np.ones_like(xs, dtype=bool)
    return (xs >= x_window[0]) & (xs <= x_window[1])


def compare(numeric, exact, x_window=None):
    """
    Error norms of a FieldGrid against an exact solution on its nodes.

    Args:
        numeric (FieldGrid): Numerical samples
        exact (ExactSolution): Reference solution
        x_window (tuple, optional): Restrict the norms to x0 <= x <= x1

    Returns:
        ComparisonReport: Norms per time level

    Raises:
        DomainError: If the exact solution is undefined on the grid
    """
    grid = numeric.grid
    u_exact, v_exact = exact.evaluate_grid(grid)
    mask = _window_mask(grid.xs, x_window)
    if not np.any(mask):
        raise DomainError(f"x window {x_window} contains no grid node")
    du = (numeric.u - u_exact)[:, mask]
    dv = (numeric.v - v_exact)[:, mask]
    scale = np.sqrt(grid.dx)
    return ComparisonReport(
        tuple(float(t) for t in grid.times),
        tuple(float(e) for e in np.max(np.abs(du), axis=1)),
        tuple(float(e) for e in np.max(np.abs(dv), axis=1)),
        tuple(float(e) for e in scale * np.sqrt(np.sum(du * du, axis=1))),
        tuple(float(e) for e in scale * np.sqrt(np.sum(dv * dv, axis=1))),
    )


@dataclass(frozen=True)
class ConvergenceStudy:
    """
    Final-time errors on nested grids.

    Attributes:
        dx (tuple): Spacing per level
        errors (tuple): Final-time max-norm error per level
        orders (tuple): Observed orders between consecutive levels
        floor_reached (bool): Errors at the double-precision floor, no order fitted
    """

    dx: tuple
    errors: tuple
    orders: tuple
    floor_reached: bool

    def to_dict(self):
        return {
            "dx": list(self.dx),
            "errors": list(self.errors),
            "orders": list(self.orders),
            "floor_reached": self.floor_reached,
        }


def convergence_study(params, sol, base_grid, levels=3, boundary=BoundaryKind.DIRICHLET_FROM_EXACT,
                      cfg=None, x_window=None):
    """
    Run the solver on nested refinements started from an exact solution.

    Args:
        params (ModelParams): Model coefficients
        sol (ExactSolution): Initial data, boundary data and reference
        base_grid (GridSpec): Coarsest grid
        levels (int): Number of grids, each halving dx
        boundary (BoundaryKind): Edge conditions
        cfg (SolverConfig, optional): Step controls
        x_window (tuple, optional): Error window

    Returns:
        ConvergenceStudy: Errors and observed orders

    Raises:
        InvalidParameterError: If levels < 2
        SolverError: Propagated from the runs
    """
    if levels < 2:
        raise InvalidParameterError("levels", f"need at least 2 levels, got {levels}")
    if boundary is BoundaryKind.DIRICHLET_FROM_EXACT:
        bc = BoundaryCondition.dirichlet(sol)
    else:
        bc = BoundaryCondition.neumann()
    spacings, errors = [], []
    for level in range(levels):
        grid = base_grid.refined(level)
        run = simulate(params, sol, bc, grid, cfg)
        report = compare(run, sol, x_window)
        spacings.append(grid.dx)
        errors.append(report.final_linf)
        logger.info("level %d: dx=%.4g error=%.3e", level, grid.dx, report.final_linf)
    floor_reached = max(errors) < ERROR_FLOOR
    orders = () if floor_reached else tuple(observed_order(errors))
    return ConvergenceStudy(tuple(spacings), tuple(errors), orders, floor_reached)
