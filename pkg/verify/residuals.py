"""
Residual reports over grids and their convergence with the difference step.
"""

import logging
from dataclasses import dataclass

import numpy as np

from models.jet import residual
from models.report import ResidualReport
from settings.defaults import FD_STEP, SINGULAR_GUARD
from utils.errors import DomainError
from utils.finite_difference import observed_order
from utils.version import describe_version
from verify.jet import fd_jet_grid, scaled_step

logger = logging.getLogger(__name__)


def interior_grid(grid, margin):
    """Grid inset by margin = (t_margin, x_margin) on every side."""
    return grid.inset(*margin)


def _mesh(grid):
    return np.meshgrid(grid.times, grid.xs, indexing="ij")


def stencil_margin(sol, grid, h):
    """
    Margin that keeps every difference stencil of the grid inside the domain.

    Nodes themselves must already be inside; only the directions whose
    stencils leave the domain get a margin of 2 h max(1, |t|, |x|).

    Returns:
        tuple: (t_margin, x_margin)

    Raises:
        DomainError: If a node lies outside the domain
    """
    tt, xx = _mesh(grid)
    sol.domain.check(tt, xx)
    reach = 2.0 * float(np.max(scaled_step(h, tt, xx))) * (1.0 + 1e-9)
    t_margin = x_margin = 0.0
    for k in (-reach, reach):
        if not np.all(sol.domain.mask(tt + k, xx)):
            t_margin = reach
        if not np.all(sol.domain.mask(tt, xx + k)):
            x_margin = reach
    return t_margin, x_margin


def residual_fields(sol, grid, h=FD_STEP, params=None, guard=SINGULAR_GUARD, extrapolate=False):
    """
    Pointwise residual arrays (s1, s2) on the grid nodes.
    """
    params = params or sol.params
    tt, xx = _mesh(grid)
    jet = fd_jet_grid(sol, tt, xx, h, extrapolate)
    return residual(params, jet, sol.system, guard)


def residual_report(sol, grid, h=FD_STEP, params=None, guard=SINGULAR_GUARD,
                    auto_margin=True, extrapolate=False):
    """
    Residual norms of a solution over a grid.

    Args:
        sol (ExactSolution): Solution to check
        grid (GridSpec): Requested nodes
        h (float): Base difference step
        params (ModelParams, optional): Coefficients to test against, default sol.params
        guard (float): Singular-denominator threshold
        auto_margin (bool): Shrink the grid so that stencils stay in the domain
        extrapolate (bool): Richardson-extrapolate the derivatives

    Returns:
        ResidualReport: Norms, worst node and the sampled grid

    Raises:
        DomainError: If a node or stencil leaves the domain
    """
    margin = (0.0, 0.0)
    if auto_margin:
        margin = stencil_margin(sol, grid, h * (2.0 if extrapolate else 1.0))
        if margin != (0.0, 0.0):
            logger.info("residual grid inset by margin (t=%g, x=%g) for %s", *margin, sol.label())
            try:
                grid = interior_grid(grid, margin)
            except ValueError as exc:
                raise DomainError(f"grid too small for stencil margin {margin}: {exc}") from exc
    s1, s2 = residual_fields(sol, grid, h, params, guard, extrapolate)
    a1, a2 = np.abs(s1), np.abs(s2)
    worst = np.maximum(a1, a2)
    i, j = np.unravel_index(int(np.argmax(worst)), worst.shape)
    report = ResidualReport(
        linf_s1=float(np.max(a1)),
        linf_s2=float(np.max(a2)),
        l2_s1=float(np.sqrt(np.mean(s1 * s1))),
        l2_s2=float(np.sqrt(np.mean(s2 * s2))),
        argmax=(float(grid.times[i]), float(grid.xs[j])),
        fd_step=h,
        grid=grid,
        margin=margin,
        provenance=sol.describe(),
        version=describe_version(),
    )
    logger.debug("residual of %s: linf=%.3e at %s", sol.label(), report.linf, report.argmax)
    return report


@dataclass(frozen=True)
class StepConvergence:
    """
    Residual sup-norms at successively halved difference steps.

    Attributes:
        steps (tuple): Difference steps, decreasing
        linf (tuple): Residual sup-norm at each step
        orders (tuple): Observed orders between consecutive steps
    """

    steps: tuple
    linf: tuple
    orders: tuple

    def to_dict(self):
        return {"steps": list(self.steps), "linf": list(self.linf), "orders": list(self.orders)}


def step_convergence(sol, grid, steps=(4e-2, 2e-2, 1e-2), params=None):
    """
    Residual of a solution for each difference step.

    Steps must halve from one entry to the next.

    Returns:
        StepConvergence: Norms and observed orders
    """
    steps = tuple(sorted(steps, reverse=True))
    margin = stencil_margin(sol, grid, steps[0])
    inner = interior_grid(grid, margin) if margin != (0.0, 0.0) else grid
    norms = []
    for h in steps:
        s1, s2 = residual_fields(sol, inner, h, params)
        norms.append(float(max(np.max(np.abs(s1)), np.max(np.abs(s2)))))
    orders = tuple(observed_order(norms, steps[0] / steps[1])) if len(steps) > 1 else ()
    logger.debug("step convergence of %s: %s", sol.label(), norms)
    return StepConvergence(steps, tuple(norms), orders)
