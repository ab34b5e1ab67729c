"""
Invariant surface conditions of the two conditional symmetries.
"""

import logging

import numpy as np

from settings.defaults import FD_STEP
from verify.jet import fd_jet_grid

logger = logging.getLogger(__name__)


def _row_jets(sol, grid, h):
    xs = grid.xs
    for t in grid.times:
        yield float(t), xs, fd_jet_grid(sol, np.full_like(xs, t), xs, h)


def invariant_surface_check(sol, f, grid, h=FD_STEP):
    """
    Deviation from u_x = f u and v_x = f v - (f'/S) u.

    Args:
        sol (ExactSolution): Candidate solution
        f (callable): t -> (f, f'), closed form or from a trajectory
        grid (GridSpec): Sample nodes
        h (float): Difference step

    Returns:
        tuple: (e1, e2) sup-norm deviations
    """
    S = sol.params.S
    e1 = e2 = 0.0
    for t, xs, jet in _row_jets(sol, grid, h):
        f_value, f_prime = f(t)
        e1 = max(e1, float(np.max(np.abs(jet.ux - f_value * jet.u))))
        e2 = max(e2, float(np.max(np.abs(jet.vx - f_value * jet.v + f_prime / S * jet.u))))
    logger.debug("invariant surface deviation of %s: %.3e, %.3e", sol.label(), e1, e2)
    return e1, e2


def invariant_surface_check_caseII(sol, gh, grid, h=FD_STEP):
    """
    Deviation from the equal-diffusion conditions

        2 g u_x = (2h - g' x) u
        2 g v_x = (2h - g' x) v - (2h' - g'' x) u / S

    Args:
        sol (ExactSolution): Candidate solution
        gh (callable): t -> (g, g', g'', h, h')
        grid (GridSpec): Sample nodes
        h (float): Difference step

    Returns:
        tuple: (e1, e2) sup-norm deviations
    """
    S = sol.params.S
    e1 = e2 = 0.0
    for t, xs, jet in _row_jets(sol, grid, h):
        g, gp, gpp, h_value, hp = gh(t)
        slope = 2.0 * h_value - gp * xs
        e1 = max(e1, float(np.max(np.abs(2.0 * g * jet.ux - slope * jet.u))))
        e2 = max(e2, float(np.max(np.abs(
            2.0 * g * jet.vx - slope * jet.v + (2.0 * hp - gpp * xs) / S * jet.u
        ))))
    logger.debug("equal-diffusion surface deviation of %s: %.3e, %.3e", sol.label(), e1, e2)
    return e1, e2
