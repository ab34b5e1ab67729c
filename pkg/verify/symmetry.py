"""
Infinitesimal invariance checks by first-order flow perturbation.

A generator with characteristic (Q1, Q2) maps a solution (u, v) to
(u + eps Q1, v + eps Q2) up to O(eps^2). The residual of the perturbed
pair is O(eps^2) for a symmetry and O(eps) otherwise, so the log-log
slope of residual against eps separates the two.
"""

import logging
from dataclasses import dataclass

import numpy as np

from models.solution import ExactSolution
from settings.defaults import (
    SYMMETRY_EPSILONS,
    SYMMETRY_FD_STEP,
    SYMMETRY_FLOOR_FACTOR,
    SYMMETRY_MIN_SLOPE,
)
from utils.errors import InvalidParameterError
from utils.finite_difference import log_log_slope
from verify.generators import admissible
from verify.jet import derivatives
from verify.residuals import interior_grid, residual_fields, stencil_margin

logger = logging.getLogger(__name__)


class FlowPerturbedSolution(ExactSolution):
    """
    (u + eps Q1, v + eps Q2) for a generator's characteristic, with the
    derivatives inside Q taken by finite differences of the base solution.
    """

    def __init__(self, base, gen, eps, h=SYMMETRY_FD_STEP):
        super().__init__(
            base.params, base.spec, base.domain, base.system,
            base.provenance + (f"flow({gen.tag}, eps={eps:g})",),
            approximate=True, verified=False,
        )
        self.base = base
        self.gen = gen
        self.eps = eps
        self.h = h

    def fields(self, t, x):
        values, d_t, d_x, _ = derivatives(self.base, t, x, self.h)
        u, v = values
        q1, q2 = self.gen.characteristic(
            np.asarray(t, dtype=float), np.asarray(x, dtype=float), u, v, d_t[0], d_t[1], d_x[0], d_x[1],
        )
        return u + self.eps * q1, v + self.eps * q2


@dataclass(frozen=True)
class SymmetryCheckResult:
    """
    Outcome of one infinitesimal check.

    Attributes:
        tag (str): Generator tag
        epsilons (tuple): Flow parameters, decreasing
        residuals (tuple): Residual sup-norm per epsilon
        floor (float): Noise floor, a multiple of the unperturbed residual
        slope (float): Fitted log-log slope over the usable points, None if floor-bound
        usable (tuple): Epsilons whose residual clears the floor
        floor_bound (bool): Fewer than two points clear the floor
        passed (bool): Slope >= the symmetry threshold, or floor-bound
        verdict (str): "quadratic", "fails", or "inconclusive" when floor-bound
        admissible (bool): Whether the coefficients admit the generator
    """

    tag: str
    epsilons: tuple
    residuals: tuple
    floor: float
    slope: float
    usable: tuple
    floor_bound: bool
    passed: bool
    admissible: bool

    @property
    def curve(self):
        return list(zip(self.epsilons, self.residuals))

    @property
    def verdict(self):
        if self.floor_bound:
            return "inconclusive"
        return "quadratic" if self.passed else "fails"

    def to_dict(self):
        return {
            "tag": self.tag,
            "epsilons": list(self.epsilons),
            "residuals": list(self.residuals),
            "floor": self.floor,
            "slope": self.slope,
            "usable": list(self.usable),
            "floor_bound": self.floor_bound,
            "passed": self.passed,
            "verdict": self.verdict,
            "admissible": self.admissible,
        }


def _sup(sol, grid, h, params):
    s1, s2 = residual_fields(sol, grid, h, params)
    return float(max(np.max(np.abs(s1)), np.max(np.abs(s2))))


def infinitesimal_symmetry_check(sol, gen, grid, params=None, epsilons=SYMMETRY_EPSILONS,
                                 h=SYMMETRY_FD_STEP, floor_factor=SYMMETRY_FLOOR_FACTOR,
                                 min_slope=SYMMETRY_MIN_SLOPE):
    """
    Estimate the order in eps of the residual of the perturbed solution.

    Args:
        sol (ExactSolution): Base solution, passing the residual gate
        gen (GeneratorSpec): Generator to test
        grid (GridSpec): Sample nodes
        params (ModelParams, optional): Coefficients, default sol.params
        epsilons (sequence): Positive, strictly decreasing flow parameters
        h (float): Difference step for both the characteristic and the residual
        floor_factor (float): Floor as a multiple of the unperturbed residual
        min_slope (float): Slope accepted as quadratic

    Returns:
        SymmetryCheckResult: Slope, curve and verdict

    Raises:
        InvalidParameterError: For bad epsilons
    """
    params = params or sol.params
    epsilons = tuple(float(eps) for eps in epsilons)
    if len(epsilons) < 2 or any(eps <= 0 for eps in epsilons):
        raise InvalidParameterError("epsilons", "need at least two positive values")
    if any(a <= b for a, b in zip(epsilons, epsilons[1:])):
        raise InvalidParameterError("epsilons", "must be strictly decreasing")

    margin = stencil_margin(sol, grid, 2.0 * h)
    inner = interior_grid(grid, margin) if margin != (0.0, 0.0) else grid
    floor = floor_factor * _sup(sol, inner, h, params)
    residuals = tuple(_sup(FlowPerturbedSolution(sol, gen, eps, h), inner, h, params) for eps in epsilons)
    usable = tuple(eps for eps, r in zip(epsilons, residuals) if r > floor)
    floor_bound = len(usable) < 2
    slope = None
    if not floor_bound:
        slope = log_log_slope(usable, [r for eps, r in zip(epsilons, residuals) if r > floor])
    passed = floor_bound or slope >= min_slope
    if floor_bound:
        logger.info("%s on %s stays at the noise floor %.3e, inconclusive", gen.tag, sol.label(), floor)
    else:
        logger.info("%s on %s: slope %.3f over eps in [%g, %g]", gen.tag, sol.label(), slope, usable[-1], usable[0])
    return SymmetryCheckResult(
        gen.tag, epsilons, residuals, floor, slope, usable, floor_bound, passed, admissible(gen.tag, params),
    )
