"""
Approximate multi-peak solutions built from shifted equal-diffusion Gaussians.
"""

import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np

from models.params import ModelParams
from models.solution import ExactSolution, Family, SolutionSpec
from settings.defaults import FD_STEP, SPACING_TIME_OFFSET
from solutions.catalogue import instantiate
from utils.errors import ConstraintError, InvalidParameterError
from verify.residuals import residual_report

logger = logging.getLogger(__name__)

# peaks decay like exp(-(S-1) x^2 / 8); far tails underflow long before u + A vanishes
SUPERPOSITION_GUARD = 1e-300


@dataclass(frozen=True)
class SuperpositionSpec:
    """
    Parameters of a multi-peak superposition.

    Attributes:
        S (float): Predator rate, S > 1 (R = S, d = 1, A = 0)
        C (float): Constant of the special equal-diffusion solution
        shifts (tuple): (t_i, x_i) pairs, one per peak
    """

    S: float
    C: float
    shifts: tuple

    def __post_init__(self):
        if not self.S > 1:
            raise ConstraintError(f"superposition requires S > 1, got {self.S:g}")
        if not self.shifts:
            raise InvalidParameterError("shifts", "need at least one (t, x) shift")
        shifts = tuple((float(t), float(x)) for t, x in self.shifts)
        object.__setattr__(self, "shifts", shifts)

    @property
    def params(self):
        return ModelParams(A=0.0, R=self.S, S=self.S, d=1.0)

    def positivity_bound(self):
        """Largest C keeping every term positive: -(1/8) e^{(1-S) min t_i}."""
        return -0.125 * math.exp((1.0 - self.S) * min(t for t, _ in self.shifts))

    def positive(self):
        return self.C <= self.positivity_bound()

    def min_spacing(self):
        xs = [x for _, x in self.shifts]
        if len(xs) < 2:
            return math.inf
        return min(abs(a - b) for a, b in itertools.combinations(xs, 2))

    def to_dict(self):
        return {"S": self.S, "C": self.C, "shifts": [list(pair) for pair in self.shifts]}

    @classmethod
    def from_dict(cls, data):
        return cls(data["S"], data["C"], tuple(tuple(pair) for pair in data["shifts"]))


class SuperpositionSolution(ExactSolution):
    """
    U = sum_i u(t + t_i, x + x_i), V = sum_i v(t + t_i, x + x_i).

    Flagged approximate unless it has a single term.
    """

    def __init__(self, spec):
        self.superposition = spec
        params = spec.params
        self.term = instantiate(SolutionSpec(Family.F8_CONDITIONAL_EQUAL, params, {"C": spec.C}, form="special"))
        shifts = ", ".join(f"({t:g},{x:g})" for t, x in spec.shifts)
        super().__init__(
            params,
            provenance=(f"superposition(S={spec.S:g}, C={spec.C:g}, shifts=[{shifts}])",),
            approximate=len(spec.shifts) > 1,
        )

    def fields(self, t, x):
        total_u = total_v = 0.0
        for ti, xi in self.superposition.shifts:
            u, v = self.term.fields(t + ti, x + xi)
            total_u = total_u + u
            total_v = total_v + v
        return total_u, total_v

    def describe(self):
        data = super().describe()
        data["superposition"] = self.superposition.to_dict()
        return data


def build(spec):
    """
    Build the superposition of a SuperpositionSpec.

    Logs a warning when C lies outside the positivity regime.

    Returns:
        SuperpositionSolution: Evaluable, approximate for more than one peak
    """
    if not spec.positive():
        logger.warning(
            "C=%g exceeds the positivity bound %.6g; terms may turn negative",
            spec.C, spec.positivity_bound(),
        )
    logger.debug("superposing %d peaks with S=%g, C=%g", len(spec.shifts), spec.S, spec.C)
    return SuperpositionSolution(spec)


@dataclass(frozen=True)
class SpacingResidualCurve:
    """
    Residual sup-norm of two-peak superpositions against peak spacing.

    Attributes:
        points (tuple): (spacing, residual) pairs in the order requested
        time_offset (float): Time shift of the second peak
    """

    points: tuple
    time_offset: float = SPACING_TIME_OFFSET

    @property
    def spacings(self):
        return [s for s, _ in self.points]

    @property
    def residuals(self):
        return [r for _, r in self.points]

    def decreasing(self, floor=0.0):
        """Whether residuals fall with spacing, ignoring pairs both below floor."""
        ordered = sorted(self.points)
        return all(
            b < a or max(a, b) <= floor
            for (_, a), (_, b) in zip(ordered, ordered[1:])
        )

    def to_dict(self):
        return {"time_offset": self.time_offset, "points": [list(p) for p in self.points]}


def spacing_residual_curve(S, C, spacings, grid, time_offset=SPACING_TIME_OFFSET, h=FD_STEP):
    """
    Residual of two-peak superpositions for each spacing.

    The second peak is shifted by (time_offset, spacing); with no time
    offset and zero spacing the two terms coincide and the sum is an exact
    rescaling.

    Args:
        S (float): Predator rate, S > 1
        C (float): Special-solution constant
        spacings (sequence): Peak separations, non-negative
        grid (GridSpec): Sample nodes
        time_offset (float): Time shift of the second peak
        h (float): Difference step

    Returns:
        SpacingResidualCurve: One point per spacing
    """
    if any(s < 0 for s in spacings):
        raise InvalidParameterError("spacings", "must be non-negative")
    points = []
    for spacing in spacings:
        sol = build(SuperpositionSpec(S, C, ((0.0, 0.0), (time_offset, float(spacing)))))
        report = residual_report(sol, grid, h, guard=SUPERPOSITION_GUARD)
        points.append((float(spacing), report.linf))
        logger.info("spacing %g: residual %.3e", spacing, report.linf)
    return SpacingResidualCurve(tuple(points), time_offset)


def pairwise_residual_bound(spec, grid, h=FD_STEP):
    """
    (m - 1) times the worst two-peak residual over all pairs of shifts.
    """
    m = len(spec.shifts)
    if m < 2:
        return 0.0
    worst = 0.0
    for a, b in itertools.combinations(spec.shifts, 2):
        sol = build(SuperpositionSpec(spec.S, spec.C, (a, b)))
        worst = max(worst, residual_report(sol, grid, h, guard=SUPERPOSITION_GUARD).linf)
    return (m - 1) * worst


def peak_count(values, rel_threshold=1e-3):
    """
    Number of strict interior local maxima above rel_threshold times the maximum.
    """
    values = np.asarray(values, dtype=float)
    level = rel_threshold * np.max(values)
    inner = values[1:-1]
    peaks = (inner > values[:-2]) & (inner > values[2:]) & (inner > level)
    return int(np.count_nonzero(peaks))
