"""
Catalogue of solution families: metadata, construction and positivity scans.
"""

import logging
from dataclasses import asdict, dataclass, replace

import numpy as np

from models.params import close
from models.solution import Family
from solutions.conditional_families import (
    ConditionalEqualDiffusionSolution,
    ConditionalUnequalDiffusionSolution,
)
from solutions.lie_families import (
    AirySolution,
    ExpSeparableSolution,
    GaussianSourceSolution,
    PowerLawSolution,
    StationaryProfileSolution,
    SteadyStateSolution,
    TravellingWaveSolution,
)
from settings.defaults import EQUALITY_TOL
from utils.errors import ConstraintError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogueEntry:
    """
    Descriptive metadata of one family.

    Attributes:
        family (Family): Family tag
        title (str): Short name
        constraints (str): Required parameter relations
        source (str): Which construction produces the family
        forms (tuple): Accepted form names, the first is the default
        constants (tuple): Family constants accepted by the constructor
        domain (str): Validity domain summary
    """

    family: Family
    title: str
    constraints: str
    source: str
    forms: tuple
    constants: tuple
    domain: str

    def to_dict(self):
        data = asdict(self)
        data["family"] = self.family.value
        data["forms"] = list(self.forms)
        data["constants"] = list(self.constants)
        return data


CATALOGUE = (
    CatalogueEntry(
        Family.F1_POWER_LAW, "power law", "S=dR, d≠1, A=0",
        "fourth-order travelling reduction, special case phi phi'''' = phi''^2",
        ("primary",), ("power",), "x > 0",
    ),
    CatalogueEntry(
        Family.F2_EQUAL_DIFFUSION_TRAVELLING, "equal-diffusion travelling wave", "d=1, R≠S, A=0",
        "travelling reduction with v proportional to u",
        ("auto", "exponential", "sine", "linear"), ("alpha", "beta", "C1", "C2", "C0", "positive_lobe"),
        "all (t,x); sine lobes on request",
    ),
    CatalogueEntry(
        Family.F3_STATIONARY_PROFILE_LIFT, "stationary profile lift", "d≠1, dR≠S, A=0",
        "stationary profile phi'' = k^2 phi times e^{beta t}",
        ("auto", "exponential", "sine", "linear"), ("beta", "C1", "C2", "C0", "positive_lobe"),
        "all (t,x); sine lobes on request",
    ),
    CatalogueEntry(
        Family.F4_EXP_SEPARABLE, "exponential separable", "A=0; primary: γ≠0, R≠S",
        "Riccati closed forms for phi'/phi with u, v proportional to e^{beta x}",
        ("primary", "equal_rs", "gamma_zero"), ("beta", "C", "C1", "phi0", "t_ref"),
        "C + exp(-γt) > 0",
    ),
    CatalogueEntry(
        Family.F5_AIRY, "Airy profile", "d=1, α≠0, R≠S, A=0",
        "accelerating-frame reduction to the Airy equation",
        ("primary",), ("alpha", "C1", "C2"), "all (t,x); Bi finite when C2≠0",
    ),
    CatalogueEntry(
        Family.F6_GAUSSIAN_SOURCE, "Gaussian source", "d=1, R≠S, S≠1, t₀>0",
        "heat-kernel ansatz with Riccati closed form",
        ("shifted", "general"), ("t0", "C"), "t > -t0 (shifted), t > 0 (general)",
    ),
    CatalogueEntry(
        Family.F7_CONDITIONAL_UNEQUAL, "conditional, unequal diffusion", "d≠1, S>1, R=S, A=0",
        "first-type conditional symmetry with explicit f(t)",
        ("primary", "printed"), ("sign", "C"), "all (t,x); d>1: 3+(1-d)e^{2(S-1)t} > 0",
    ),
    CatalogueEntry(
        Family.F8_CONDITIONAL_EQUAL, "conditional, equal diffusion", "d=1, R=S, A=0",
        "first-type conditional symmetry with particular g, h",
        ("special", "general", "shifted", "simplified"), ("C", "C2", "C3", "t0", "x0"),
        "all (t,x); positive for C ≤ -(1/8)e^{(1-S)t0}, S>1",
    ),
)

TRANSFORM_KINDS = ("time_shift", "space_shift", "scale", "galilei", "gauge_exp")


def catalogue(family=None):
    """
    Catalogue entries, optionally restricted to one family.

    Args:
        family (Family, optional): Family to select

    Returns:
        list: Matching CatalogueEntry objects
    """
    return [entry for entry in CATALOGUE if family is None or entry.family is family]


def _build_f4(spec):
    p = spec.params
    beta = spec.constant("beta")
    gamma = 1.0 - p.S + (1.0 - p.d) * beta ** 2
    form = spec.form
    if form == "primary" and abs(gamma) <= EQUALITY_TOL:
        logger.info("F4 primary branch has gamma = 0; routing to the gamma_zero branch")
        form = "gamma_zero"
    elif form == "primary" and close(p.R, p.S):
        logger.info("F4 primary branch has R = S; routing to the equal_rs branch")
        form = "equal_rs"
    if form == "primary":
        return ExpSeparableSolution(spec)
    # sub-branches are lifted from the Riccati closed forms
    from reductions.riccati import ChiBranch, ChiBranchKind, chi_to_solution

    kinds = {"equal_rs": ChiBranchKind.EQUAL_RS, "gamma_zero": ChiBranchKind.GAMMA_ZERO}
    if form not in kinds:
        raise ConstraintError(f"F4 form must be primary, equal_rs or gamma_zero, got {form!r}")
    c1 = spec.constants.get("C1", spec.constants.get("C"))
    branch = ChiBranch(kinds[form], constant=spec.constant("C1", c1), beta=beta)
    return chi_to_solution(
        branch, p, phi0=spec.constant("phi0", 1.0), t_ref=spec.constant("t_ref", 0.0),
        spec=replace(spec, form=form),
    )


_BUILDERS = {
    Family.F1_POWER_LAW: PowerLawSolution,
    Family.F2_EQUAL_DIFFUSION_TRAVELLING: TravellingWaveSolution,
    Family.F3_STATIONARY_PROFILE_LIFT: StationaryProfileSolution,
    Family.F4_EXP_SEPARABLE: _build_f4,
    Family.F5_AIRY: AirySolution,
    Family.F6_GAUSSIAN_SOURCE: GaussianSourceSolution,
    Family.F7_CONDITIONAL_UNEQUAL: ConditionalUnequalDiffusionSolution,
    Family.F8_CONDITIONAL_EQUAL: ConditionalEqualDiffusionSolution,
    Family.STEADY_STATE: SteadyStateSolution,
}


def instantiate(spec):
    """
    Build the solution selected by a SolutionSpec.

    Args:
        spec (SolutionSpec): Family, form, parameters and constants

    Returns:
        ExactSolution: Evaluable solution with its domain attached

    Raises:
        ConstraintError: If a family constraint is violated
    """
    logger.debug("instantiating %s with %s %s", spec.label(), spec.params, spec.constants)
    return _BUILDERS[spec.family](spec)


def evaluate(sol, t, x):
    """Evaluate a solution at one point; see ExactSolution.evaluate."""
    return sol.evaluate(t, x)


def positivity_scan(sol, grid):
    """
    Check u >= 0 and v >= 0 on every grid node.

    Args:
        sol (ExactSolution): Solution to scan
        grid (GridSpec): Nodes, inside the solution's domain

    Returns:
        tuple: (ok, first_violation) where first_violation is None or
        (t, x, component) of the first negative value in row-major order
    """
    u, v = sol.evaluate_grid(grid)
    times, xs = grid.times, grid.xs
    for i in range(grid.nt):
        for j in range(grid.nx):
            for component, values in (("u", u), ("v", v)):
                if values[i, j] < 0:
                    return False, (float(times[i]), float(xs[j]), component)
    return True, None


def decay_ratio(sol, x_window, t_early, t_late, nx=201):
    """
    Ratio of the spatial maxima of u and v at a late and an early time.

    Returns:
        tuple: (u ratio, v ratio)
    """
    xs = np.linspace(x_window[0], x_window[1], nx)
    u_early, v_early = sol.fields(np.full_like(xs, t_early), xs)
    u_late, v_late = sol.fields(np.full_like(xs, t_late), xs)
    return (float(np.max(np.abs(u_late)) / np.max(np.abs(u_early))),
            float(np.max(np.abs(v_late)) / np.max(np.abs(v_early))))
