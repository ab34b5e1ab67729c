"""
Closed forms against adaptive integration from matching initial data.

Errors are reported relative to the sup-norm of the closed form over the
sampled span.
"""

import logging
from dataclasses import dataclass

import numpy as np

from models.params import ModelParams
from models.solution import Family, SolutionSpec
from reductions.cases import ReductionCase, ReductionKind
from reductions.conditional import caseI_pipeline, f_solve, gh_solve
from reductions.integrate import integrate
from reductions.riccati import ChiLiftSolution, chi_closed_form, riccati_rhs
from solutions.catalogue import instantiate
from solutions.conditional_families import case_ii_phi_psi, f_closed_form, gh_particular

logger = logging.getLogger(__name__)

ORACLES = ("chi", "chi-lift", "f", "gh", "phi-psi", "pipeline")


@dataclass(frozen=True)
class OracleComparison:
    """
    Agreement between a closed form and its integrated counterpart.

    Attributes:
        name (str): Which oracle
        span (tuple): Interval of the comparison
        max_rel_error (float): max |numeric - exact| / max |exact|
        samples (int): Number of comparison points
    """

    name: str
    span: tuple
    max_rel_error: float
    samples: int

    def passes(self, tol):
        return self.max_rel_error <= tol

    def to_dict(self):
        return {
            "oracle": self.name,
            "span": list(self.span),
            "max_rel_error": self.max_rel_error,
            "samples": self.samples,
        }


def _relative(numeric, exact):
    numeric, exact = np.atleast_2d(numeric), np.atleast_2d(exact)
    worst = 0.0
    for row_n, row_e in zip(numeric, exact):
        scale = np.max(np.abs(row_e))
        worst = max(worst, float(np.max(np.abs(row_n - row_e)) / scale))
    return worst


def _report(name, span, numeric, exact):
    comparison = OracleComparison(name, tuple(span), _relative(numeric, exact), np.shape(np.atleast_2d(exact))[1])
    logger.info("%s oracle on %s: max relative error %.3e", name, span, comparison.max_rel_error)
    return comparison


def chi_oracle(branch, params, span, samples=51):
    """chi closed form against the integrated Riccati equation."""
    t0, t1 = span
    chi0 = chi_closed_form(branch, params, t0)
    trajectory = integrate(lambda t, y: [riccati_rhs(branch, params, t, y[0])], params, [chi0], span)
    ts = np.linspace(t0, t1, samples)
    exact = np.array([chi_closed_form(branch, params, t) for t in ts])
    return _report("chi", span, trajectory(ts)[0], exact)


def chi_lift_oracle(branch, params, span, samples=51):
    """(phi, psi) of a chi lift against the integrated reduced system."""
    lift = ChiLiftSolution(branch, params)
    if branch.kind.gaussian:
        case = ReductionCase(ReductionKind.GAUSSIAN_PROFILE)
    else:
        case = ReductionCase(ReductionKind.EXP_SEPARABLE, beta=branch.beta)
    t0, t1 = span
    trajectory = integrate(case, params, list(lift.phi_psi(t0)), span)
    ts = np.linspace(t0, t1, samples)
    return _report("chi-lift", span, trajectory(ts), np.array(lift.phi_psi(ts)))


def f_oracle(params, sign, span, samples=51):
    """Explicit f for C1 = 0 against the integrated first-order f equation."""
    t0, t1 = span
    f0, _ = f_closed_form(params, t0, sign)
    trajectory = f_solve(params, 0.0, float(f0), t0, span)
    ts = np.linspace(t0, t1, samples)
    return _report("f", span, trajectory(ts)[0], f_closed_form(params, ts, sign)[0])


def gh_oracle(S, c1, c2, c3, span, samples=51):
    """Particular (g, h) against the integrated system with C = C1^2 (S-1)^2 / 4."""
    t0, t1 = span
    g, gp, _, h, hp = gh_particular(S, c1, c2, c3, t0)
    trajectory = gh_solve(S, c1 ** 2 * (S - 1.0) ** 2 / 4.0, g, gp, h, hp, span)
    ts = np.linspace(t0, t1, samples)
    exact = np.array([[gh_particular(S, c1, c2, c3, t)[k] for t in ts] for k in (0, 3)])
    return _report("gh", span, trajectory(ts)[[0, 2]], exact)


def phi_psi_oracle(S, c, c2, c3, span, samples=51):
    """
    Closed-form (phi, psi) of the equal-diffusion reduction against integration.

    The (g, h) pair is the particular solution with C1 = 1 written in the
    constants (c2, c3) of the closed form.
    """
    sigma = S - 1.0
    case = ReductionCase(
        ReductionKind.CONDITIONAL_EQUAL,
        gh=lambda t: gh_particular(S, 1.0, c2 - 2.0 * c3, sigma * c3, t),
    )
    params = ModelParams(A=0.0, R=S, S=S, d=1.0)
    t0, t1 = span
    trajectory = integrate(case, params, list(case_ii_phi_psi(S, c, c2, c3, t0)), span)
    ts = np.linspace(t0, t1, samples)
    return _report("phi-psi", span, trajectory(ts), np.array(case_ii_phi_psi(S, c, c2, c3, ts)))


def pipeline_oracle(params, sign, span, xs=(-1.0, 0.0, 1.0), samples=21):
    """Unequal-diffusion pipeline with C1 = 0 against the explicit family."""
    exact = instantiate(SolutionSpec(Family.F7_CONDITIONAL_UNEQUAL, params, {"sign": float(sign)}))
    t0, t1 = span
    f0, _ = exact.f(t0)
    phi0, psi0 = exact.phi_psi(t0)
    chi0 = 1.0 + f0 * f0 - params.S * psi0 / phi0
    numeric = caseI_pipeline(params, 0.0, float(f0), t0, span, phi0=float(phi0), chi0=float(chi0))
    tt, xx = np.meshgrid(np.linspace(t0, t1, samples), np.asarray(xs), indexing="ij")
    u_n, v_n = numeric.fields(tt, xx)
    u_e, v_e = exact.fields(tt, xx)
    return _report("pipeline", span, np.array([u_n.ravel(), v_n.ravel()]), np.array([u_e.ravel(), v_e.ravel()]))
