"""
Numerical oracles for the conditional-symmetry reductions.

Unequal diffusion: f solves f' = (d-1)/3 f^3 + (S-1) f + C1, chi = phi'/phi
solves the linear equation chi' + K1 chi + K0 = 0 and the pair lifts through
u = phi e^{x f}. Equal diffusion: (g, h) solve g g'' = C e^{(S-1)t} and
h g'' + g (h'' + (1-S) h') = 0.
"""

import logging
import math

import numpy as np

from models.params import close
from models.solution import Domain, ExactSolution
from reductions.integrate import integrate
from settings.defaults import F_SOLVE_ATOL, F_SOLVE_RTOL, ODE_ATOL, ODE_RTOL
from utils.errors import ConstraintError, InvalidParameterError, SingularityError

logger = logging.getLogger(__name__)


def _require_unequal(params):
    params.require(not close(params.d, 1.0), "the f equation requires d != 1")


def f_rhs(params, c1, f):
    """f' = (d-1)/3 f^3 + (S-1) f + C1."""
    return (params.d - 1.0) / 3.0 * f ** 3 + (params.S - 1.0) * f + c1


def _oriented_span(t0, span):
    ta, tb = float(span[0]), float(span[1])
    if close(t0, ta):
        return ta, tb
    if close(t0, tb):
        return tb, ta
    raise InvalidParameterError("t0", f"t0={t0:g} must be an endpoint of the span ({ta:g}, {tb:g})")


def f_solve(params, c1, f0, t0, span):
    """
    Integrate the first-order form of the f equation.

    Args:
        params (ModelParams): Coefficients, d != 1
        c1 (float): First-integral constant C1
        f0 (float): f at t0
        t0 (float): Start time, one endpoint of span
        span (tuple): Time interval

    Returns:
        ODETrajectory: Trajectory of f (one state component)

    Raises:
        IntegrationError: On blow-up, with its location
    """
    _require_unequal(params)

    def rhs(t, y):
        return [f_rhs(params, c1, y[0])]

    logger.debug("solving f equation with C1=%g, f(%g)=%g", c1, t0, f0)
    return integrate(rhs, params, [f0], _oriented_span(t0, span), F_SOLVE_RTOL, F_SOLVE_ATOL)


def caseI_coefficients(params, f, fp):
    """
    Coefficients of chi' + K1 chi + K0 = 0.

        K1 = 1 - S + (1 - d) f^2
        K0 = S - 1 + (d + S - 2) f^2 + (d - 1) f^4 - 2 (d + 1) f f'

    Returns:
        tuple: (K1, K0)
    """
    S, d = params.S, params.d
    f2 = f * f
    k1 = 1.0 - S + (1.0 - d) * f2
    k0 = S - 1.0 + (d + S - 2.0) * f2 + (d - 1.0) * f2 * f2 - 2.0 * (d + 1.0) * f * fp
    return k1, k0


class CaseIPipelineSolution(ExactSolution):
    """
    Unequal-diffusion conditional solution with numerically computed f, chi and phi.

        u = phi e^{x f},  v = ((1 + f^2 - chi)/S - x f'/S) u

    Attributes:
        trajectory (ODETrajectory): States (f, chi, log phi)
        c1 (float): First-integral constant of f
    """

    def __init__(self, params, trajectory, c1):
        lo, hi = sorted(trajectory.span)
        super().__init__(
            params,
            domain=Domain(f"{lo:g} <= t <= {hi:g}", lambda t, x: (t >= lo) & (t <= hi)),
            provenance=(f"F7 pipeline(C1={c1:g})",),
            approximate=True,
        )
        self.trajectory = trajectory
        self.c1 = c1

    def states(self, t):
        values = self.trajectory(np.ravel(np.asarray(t, dtype=float)))
        shape = np.shape(t)
        return tuple(row.reshape(shape) for row in values)

    def fields(self, t, x):
        S = self.params.S
        f, chi, log_phi = self.states(t)
        fp = f_rhs(self.params, self.c1, f)
        u = np.exp(log_phi + x * f)
        v = ((1.0 + f * f - chi) / S - x * fp / S) * u
        if np.ndim(u) == 0:
            u, v = float(u), float(v)
        return u, v


def caseI_pipeline(params, c1, f0, t0, span, phi0=1.0, chi0=None):
    """
    Build the unequal-diffusion conditional solution from numerical solves.

    f, chi and log phi are integrated together; chi0 defaults to 1 + f0^2,
    the value with psi(t0) = 0.

    Args:
        params (ModelParams): Coefficients with d != 1, R = S, A = 0
        c1 (float): First-integral constant
        f0 (float): f(t0)
        t0 (float): Start time, one endpoint of span
        span (tuple): Time strip of the result
        phi0 (float): phi(t0) > 0
        chi0 (float, optional): chi(t0)

    Returns:
        CaseIPipelineSolution: Solution defined on the strip

    Raises:
        ConstraintError: On violated parameter constraints
        IntegrationError: Propagated from the solver
    """
    _require_unequal(params)
    params.require(params.A == 0, "the unequal-diffusion pipeline requires A = 0")
    params.require(close(params.R, params.S), "the unequal-diffusion pipeline requires R = S")
    if not phi0 > 0:
        raise ConstraintError(f"the unequal-diffusion pipeline requires phi0 > 0, got {phi0:g}")
    if chi0 is None:
        chi0 = 1.0 + f0 * f0

    def rhs(t, y):
        f, chi, _ = y
        fp = f_rhs(params, c1, f)
        k1, k0 = caseI_coefficients(params, f, fp)
        return [fp, -k1 * chi - k0, chi]

    trajectory = integrate(
        rhs, params, [f0, chi0, math.log(phi0)], _oriented_span(t0, span), F_SOLVE_RTOL, F_SOLVE_ATOL,
    )
    logger.info("unequal-diffusion pipeline solved on [%g, %g]", *sorted(trajectory.span))
    return CaseIPipelineSolution(params, trajectory, c1)


def gh_rhs(S, C, t, state):
    """
    First-order form of the (g, h) system, state (g, g', h, h').

    Raises:
        SingularityError: If g vanishes
    """
    g, gp, h, hp = state
    if g == 0:
        raise SingularityError(f"g vanishes at t={t:.12g}")
    gpp = C * math.exp((S - 1.0) * t) / g
    return np.array([gp, gpp, hp, (S - 1.0) * hp - h * gpp / g])


def gh_solve(S, C, g0, gp0, h0, hp0, span):
    """
    Integrate the (g, h) system from span[0].

    Returns:
        ODETrajectory: States (g, g', h, h')

    Raises:
        IntegrationError: If g reaches zero or the step size fails
    """
    if g0 == 0:
        raise SingularityError("g must be nonzero at the start of the span")

    def rhs(t, y):
        return gh_rhs(S, C, t, y)

    logger.debug("solving (g, h) with S=%g, C=%g on %s", S, C, span)
    return integrate(rhs, None, [g0, gp0, h0, hp0], span, ODE_RTOL, ODE_ATOL, singular_component=0)


def gh_from_trajectory(trajectory, S, C):
    """
    Adapt a (g, h) trajectory to the t -> (g, g', g'', h, h') callable of the reductions.
    """
    def gh(t):
        g, gp, h, hp = trajectory(t)
        return g, gp, C * math.exp((S - 1.0) * t) / g, h, hp

    return gh
