"""
Adaptive Runge-Kutta integration of reduced systems with dense output.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from reductions.cases import ReductionCase, reduced_rhs
from settings.defaults import BLOW_UP_LEVEL, ODE_ATOL, ODE_RTOL
from utils.errors import IntegrationError, InvalidParameterError, SingularityError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ODETrajectory:
    """
    Result of one integration run.

    Attributes:
        w (np.ndarray): Accepted values of the independent variable
        y (np.ndarray): States at the accepted points, shape (dim, n)
        dense (OdeSolution): Continuous interpolant over the span
        rtol (float): Relative tolerance met by the integrator
        atol (float): Absolute tolerance met by the integrator
    """

    w: np.ndarray
    y: np.ndarray
    dense: object
    rtol: float
    atol: float

    @property
    def span(self):
        return float(self.w[0]), float(self.w[-1])

    def contains(self, w):
        lo, hi = sorted(self.span)
        return bool(np.all((np.asarray(w) >= lo) & (np.asarray(w) <= hi)))

    def __call__(self, w):
        """Interpolated state at w (scalar or 1-D array)."""
        return self.dense(w)

    def component(self, index, w):
        return self.dense(w)[index]


def _blow_up_event(level):
    def event(w, y):
        return level - np.max(np.abs(y))

    event.terminal = True
    return event


def _zero_event(index):
    def event(w, y):
        return y[index]

    event.terminal = True
    return event


def integrate(system, params, y0, span, reltol=ODE_RTOL, abstol=ODE_ATOL,
              singular_component=None, blow_up=BLOW_UP_LEVEL, t_eval=None):
    """
    Integrate a reduced system with an embedded 8(5,3) Runge-Kutta pair.

    Args:
        system (ReductionCase or callable): Reduction, or rhs(w, y) directly
        params (ModelParams): Model coefficients (unused for a plain callable)
        y0 (sequence): Initial state at span[0]
        span (tuple): (w0, w1), integration runs from w0 to w1
        reltol (float): Relative tolerance
        abstol (float): Absolute tolerance
        singular_component (int, optional): State index that must not cross zero;
            defaults to phi (index 0) for a ReductionCase
        blow_up (float): Magnitude treated as finite-time blow-up
        t_eval (array_like, optional): Points at which to store the solution

    Returns:
        ODETrajectory: Trajectory with dense output

    Raises:
        IntegrationError: On step-size failure, blow-up or a singular state,
            carrying the last reached point
    """
    y0 = np.asarray(y0, dtype=float)
    if not np.all(np.isfinite(y0)):
        raise InvalidParameterError("y0", f"initial state must be finite, got {y0}")
    w0, w1 = float(span[0]), float(span[1])
    if w0 == w1:
        raise InvalidParameterError("span", "integration span is degenerate")

    if isinstance(system, ReductionCase):
        def rhs(w, y):
            return reduced_rhs(system, params, w, y)
        if singular_component is None:
            singular_component = 0
        label = system.kind.value
    else:
        rhs = system
        label = getattr(system, "__name__", "rhs")

    events = [_blow_up_event(blow_up)]
    if singular_component is not None:
        events.append(_zero_event(singular_component))

    logger.debug("integrating %s on [%g, %g] with rtol=%g", label, w0, w1, reltol)
    try:
        result = solve_ivp(rhs, (w0, w1), y0, method="DOP853", dense_output=True,
                           rtol=reltol, atol=abstol, events=events, t_eval=t_eval)
    except SingularityError as exc:
        raise IntegrationError(f"{label}: singular state ({exc})") from exc

    last = float(result.t[-1]) if len(result.t) else w0
    if result.status == -1:
        raise IntegrationError(f"{label}: {result.message}", last)
    if result.status == 1:
        if len(result.t_events[0]):
            raise IntegrationError(f"{label}: blow-up (|y| > {blow_up:g})", float(result.t_events[0][0]))
        raise IntegrationError(
            f"{label}: state component {singular_component} reaches zero", float(result.t_events[1][0])
        )
    return ODETrajectory(result.t, result.y, result.sol, reltol, abstol)
