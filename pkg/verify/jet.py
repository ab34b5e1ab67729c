"""
Finite-difference jets of evaluable solutions.
"""

import numpy as np

from models.jet import Jet
from settings.defaults import FD_STEP
from utils.errors import DomainError
from utils.finite_difference import first_derivative, richardson, second_derivative

_OFFSETS = (-2.0, -1.0, 1.0, 2.0)


def scaled_step(h, t, x):
    """Step h scaled by max(1, |t|, |x|), elementwise."""
    return h * np.maximum(1.0, np.maximum(np.abs(t), np.abs(x)))


def _stack(sol, t, x):
    u, v = sol.fields(t, x)
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float), t, x)[:2]
    values = np.stack([u, v])
    if not np.all(np.isfinite(values)):
        raise DomainError(f"non-finite field value in a difference stencil of {sol.label()}")
    return values


def check_stencil(sol, t, x, h):
    """
    Raise DomainError if any stencil point of a node leaves the solution's domain.
    """
    t, x = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(x, dtype=float))
    step = scaled_step(h, t, x)
    for k in _OFFSETS:
        for tk, xk in ((t + k * step, x), (t, x + k * step)):
            inside = sol.domain.mask(tk, xk)
            if not np.all(inside):
                index = tuple(np.argwhere(~inside)[0])
                node_t, node_x = float(t[index]), float(x[index])
                raise DomainError(
                    f"difference stencil of node (t={node_t:.12g}, x={node_x:.12g}) "
                    f"leaves domain {sol.domain}",
                    node_t, node_x,
                )


def _raw_derivatives(sol, t, x, h):
    step = scaled_step(h, t, x)
    center = _stack(sol, t, x)
    d_t = first_derivative(lambda s: _stack(sol, s, x), t, step)
    d_x = first_derivative(lambda s: _stack(sol, t, s), x, step)
    d_xx = second_derivative(lambda s: _stack(sol, t, s), x, step, center)
    return center, d_t, d_x, d_xx


def derivatives(sol, t, x, h=FD_STEP, extrapolate=False):
    """
    Field values and (t, x, xx) derivatives at broadcastable (t, x).

    Returns:
        tuple: (values, d_t, d_x, d_xx), each of shape (2,) + shape of t
    """
    t, x = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(x, dtype=float))
    check_stencil(sol, t, x, h)
    coarse = _raw_derivatives(sol, t, x, h)
    if not extrapolate:
        return coarse
    fine = _raw_derivatives(sol, t, x, 0.5 * h)
    return (coarse[0],) + tuple(richardson(c, f) for c, f in zip(coarse[1:], fine[1:]))


def fd_jet_grid(sol, t, x, h=FD_STEP, extrapolate=False):
    """
    Jet with array entries at every (t, x) pair.

    Raises:
        DomainError: If a stencil leaves the domain
    """
    values, d_t, d_x, d_xx = derivatives(sol, t, x, h, extrapolate)
    return Jet(values[0], values[1], d_t[0], d_t[1], d_x[0], d_x[1], d_xx[0], d_xx[1])


def fd_jet(sol, t, x, h=FD_STEP, extrapolate=False):
    """
    Fourth-order finite-difference jet of a solution at one point.

    The step is h scaled by max(1, |t|, |x|). With extrapolate=True the
    derivatives are Richardson-combined with the half step.

    Args:
        sol (ExactSolution): Solution to differentiate
        t (float): Time
        x (float): Space
        h (float): Base step

    Returns:
        Jet: Values and derivatives

    Raises:
        DomainError: If a stencil point leaves the domain
    """
    jet = fd_jet_grid(sol, float(t), float(x), h, extrapolate)
    return Jet(*(float(value) for value in jet.as_tuple()))
