"""
Method-of-lines solver: central Laplacian in space, classical RK4 in time.
"""

import logging
import math

import numpy as np

from fdsolver.config import BoundaryCondition, BoundaryKind, SolverConfig
from models.grid import FieldGrid
from models.jet import reaction_rhs
from models.solution import ExactSolution
from utils.errors import DomainError, InvalidParameterError, SolverError
from utils.finite_difference import laplacian_1d

logger = logging.getLogger(__name__)


def _edges(bc):
    if isinstance(bc, BoundaryCondition):
        return bc, bc
    left, right = bc
    return left, right


def _initial_profile(init, grid):
    xs = grid.xs
    if isinstance(init, ExactSolution):
        t0 = np.full_like(xs, grid.t0)
        try:
            init.domain.check(t0, xs)
        except DomainError as exc:
            raise InvalidParameterError("init", f"initial data outside the solution domain: {exc}") from exc
        u, v = init.fields(t0, xs)
        return np.array(u, dtype=float), np.array(v, dtype=float)
    if isinstance(init, FieldGrid):
        return init.u[0].copy(), init.v[0].copy()
    u, v = (np.array(row, dtype=float) for row in init)
    if u.shape != xs.shape or v.shape != xs.shape:
        raise InvalidParameterError("init", f"profiles must have {grid.nx} nodes")
    return u, v


def _laplacian(values, dx, left, right):
    lap = laplacian_1d(values, dx)
    if left.kind is BoundaryKind.NEUMANN_ZERO:
        lap[0] = 2.0 * (values[1] - values[0]) / (dx * dx)
    if right.kind is BoundaryKind.NEUMANN_ZERO:
        lap[-1] = 2.0 * (values[-2] - values[-1]) / (dx * dx)
    return lap


class _System:
    def __init__(self, params, grid, left, right, cfg, reaction, u0):
        self.params = params
        self.xs = grid.xs
        self.dx = grid.dx
        self.left = left
        self.right = right
        self.cfg = cfg
        self.reaction = reaction
        self.interior = np.ones(grid.nx, dtype=bool)
        if left.kind is BoundaryKind.DIRICHLET_FROM_EXACT:
            self.interior[0] = False
        if right.kind is BoundaryKind.DIRICHLET_FROM_EXACT:
            self.interior[-1] = False
        # floor scales down where the initial u is below 1, e.g. decaying tails
        self.floor = cfg.u_floor * np.clip(u0, 0.0, 1.0)

    def impose(self, t, u, v):
        if self.left.kind is BoundaryKind.DIRICHLET_FROM_EXACT:
            u[0], v[0] = self.left.values(t, self.xs[0])
        if self.right.kind is BoundaryKind.DIRICHLET_FROM_EXACT:
            u[-1], v[-1] = self.right.values(t, self.xs[-1])

    def check(self, t, u, v):
        if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
            bad = int(np.argmax(~(np.isfinite(u) & np.isfinite(v))))
            raise SolverError(f"non-finite state at x={self.xs[bad]:.12g}, t={t:.12g}", t, float(self.xs[bad]))
        low = self.interior & ((u <= 0.0) | (u < self.floor))
        if np.any(low):
            node = int(np.argmax(low))
            raise SolverError(
                f"u={u[node]:.3e} below its floor {self.floor[node]:.3e} (u_floor={self.cfg.u_floor:g}) "
                f"at x={self.xs[node]:.12g}, t={t:.12g}",
                t, float(self.xs[node]),
            )

    def rhs(self, t, u, v):
        u, v = u.copy(), v.copy()
        self.impose(t, u, v)
        self.check(t, u, v)
        du = _laplacian(u, self.dx, self.left, self.right)
        dv = self.params.d * _laplacian(v, self.dx, self.left, self.right)
        if self.reaction:
            f, g = reaction_rhs(self.params, u, v, guard=0.0)
            du, dv = du + f, dv + g
        du[~self.interior] = 0.0
        dv[~self.interior] = 0.0
        return du, dv

    def step(self, t, dt, u, v):
        k1 = self.rhs(t, u, v)
        k2 = self.rhs(t + 0.5 * dt, u + 0.5 * dt * k1[0], v + 0.5 * dt * k1[1])
        k3 = self.rhs(t + 0.5 * dt, u + 0.5 * dt * k2[0], v + 0.5 * dt * k2[1])
        k4 = self.rhs(t + dt, u + dt * k3[0], v + dt * k3[1])
        u = u + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        v = v + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
        self.impose(t + dt, u, v)
        self.check(t + dt, u, v)
        return u, v


def simulate(params, init, bc, grid, cfg=None, reaction=True):
    """
    Integrate the model on [x0, x1] and record every time level of the grid.

    Args:
        params (ModelParams): Model coefficients
        init (ExactSolution, FieldGrid or (u, v)): Initial data at grid.t0
        bc (BoundaryCondition or (left, right)): Edge conditions
        grid (GridSpec): Output times and space nodes
        cfg (SolverConfig, optional): Step controls
        reaction (bool): Include the reaction terms; False leaves pure diffusion

    Returns:
        FieldGrid: Numerical solution, flagged approximate

    Raises:
        SolverError: On u below the floor, a non-finite state or too many steps
    """
    cfg = cfg or SolverConfig()
    left, right = _edges(bc)
    u, v = _initial_profile(init, grid)
    system = _System(params, grid, left, right, cfg, reaction, u)
    times = grid.times
    system.impose(times[0], u, v)
    system.check(times[0], u, v)

    dt_limit = cfg.time_step_limit(grid.dx, params.d)
    out_u = np.empty((grid.nt, grid.nx))
    out_v = np.empty((grid.nt, grid.nx))
    out_u[0], out_v[0] = u, v
    steps = 0
    dt_used = 0.0
    for level in range(1, grid.nt):
        span = times[level] - times[level - 1]
        count = max(1, math.ceil(span / dt_limit - 1e-12))
        dt = span / count
        dt_used = max(dt_used, dt)
        if steps + count > cfg.max_steps:
            raise SolverError(f"step budget of {cfg.max_steps} exhausted before t={times[level]:.12g}", times[level])
        t = times[level - 1]
        for k in range(count):
            u, v = system.step(t + k * dt, dt, u, v)
        steps += count
        out_u[level], out_v[level] = u, v

    logger.info("simulated %d RK4 steps (dt=%.3e, dx=%.3e)", steps, dt_used, grid.dx)
    metadata = {
        "source": "fdsolver",
        "scheme": "RK4 method of lines, central Laplacian",
        "dt": dt_used,
        "steps": steps,
        "boundary": [left.kind.value, right.kind.value],
        "reaction": reaction,
        "approximate": True,
    }
    if isinstance(init, ExactSolution):
        metadata["provenance"] = list(init.provenance)
    return FieldGrid(grid, out_u, out_v, metadata)
