"""
Solver configuration and boundary conditions.
"""

import enum
from dataclasses import dataclass

from settings.defaults import CFL, MAX_STEPS, U_FLOOR
from utils.errors import ConstraintError, InvalidParameterError


@dataclass(frozen=True)
class SolverConfig:
    """
    Time-stepping controls.

    Attributes:
        cfl (float): dt = cfl dx^2 / max(1, d), in (0, 1)
        u_floor (float): u below u_floor * min(1, initial u) at a node stops the run
        max_steps (int): Upper bound on RK4 steps per run
    """

    cfl: float = CFL
    u_floor: float = U_FLOOR
    max_steps: int = MAX_STEPS

    def __post_init__(self):
        if not 0 < self.cfl < 1:
            raise InvalidParameterError("cfl", f"must lie in (0, 1), got {self.cfl}")
        if not self.u_floor > 0:
            raise InvalidParameterError("u_floor", f"must be positive, got {self.u_floor}")
        if int(self.max_steps) != self.max_steps or self.max_steps < 1:
            raise InvalidParameterError("max_steps", f"must be a positive integer, got {self.max_steps}")

    def time_step_limit(self, dx, d):
        return self.cfl * dx * dx / max(1.0, d)

    def to_dict(self):
        return {"cfl": self.cfl, "u_floor": self.u_floor, "max_steps": self.max_steps}


class BoundaryKind(enum.Enum):
    NEUMANN_ZERO = "neumann"
    DIRICHLET_FROM_EXACT = "dirichlet"

    @classmethod
    def parse(cls, text):
        for kind in cls:
            if text.lower() in (kind.value, kind.name.lower()):
                return kind
        raise InvalidParameterError("bc", f"unknown boundary kind {text!r}; expected neumann or dirichlet")


@dataclass(frozen=True)
class BoundaryCondition:
    """
    Condition at one edge of the interval.

    Attributes:
        kind (BoundaryKind): Zero flux or exact values
        solution (ExactSolution): Source of the values for Dirichlet edges
    """

    kind: BoundaryKind = BoundaryKind.NEUMANN_ZERO
    solution: object = None

    def __post_init__(self):
        if self.kind is BoundaryKind.DIRICHLET_FROM_EXACT and self.solution is None:
            raise ConstraintError("Dirichlet boundary needs an exact solution")

    @classmethod
    def neumann(cls):
        return cls(BoundaryKind.NEUMANN_ZERO)

    @classmethod
    def dirichlet(cls, solution):
        return cls(BoundaryKind.DIRICHLET_FROM_EXACT, solution)

    def values(self, t, x):
        """Exact (u, v) at an edge node."""
        u, v = self.solution.fields(t, x)
        return float(u), float(v)
