"""
Model parameters, scaling factors and the nondimensionalization map.
"""

import enum
import math
from dataclasses import asdict, dataclass, replace

from settings.defaults import EQUALITY_TOL
from utils.errors import ConstraintError, InvalidParameterError


def close(a, b, tol=EQUALITY_TOL):
    """Equality test used for parameter constraints such as d = 1."""
    return math.isclose(a, b, rel_tol=0.0, abs_tol=tol * max(1.0, abs(a), abs(b)))


class System(enum.Enum):
    """
    Which PDE system a solution satisfies.

    DHT is the nondimensional prey-predator system. GAUGED is the system
    u_t = u_xx - R v, v_t = d v_xx - v^2/u obtained from DHT with A = 0,
    S = 1 by removing the common factor e^t.
    """

    DHT = "dht"
    GAUGED = "gauged"


@dataclass(frozen=True)
class DimensionalParams:
    """
    Coefficients of the dimensional prey-predator model.

    Attributes:
        d1 (float): Prey diffusivity
        d2 (float): Predator diffusivity
        r (float): Prey growth rate
        q (float): Predation rate
        A0 (float): Saturation constant
        s (float): Predator growth rate
        h (float): Carrying ratio
    """

    d1: float
    d2: float
    r: float
    q: float
    A0: float
    s: float
    h: float

    def __post_init__(self):
        for name in ("d1", "d2", "r", "q", "s", "h"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(name, f"must be > 0, got {value}")
        if not (math.isfinite(self.A0) and self.A0 >= 0):
            raise InvalidParameterError("A0", f"must be >= 0, got {self.A0}")

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ModelParams:
    """
    The four nondimensional coefficients of the DHT system.

    Attributes:
        A (float): Saturation constant, >= 0
        R (float): Predation coefficient, > 0
        S (float): Predator growth coefficient, > 0
        d (float): Diffusivity ratio, > 0
    """

    A: float = 0.0
    R: float = 1.0
    S: float = 1.0
    d: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.A) and self.A >= 0):
            raise InvalidParameterError("A", f"must be >= 0, got {self.A}")
        for name in ("R", "S", "d"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(name, f"must be > 0, got {value}")

    @property
    def sigma(self):
        """S - 1, the predator excess growth rate."""
        return self.S - 1.0

    def with_values(self, **changes):
        """Copy with some coefficients replaced."""
        return replace(self, **changes)

    def require(self, condition, message):
        """
        Raise ConstraintError with message unless condition holds.

        Args:
            condition (bool): Constraint outcome
            message (str): Requirement, e.g. "F5 requires d = 1"
        """
        if not condition:
            raise ConstraintError(f"{message} (got A={self.A:g}, R={self.R:g}, S={self.S:g}, d={self.d:g})")

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(A=data.get("A", 0.0), R=data["R"], S=data["S"], d=data["d"])


@dataclass(frozen=True)
class ScalingFactors:
    """
    Factors converting nondimensional variables to dimensional ones.

    Attributes:
        t_scale (float): Dimensional time per unit nondimensional time (1/r)
        x_scale (float): Dimensional length per unit (sqrt(d1/r))
        u_scale (float): Prey density scale (1)
        v_scale (float): Predator density scale (h)
    """

    t_scale: float
    x_scale: float
    u_scale: float
    v_scale: float

    def __post_init__(self):
        for name in ("t_scale", "x_scale", "u_scale", "v_scale"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameterError(name, f"must be > 0, got {value}")

    def to_dimensional(self, t, x, u, v):
        """Map nondimensional (t, x, u, v) to dimensional values."""
        return t * self.t_scale, x * self.x_scale, u * self.u_scale, v * self.v_scale

    def to_nondimensional(self, t, x, u, v):
        """Inverse of to_dimensional."""
        return t / self.t_scale, x / self.x_scale, u / self.u_scale, v / self.v_scale

    def to_dict(self):
        return asdict(self)


def nondimensionalize(p):
    """
    Reduce dimensional coefficients to (A, R, S, d) and scale factors.

    Args:
        p (DimensionalParams): Dimensional coefficients

    Returns:
        tuple: (ModelParams, ScalingFactors)
    """
    params = ModelParams(A=p.A0, R=p.h * p.q / p.r, S=p.s / p.r, d=p.d2 / p.d1)
    scales = ScalingFactors(
        t_scale=1.0 / p.r,
        x_scale=math.sqrt(p.d1 / p.r),
        u_scale=1.0,
        v_scale=p.h,
    )
    return params, scales
