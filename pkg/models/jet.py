"""
Pointwise fields, derivative jets and the residual operators of the model.
"""

from dataclasses import astuple, dataclass, fields

import numpy as np

from models.params import System
from settings.defaults import SINGULAR_GUARD
from utils.errors import InvalidParameterError, SingularityError


@dataclass(frozen=True)
class FieldSample:
    """
    Prey and predator densities at one point.

    Attributes:
        u (float): Prey density
        v (float): Predator density
    """

    u: float
    v: float

    def as_array(self):
        return np.array([self.u, self.v])


@dataclass(frozen=True)
class Jet:
    """
    Field values and the partial derivatives used by the residuals.

    Entries are floats for a single point or equal-shape arrays for a grid.

    Attributes:
        u, v (float): Field values
        ut, vt (float): Time derivatives
        ux, vx (float): Space derivatives
        uxx, vxx (float): Second space derivatives
    """

    u: float
    v: float
    ut: float = 0.0
    vt: float = 0.0
    ux: float = 0.0
    vx: float = 0.0
    uxx: float = 0.0
    vxx: float = 0.0

    def __post_init__(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not np.all(np.isfinite(value)):
                raise InvalidParameterError(item.name, f"jet entries must be finite, got {value}")

    def as_tuple(self):
        return astuple(self)


def _check_denominators(params, u, guard):
    u_arr = np.asarray(u)
    if np.any(np.abs(u_arr) < guard):
        raise SingularityError(f"|u| < {guard:g}: predator term v/u is singular")
    if np.any(np.abs(u_arr + params.A) < guard):
        raise SingularityError(f"|u + A| < {guard:g}: predation term is singular")


def reaction_rhs(params, u, v, guard=SINGULAR_GUARD):
    """
    Reaction part of the DHT system.

    Works on scalars and on numpy arrays of equal shape.

    Args:
        params (ModelParams): Model coefficients
        u: Prey density
        v: Predator density
        guard (float): Magnitude below which a denominator counts as zero

    Returns:
        tuple: (f, g) with f = u(1 - Rv/(u+A)), g = S v (1 - v/u)

    Raises:
        SingularityError: If u or u + A vanishes
    """
    _check_denominators(params, u, guard)
    f = u * (1.0 - params.R * v / (u + params.A))
    g = params.S * v * (1.0 - v / u)
    return f, g


def residual(params, jet, system=System.DHT, guard=SINGULAR_GUARD):
    """
    Pointwise residuals (s1, s2) of a jet.

    For the DHT system s1 = u_xx - u_t + u(1 - Rv/(u+A)) and
    s2 = d v_xx - v_t + S v(1 - v/u); both vanish iff the jet satisfies
    the equations at that point.

    Args:
        params (ModelParams): Model coefficients
        jet (Jet): Field values and derivatives
        system (System): Which system to test against
        guard (float): Singular-denominator threshold

    Returns:
        tuple: (s1, s2)

    Raises:
        SingularityError: If u or u + A vanishes
    """
    if system is System.GAUGED:
        if np.any(np.abs(jet.u) < guard):
            raise SingularityError(f"|u| < {guard:g}: term v^2/u is singular")
        s1 = jet.uxx - jet.ut - params.R * jet.v
        s2 = params.d * jet.vxx - jet.vt - jet.v * jet.v / jet.u
        return s1, s2
    f, g = reaction_rhs(params, jet.u, jet.v, guard)
    s1 = jet.uxx - jet.ut + f
    s2 = params.d * jet.vxx - jet.vt + g
    return s1, s2


def dimensional_residual(p, jet, guard=SINGULAR_GUARD):
    """
    Residuals of the dimensional model for a jet in dimensional variables.

    Args:
        p (DimensionalParams): Dimensional coefficients
        jet (Jet): Dimensional field values and derivatives

    Returns:
        tuple: (s1, s2) in dimensional units
    """
    if abs(jet.u) < guard or abs(jet.u + p.A0) < guard:
        raise SingularityError("dimensional residual has a vanishing denominator")
    s1 = p.d1 * jet.uxx - jet.ut + p.r * jet.u - p.q * jet.u * jet.v / (jet.u + p.A0)
    s2 = p.d2 * jet.vxx - jet.vt + p.s * jet.v * (1.0 - jet.v / (p.h * jet.u))
    return s1, s2
