"""
Reduced ODE systems obtained by substituting ansatze into the model.
"""

import enum
from dataclasses import dataclass

import numpy as np

from settings.defaults import SINGULAR_GUARD
from utils.errors import ConstraintError, SingularityError


class ReductionKind(enum.Enum):
    """
    Reductions and their state vectors.

    TRAVELLING          (phi, phi', psi, psi') in w = x - alpha t, u = phi e^{beta t}
    TRAVELLING_SCALAR   (phi, phi', phi'', phi''') of the fourth-order scalar form
    EXP_SEPARABLE       (phi, psi) in t, u = phi(t) e^{beta x}
    AIRY_PROFILE        (phi, phi', psi, psi') in the accelerating variable y
    GAUSSIAN_PROFILE    (phi, psi) in t, u = phi(t) e^{-x^2/(4t)}
    CONDITIONAL_UNEQUAL (phi, psi) in t for a supplied f(t)
    CONDITIONAL_EQUAL   (phi, psi) in t for supplied g(t), h(t)
    """

    TRAVELLING = "travelling"
    TRAVELLING_SCALAR = "travelling_scalar"
    EXP_SEPARABLE = "exp_separable"
    AIRY_PROFILE = "airy_profile"
    GAUSSIAN_PROFILE = "gaussian_profile"
    CONDITIONAL_UNEQUAL = "conditional_unequal"
    CONDITIONAL_EQUAL = "conditional_equal"


_REQUIRED = {
    ReductionKind.TRAVELLING: ("alpha", "beta"),
    ReductionKind.TRAVELLING_SCALAR: ("alpha", "beta"),
    ReductionKind.EXP_SEPARABLE: ("beta",),
    ReductionKind.AIRY_PROFILE: ("alpha",),
    ReductionKind.GAUSSIAN_PROFILE: (),
    ReductionKind.CONDITIONAL_UNEQUAL: ("f",),
    ReductionKind.CONDITIONAL_EQUAL: ("gh",),
}


@dataclass(frozen=True)
class ReductionCase:
    """
    One reduction with its case parameters.

    Attributes:
        kind (ReductionKind): Which reduced system
        alpha (float): Wave speed or Airy scale
        beta (float): Growth rate or spatial exponent
        f (callable): t -> (f, f') for CONDITIONAL_UNEQUAL
        gh (callable): t -> (g, g', g'', h, h') for CONDITIONAL_EQUAL
    """

    kind: ReductionKind
    alpha: float = None
    beta: float = None
    f: object = None
    gh: object = None

    def __post_init__(self):
        for name in _REQUIRED[self.kind]:
            if getattr(self, name) is None:
                raise ConstraintError(f"reduction {self.kind.value} requires {name}")
        if self.kind is ReductionKind.AIRY_PROFILE and self.alpha == 0:
            raise ConstraintError("reduction airy_profile requires alpha != 0")

    @property
    def dimension(self):
        if self.kind in (ReductionKind.TRAVELLING, ReductionKind.TRAVELLING_SCALAR, ReductionKind.AIRY_PROFILE):
            return 4
        return 2


def _check_phi(phi, w):
    if abs(phi) < SINGULAR_GUARD:
        raise SingularityError(f"phi vanishes at w={w:.12g}")


def reduced_rhs(case, params, w, state):
    """
    Right-hand side of a reduced system in first-order form.

    Args:
        case (ReductionCase): Reduction and its parameters
        params (ModelParams): Model coefficients
        w (float): Independent variable
        state (sequence): State vector, layout per ReductionKind

    Returns:
        np.ndarray: Derivative of the state

    Raises:
        SingularityError: If phi vanishes
    """
    A, R, S, d = params.A, params.R, params.S, params.d
    kind = case.kind
    y = np.asarray(state, dtype=float)
    _check_phi(y[0], w)

    if kind is ReductionKind.TRAVELLING:
        phi, dphi, psi, dpsi = y
        a, b = case.alpha, case.beta
        ddphi = -a * dphi - (1.0 - b) * phi + R * psi
        ddpsi = (-a * dpsi - (S - b) * psi + S * psi * psi / phi) / d
        return np.array([dphi, ddphi, dpsi, ddpsi])

    if kind is ReductionKind.TRAVELLING_SCALAR:
        phi, d1, d2, d3 = y
        a, b = case.alpha, case.beta
        c2 = 2.0 * S * (b - 1.0) + R * (a * a + d + S - b - d * b)
        c1 = a * (2.0 * S * (b - 1.0) + R * (1.0 + S - 2.0 * b))
        c0 = (1.0 - b) * (S * (b - 1.0) + R * (S - b))
        d4 = (
            -a * (1.0 + d) * R * d3
            + S * d2 * d2 / phi
            + 2.0 * a * S * d1 * d2 / phi
            + a * a * S * d1 * d1 / phi
            - c2 * d2
            - c1 * d1
            - c0 * phi
        ) / (d * R)
        return np.array([d1, d2, d3, d4])

    if kind is ReductionKind.EXP_SEPARABLE:
        phi, psi = y
        b2 = case.beta ** 2
        return np.array([
            (1.0 + b2) * phi - R * psi,
            (S + d * b2) * psi - S * psi * psi / phi,
        ])

    if kind is ReductionKind.AIRY_PROFILE:
        phi, dphi, psi, dpsi = y
        a2 = case.alpha ** 2
        a4 = a2 * a2
        ddphi = (-(a2 - w) * phi + R * a2 * psi) / a4
        ddpsi = (-(S * a2 - w) * psi + S * a2 * psi * psi / phi) / a4
        return np.array([dphi, ddphi, dpsi, ddpsi])

    if kind is ReductionKind.GAUSSIAN_PROFILE:
        phi, psi = y
        if w <= 0:
            raise SingularityError(f"gaussian_profile reduction needs t > 0, got t={w:.12g}")
        half = 0.5 / w
        return np.array([
            (1.0 - half) * phi - R * psi,
            (S - half) * psi - S * psi * psi / phi,
        ])

    if kind is ReductionKind.CONDITIONAL_UNEQUAL:
        phi, psi = y
        f, fp = case.f(w)
        return np.array([
            (1.0 + f * f) * phi - S * psi,
            (S + d * f * f) * psi - S * psi * psi / phi - 2.0 * d * f * fp / S * phi,
        ])

    phi, psi = y
    g, gp, gpp, h, hp = case.gh(w)
    if abs(g) < SINGULAR_GUARD:
        raise SingularityError(f"g vanishes at t={w:.12g}")
    common = h * h / (g * g) - gp / (2.0 * g)
    return np.array([
        (1.0 + common) * phi - S * psi,
        (S + common) * psi - S * psi * psi / phi + (g * gpp - 4.0 * h * hp) / (2.0 * S * g * g) * phi,
    ])


def travelling_scalar_residual(params, alpha, beta, state):
    """
    Consistency of the travelling system with its fourth-order scalar form.

    Derivatives of phi up to order four are computed from the first-order
    system and compared with the scalar equation.

    Args:
        params (ModelParams): Model coefficients
        alpha (float): Wave speed
        beta (float): Growth rate
        state (sequence): (phi, phi', psi, psi') at one point

    Returns:
        float: phi'''' from the system minus phi'''' from the scalar form
    """
    R = params.R
    system = ReductionCase(ReductionKind.TRAVELLING, alpha, beta)
    phi, d1, psi, dpsi = np.asarray(state, dtype=float)
    _, d2, _, ddpsi = reduced_rhs(system, params, 0.0, state)
    d3 = -alpha * d2 - (1.0 - beta) * d1 + R * dpsi
    d4 = -alpha * d3 - (1.0 - beta) * d2 + R * ddpsi
    scalar = ReductionCase(ReductionKind.TRAVELLING_SCALAR, alpha, beta)
    return float(d4 - reduced_rhs(scalar, params, 0.0, [phi, d1, d2, d3])[3])
