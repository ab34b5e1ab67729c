"""
Closed-form Riccati solutions for chi = phi'/phi and their lifts to (u, v).

Two reductions lead to a Riccati equation for chi. With r = psi/phi the
reduced system becomes the Bernoulli equation r' = (Q - chi) r - S r^2 and
chi = P - R r, where

    exponential separable (u = phi e^{beta x}):  P = 1 + beta^2, Q = S + d beta^2
    Gaussian profile (u = phi e^{-x^2/(4t)}):    P = 1 - 1/(2t),  Q = S - 1/(2t)
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

from models.params import close
from models.solution import Domain, ExactSolution, Family, SolutionSpec
from settings.defaults import EQUALITY_TOL, SINGULAR_GUARD
from utils.errors import ConstraintError, PoleError

logger = logging.getLogger(__name__)


class ChiBranchKind(enum.Enum):
    """
    PRIMARY            chi = P - gamma R / ((R - S)(1 + C1 e^{gamma t}))
    EQUAL_RS           chi = P + C1 e^{-gamma t}               (R = S)
    GAMMA_ZERO         chi = P + R / (C1 + (R - S) t)          (gamma = 0)
    GAUSSIAN_GENERAL   chi = P + R(S-1) / ((R - S)(1 + C e^{(1-S) t}))
    GAUSSIAN_EQUAL_RS  chi = P + C e^{(S-1) t}                 (R = S)

    gamma = 1 - S + (1 - d) beta^2. The first three use the exponential
    separable reduction, the last two the Gaussian profile reduction.
    """

    PRIMARY = "primary"
    EQUAL_RS = "equal_rs"
    GAMMA_ZERO = "gamma_zero"
    GAUSSIAN_GENERAL = "gaussian_general"
    GAUSSIAN_EQUAL_RS = "gaussian_equal_rs"

    @property
    def gaussian(self):
        return self in (ChiBranchKind.GAUSSIAN_GENERAL, ChiBranchKind.GAUSSIAN_EQUAL_RS)


@dataclass(frozen=True)
class ChiBranch:
    """
    A chi branch with its constant.

    Attributes:
        kind (ChiBranchKind): Branch
        constant (float): C1 for the exponential branches, C for the Gaussian ones
        beta (float): Spatial exponent, exponential branches only
    """

    kind: ChiBranchKind
    constant: float = 0.0
    beta: float = None

    def __post_init__(self):
        if not self.kind.gaussian and self.beta is None:
            raise ConstraintError(f"chi branch {self.kind.value} requires beta")
        if not math.isfinite(self.constant):
            raise ConstraintError(f"chi branch constant must be finite, got {self.constant}")

    def gamma(self, params):
        if self.kind.gaussian:
            return 1.0 - params.S
        return 1.0 - params.S + (1.0 - params.d) * self.beta ** 2

    def check(self, params):
        """
        Raise ConstraintError unless the branch constraints hold for params.
        """
        p, kind = params, self.kind
        p.require(p.A == 0, f"chi branch {kind.value} requires A = 0")
        if kind.gaussian:
            p.require(close(p.d, 1.0), f"chi branch {kind.value} requires d = 1")
        if kind in (ChiBranchKind.PRIMARY, ChiBranchKind.GAUSSIAN_GENERAL):
            p.require(not close(p.R, p.S), f"chi branch {kind.value} requires R != S")
        if kind in (ChiBranchKind.EQUAL_RS, ChiBranchKind.GAUSSIAN_EQUAL_RS):
            p.require(close(p.R, p.S), f"chi branch {kind.value} requires R = S")
        if kind is ChiBranchKind.PRIMARY:
            p.require(abs(self.gamma(p)) > EQUALITY_TOL, "chi branch primary requires gamma != 0")
        if kind is ChiBranchKind.GAMMA_ZERO:
            p.require(abs(self.gamma(p)) <= EQUALITY_TOL, "chi branch gamma_zero requires gamma = 0")
            if close(p.R, p.S) and self.constant == 0:
                raise PoleError("chi branch gamma_zero with R = S requires C1 != 0")

    def label(self):
        text = f"chi[{self.kind.value}, C={self.constant:g}"
        if self.beta is not None:
            text += f", beta={self.beta:g}"
        return text + "]"


def _p_q(branch, params, t):
    if branch.kind.gaussian:
        half = 0.5 / t
        return 1.0 - half, params.S - half
    b2 = branch.beta ** 2
    return 1.0 + b2, params.S + params.d * b2


def riccati_rhs(branch, params, t, chi):
    """
    chi' of the Riccati equation of the branch's reduction.

    Args:
        branch (ChiBranch): Selects the reduction (and beta)
        params (ModelParams): Model coefficients
        t (float): Time
        chi (float): Current chi

    Returns:
        float: chi'
    """
    p_value, q_value = _p_q(branch, params, t)
    ratio = (p_value - chi) / params.R
    ratio_prime = (q_value - chi) * ratio - params.S * ratio * ratio
    lead = 0.5 / (t * t) if branch.kind.gaussian else 0.0
    return lead - params.R * ratio_prime


def pole_base(branch, params, t):
    """
    Quantity whose zeros are the poles of the branch; None for pole-free branches.
    """
    kind, c, p = branch.kind, branch.constant, params
    if kind is ChiBranchKind.PRIMARY:
        return np.exp(-branch.gamma(p) * t) + c
    if kind is ChiBranchKind.GAMMA_ZERO:
        if close(p.R, p.S):
            return None
        return c + (p.R - p.S) * t
    if kind is ChiBranchKind.GAUSSIAN_GENERAL:
        return c + np.exp((p.S - 1.0) * t)
    return None


def _check_time(branch, t):
    if branch.kind.gaussian and np.any(np.asarray(t) <= 0):
        raise PoleError(f"chi branch {branch.kind.value} is defined for t > 0 only")


def chi_closed_form(branch, params, t):
    """
    Evaluate chi of a branch.

    Args:
        branch (ChiBranch): Branch and constant
        params (ModelParams): Model coefficients
        t (float): Time

    Returns:
        float: chi(t)

    Raises:
        ConstraintError: If the branch constraints fail
        PoleError: At a pole of the branch
    """
    branch.check(params)
    _check_time(branch, t)
    p, c, kind = params, branch.constant, branch.kind
    p_value, _ = _p_q(branch, p, t)
    base = pole_base(branch, p, t)
    if base is not None and abs(base) < SINGULAR_GUARD:
        raise PoleError(f"{branch.label()} has a pole at t={t:.12g}")
    gamma = branch.gamma(p)
    if kind is ChiBranchKind.PRIMARY:
        return p_value - gamma * p.R / ((p.R - p.S) * (1.0 + c * math.exp(gamma * t)))
    if kind is ChiBranchKind.EQUAL_RS:
        return p_value + c * math.exp(-gamma * t)
    if kind is ChiBranchKind.GAMMA_ZERO:
        if base is None:
            return p_value + p.R / c
        return p_value + p.R / base
    if kind is ChiBranchKind.GAUSSIAN_GENERAL:
        return p_value + p.R * (p.S - 1.0) / ((p.R - p.S) * (1.0 + c * math.exp((1.0 - p.S) * t)))
    return p_value + c * math.exp((p.S - 1.0) * t)


def chi_antiderivative(branch, params, t):
    """
    An antiderivative of chi, vectorised in t.

    Returns:
        float or np.ndarray: F(t) with F' = chi
    """
    p, c, kind = params, branch.constant, branch.kind
    gamma = branch.gamma(p)
    if kind.gaussian:
        leading = t - 0.5 * np.log(t)
    else:
        leading = (1.0 + branch.beta ** 2) * t
    if kind is ChiBranchKind.PRIMARY:
        return leading + p.R / (p.R - p.S) * np.log(np.abs(np.exp(-gamma * t) + c))
    if kind is ChiBranchKind.EQUAL_RS:
        if abs(gamma) <= EQUALITY_TOL:
            return leading + c * t
        return leading - c / gamma * np.exp(-gamma * t)
    if kind is ChiBranchKind.GAMMA_ZERO:
        if close(p.R, p.S):
            return leading + p.R / c * t
        return leading + p.R / (p.R - p.S) * np.log(np.abs(c + (p.R - p.S) * t))
    if kind is ChiBranchKind.GAUSSIAN_GENERAL:
        return leading + p.R / (p.R - p.S) * np.log(np.abs(c + np.exp((p.S - 1.0) * t)))
    sigma = p.S - 1.0
    if abs(sigma) <= EQUALITY_TOL:
        return leading + c * t
    return leading + c / sigma * np.exp(sigma * t)


def psi_ratio(branch, params, t, chi):
    """psi/phi recovered from chi: (P - chi)/R."""
    p_value, _ = _p_q(branch, params, t)
    return (p_value - chi) / params.R


class ChiLiftSolution(ExactSolution):
    """
    (u, v) lifted from a chi branch.

        phi = phi0 exp(F(t) - F(t_ref)),  psi = (P - chi) phi / R
        exponential branches: u = phi e^{beta x},       v = psi e^{beta x}
        Gaussian branches:    u = phi e^{-x^2/(4t)},    v = psi e^{-x^2/(4t)}

    With t_ref = None the normalisation F(t_ref) is dropped.
    """

    def __init__(self, branch, params, phi0=1.0, t_ref=None, spec=None):
        branch.check(params)
        if not phi0 > 0:
            raise ConstraintError(f"chi lift requires phi0 > 0, got {phi0:g}")
        self.branch = branch
        self.phi0 = phi0
        self.t_ref = t_ref
        self.offset = 0.0
        if t_ref is not None:
            _check_time(branch, t_ref)
            self.offset = float(chi_antiderivative(branch, params, t_ref))

        reference = t_ref if t_ref is not None else (1.0 if branch.kind.gaussian else 0.0)
        base_ref = pole_base(branch, params, reference)
        if base_ref is not None and abs(base_ref) < SINGULAR_GUARD:
            raise PoleError(f"{branch.label()} has a pole at the reference time t={reference:.12g}")
        predicates = []
        descriptions = []
        if branch.kind.gaussian:
            predicates.append(lambda t, x: t > 0)
            descriptions.append("t > 0")
        if base_ref is not None:
            side = math.copysign(1.0, base_ref)
            predicates.append(lambda t, x: side * pole_base(branch, params, t) > 0)
            descriptions.append(f"no pole between t and t={reference:g}")
        domain = None
        if predicates:
            domain = Domain(
                " and ".join(descriptions),
                lambda t, x: np.logical_and.reduce([pred(t, x) for pred in predicates]),
            )
        provenance = (spec.label(),) if spec is not None else (branch.label(),)
        super().__init__(params, spec, domain, provenance=provenance)
        logger.debug("lifted %s with phi0=%g, t_ref=%s", branch.label(), phi0, t_ref)

    def chi(self, t):
        """Vectorised chi without pole checks."""
        p, c, kind = self.params, self.branch.constant, self.branch.kind
        gamma = self.branch.gamma(p)
        p_value, _ = _p_q(self.branch, p, t)
        if kind is ChiBranchKind.PRIMARY:
            return p_value - gamma * p.R / ((p.R - p.S) * (1.0 + c * np.exp(gamma * t)))
        if kind is ChiBranchKind.EQUAL_RS:
            return p_value + c * np.exp(-gamma * t)
        if kind is ChiBranchKind.GAMMA_ZERO:
            if close(p.R, p.S):
                return p_value + p.R / c
            return p_value + p.R / (c + (p.R - p.S) * t)
        if kind is ChiBranchKind.GAUSSIAN_GENERAL:
            return p_value + p.R * (p.S - 1.0) / ((p.R - p.S) * (1.0 + c * np.exp((1.0 - p.S) * t)))
        return p_value + c * np.exp((p.S - 1.0) * t)

    def log_phi(self, t):
        return math.log(self.phi0) + chi_antiderivative(self.branch, self.params, t) - self.offset

    def phi_psi(self, t):
        phi = np.exp(self.log_phi(t))
        return phi, psi_ratio(self.branch, self.params, t, self.chi(t)) * phi

    def fields(self, t, x):
        if self.branch.kind.gaussian:
            spatial = -x * x / (4.0 * t)
        else:
            spatial = self.branch.beta * x
        u = np.exp(self.log_phi(t) + spatial)
        v = psi_ratio(self.branch, self.params, t, self.chi(t)) * u
        return u, v


def chi_to_solution(branch, params, phi0=1.0, t_ref=None, spec=None):
    """
    Lift a chi branch to an exact solution of the model.

    Args:
        branch (ChiBranch): Branch, constant and beta
        params (ModelParams): Model coefficients
        phi0 (float): phi at t_ref, positive
        t_ref (float, optional): Normalisation time
        spec (SolutionSpec, optional): Catalogue selection the lift stands for

    Returns:
        ChiLiftSolution: The lifted solution

    Raises:
        ConstraintError: If the branch constraints fail or phi0 <= 0
        PoleError: If t_ref sits on a pole
    """
    if spec is None and not branch.kind.gaussian:
        spec = SolutionSpec(
            Family.F4_EXP_SEPARABLE, params,
            {"beta": branch.beta, "C1": branch.constant}, form=branch.kind.value,
        )
    return ChiLiftSolution(branch, params, phi0=phi0, t_ref=t_ref, spec=spec)
