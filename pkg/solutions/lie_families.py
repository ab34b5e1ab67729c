"""
Solution families obtained from Lie-symmetry reductions, and the constant steady state.
"""

import logging
import math

import numpy as np

from models.params import close
from models.solution import Domain, ExactSolution
from settings.defaults import AIRY_Z_OVERFLOW, EQUALITY_TOL
from utils.errors import ConstraintError
from utils.special_functions import airy_ai_bi, log_cosh

logger = logging.getLogger(__name__)


class SteadyStateSolution(ExactSolution):
    """
    Constant coexistence state u = v = A/(R - 1), which needs A > 0 and R > 1.
    """

    def __init__(self, spec):
        p = spec.params
        p.require(p.A > 0, "steady state requires A > 0")
        p.require(p.R > 1, "steady state requires R > 1")
        super().__init__(p, spec)
        self.level = p.A / (p.R - 1.0)

    def fields(self, t, x):
        shape = np.broadcast(np.asarray(t), np.asarray(x)).shape
        value = np.full(shape, self.level) if shape else self.level
        return value, value


class PowerLawSolution(ExactSolution):
    """
    F1: u = x^p e^{beta t} with p in {1, 3/2}, on x > 0.

    Requires S = dR, d != 1, A = 0; the growth rate is fixed at
    beta = d(R - 1)/(1 - d).
    """

    def __init__(self, spec):
        p = spec.params
        p.require(not close(p.d, 1.0), "F1 requires d != 1")
        p.require(close(p.S, p.d * p.R), "F1 requires S = dR")
        p.require(p.A == 0, "F1 requires A = 0")
        self.power = spec.constant("power", 1.5)
        if not (close(self.power, 1.0) or close(self.power, 1.5)):
            raise ConstraintError(f"F1 power must be 1 or 1.5, got {self.power:g}")
        self.beta = p.d * (p.R - 1.0) / (1.0 - p.d)
        super().__init__(p, spec, Domain("x > 0", lambda t, x: x > 0))

    def fields(self, t, x):
        p = self.params
        growth = np.exp(self.beta * t)
        if close(self.power, 1.0):
            u = x * growth
            return u, (1.0 - self.beta) / p.R * u
        u = x ** 1.5 * growth
        v = (3.0 / (4.0 * p.R) * x ** -0.5 + (1.0 - p.d * p.R) / ((1.0 - p.d) * p.R) * x ** 1.5) * growth
        return u, v


def _branch_tolerance(value):
    return EQUALITY_TOL * max(1.0, abs(value))


class TravellingWaveSolution(ExactSolution):
    """
    F2: u = phi(x - alpha t) e^{beta t}, v = (1 - S)/(R - S) u, for d = 1.

    The profile phi has a two-exponential, a sine or a degenerate-linear
    form depending on the sign of beta - beta_c with
    beta_c = S(R - 1)/(R - S) - alpha^2/4.

    Attributes:
        branch (str): "exponential", "sine" or "linear"
        kappa (float): sqrt(|beta - beta_c|)
    """

    BRANCHES = ("exponential", "sine", "linear")

    def __init__(self, spec):
        p = spec.params
        p.require(close(p.d, 1.0), "F2 requires d = 1")
        p.require(not close(p.R, p.S), "F2 requires R != S")
        p.require(p.A == 0, "F2 requires A = 0")
        self.alpha = spec.constant("alpha", 0.0)
        self.beta = spec.constant("beta")
        self.c1 = spec.constant("C1", 1.0)
        self.c2 = spec.constant("C2", 0.0)
        self.c0 = spec.constant("C0", 0.0)
        threshold = p.S * (p.R - 1.0) / (p.R - p.S) - self.alpha ** 2 / 4.0
        gap = self.beta - threshold
        if abs(gap) <= _branch_tolerance(threshold):
            branch = "linear"
        elif gap > 0:
            branch = "exponential"
        else:
            branch = "sine"
        if spec.form not in ("primary", "auto") and spec.form != branch:
            raise ConstraintError(
                f"F2 {spec.form} branch requires the matching branch condition on beta; "
                f"beta={self.beta:g} against threshold {threshold:g} selects {branch}"
            )
        self.branch = branch
        self.kappa = math.sqrt(abs(gap))
        self.ratio = (1.0 - p.S) / (p.R - p.S)
        domain = Domain.everywhere()
        if branch == "sine" and spec.constants.get("positive_lobe"):
            domain = Domain(
                "C1 sin(kappa (x - alpha t) + C0) > 0",
                lambda t, x: self.c1 * np.sin(self.kappa * (x - self.alpha * t) + self.c0) > 0,
            )
        logger.debug("F2 branch %s, kappa=%g", branch, self.kappa)
        super().__init__(p, spec, domain)

    def profile(self, w):
        """Travelling profile phi(w)."""
        half = self.alpha / 2.0
        if self.branch == "exponential":
            return self.c1 * np.exp(-(self.kappa + half) * w) + self.c2 * np.exp((self.kappa - half) * w)
        if self.branch == "sine":
            return self.c1 * np.sin(self.kappa * w + self.c0) * np.exp(-half * w)
        return (self.c1 + self.c2 * w) * np.exp(-half * w)

    def fields(self, t, x):
        u = self.profile(x - self.alpha * t) * np.exp(self.beta * t)
        return u, self.ratio * u


class StationaryProfileSolution(ExactSolution):
    """
    F3: u = phi(x) e^{beta t}, v = m u, for d != 1.

    phi'' = k^2 phi with k^2 = ((R - S) beta + S(1 - R))/(dR - S) and
    m = (d - S + (1 - d) beta)/(dR - S).
    """

    def __init__(self, spec):
        p = spec.params
        p.require(not close(p.d, 1.0), "F3 requires d != 1")
        p.require(not close(p.d * p.R, p.S), "F3 requires dR != S")
        p.require(p.A == 0, "F3 requires A = 0")
        self.beta = spec.constant("beta")
        self.c1 = spec.constant("C1", 1.0)
        self.c2 = spec.constant("C2", 0.0)
        self.c0 = spec.constant("C0", 0.0)
        denominator = p.d * p.R - p.S
        k_squared = ((p.R - p.S) * self.beta + p.S * (1.0 - p.R)) / denominator
        if abs(k_squared) <= _branch_tolerance(self.beta):
            branch = "linear"
        elif k_squared > 0:
            branch = "exponential"
        else:
            branch = "sine"
        if spec.form not in ("primary", "auto") and spec.form != branch:
            raise ConstraintError(
                f"F3 {spec.form} branch requires the matching sign of k^2; got k^2={k_squared:g}"
            )
        self.branch = branch
        self.k_squared = k_squared
        self.kappa = math.sqrt(abs(k_squared))
        self.ratio = (p.d - p.S + (1.0 - p.d) * self.beta) / denominator
        domain = Domain.everywhere()
        if branch == "sine" and spec.constants.get("positive_lobe"):
            domain = Domain(
                "C1 sin(kappa x + C0) > 0",
                lambda t, x: self.c1 * np.sin(self.kappa * x + self.c0) > 0,
            )
        super().__init__(p, spec, domain)

    def profile(self, x):
        if self.branch == "exponential":
            return self.c1 * np.exp(-self.kappa * x) + self.c2 * np.exp(self.kappa * x)
        if self.branch == "sine":
            return self.c1 * np.sin(self.kappa * x + self.c0)
        return self.c1 + self.c2 * x

    def fields(self, t, x):
        u = self.profile(x) * np.exp(self.beta * t)
        return u, self.ratio * u


class ExpSeparableSolution(ExactSolution):
    """
    F4 primary branch, with gamma = 1 - S + (1 - d) beta^2:

        u = (C + e^{-gamma t})^{R/(R-S)} e^{(1+beta^2) t + beta x}
        v = gamma/(R-S) (C + e^{-gamma t})^{S/(R-S)} e^{(S + d beta^2) t + beta x}
    """

    def __init__(self, spec):
        p = spec.params
        p.require(p.A == 0, "F4 requires A = 0")
        self.beta = spec.constant("beta")
        self.c = spec.constant("C")
        self.gamma = 1.0 - p.S + (1.0 - p.d) * self.beta ** 2
        p.require(abs(self.gamma) > EQUALITY_TOL, "F4 primary branch requires gamma != 0")
        p.require(not close(p.R, p.S), "F4 primary branch requires R != S")
        super().__init__(p, spec, Domain("C + exp(-gamma t) > 0", self._base_positive))

    def _base_positive(self, t, x):
        return self.c + np.exp(-self.gamma * t) > 0

    def fields(self, t, x):
        p = self.params
        base = self.c + np.exp(-self.gamma * t)
        log_base = np.log(base)
        u = np.exp(p.R / (p.R - p.S) * log_base + (1.0 + self.beta ** 2) * t + self.beta * x)
        v = self.gamma / (p.R - p.S) * np.exp(
            p.S / (p.R - p.S) * log_base + (p.S + p.d * self.beta ** 2) * t + self.beta * x
        )
        return u, v


class AirySolution(ExactSolution):
    """
    F5: Airy-profile family for d = 1.

        z = alpha^{-4/3} (t^2 - alpha x) + alpha^{2/3} S(1 - R)/(R - S)
        u = (C1 Ai(z) + C2 Bi(z)) exp(2 t^3/(3 alpha^2) - t x/alpha)
        v = (S - 1)/(S - R) u
    """

    def __init__(self, spec):
        p = spec.params
        p.require(close(p.d, 1.0), "F5 requires d = 1")
        p.require(not close(p.R, p.S), "F5 requires R != S")
        p.require(p.A == 0, "F5 requires A = 0")
        self.alpha = spec.constant("alpha")
        if self.alpha == 0:
            raise ConstraintError("F5 requires alpha != 0")
        self.c1 = spec.constant("C1", 1.0)
        self.c2 = spec.constant("C2", 0.0)
        cube_root = float(np.cbrt(self.alpha))
        self.z_scale = 1.0 / cube_root ** 4
        self.z_shift = cube_root ** 2 * p.S * (1.0 - p.R) / (p.R - p.S)
        self.ratio = (p.S - 1.0) / (p.S - p.R)
        domain = Domain.everywhere()
        if self.c2 != 0:
            domain = Domain(f"Airy argument z < {AIRY_Z_OVERFLOW:g} (Bi finite)",
                            lambda t, x: self.argument(t, x) < AIRY_Z_OVERFLOW)
        super().__init__(p, spec, domain)

    def argument(self, t, x):
        """Airy argument z(t, x)."""
        return self.z_scale * (t * t - self.alpha * x) + self.z_shift

    def fields(self, t, x):
        ai, bi = airy_ai_bi(self.argument(t, x))
        envelope = np.exp(2.0 * t ** 3 / (3.0 * self.alpha ** 2) - t * x / self.alpha)
        u = (self.c1 * ai + self.c2 * bi) * envelope
        if np.ndim(u) == 0:
            u = float(u)
        return u, self.ratio * u


class GaussianSourceSolution(ExactSolution):
    """
    F6: heat-kernel type family for d = 1.

    The general form carries the constant C and lives on t > 0. The
    shifted form uses C = 1 rewritten with cosh/tanh and a time shift
    t0 > 0, and lives on t > -t0. Both are evaluated in log form.
    """

    FORMS = ("general", "shifted")

    def __init__(self, spec):
        p = spec.params
        p.require(close(p.d, 1.0), "F6 requires d = 1")
        p.require(not close(p.R, p.S), "F6 requires R != S")
        p.require(not close(p.S, 1.0), "F6 requires S != 1")
        p.require(p.A == 0, "F6 requires A = 0")
        form = "shifted" if spec.form == "primary" else spec.form
        if form not in self.FORMS:
            raise ConstraintError(f"F6 form must be one of {self.FORMS}, got {spec.form!r}")
        self.form = form
        self.power = p.R / (p.R - p.S)
        self.sigma = p.S - 1.0
        if form == "general":
            self.c = spec.constant("C", 1.0)
            domain = Domain(
                "t > 0 and C + exp((S-1) t) > 0",
                lambda t, x: (t > 0) & (self.c + np.exp(self.sigma * t) > 0),
            )
        else:
            self.t0 = spec.constant("t0")
            if not self.t0 > 0:
                raise ConstraintError(f"F6 shifted form requires t0 > 0, got {self.t0:g}")
            self.rate = (2.0 * p.S - p.R - p.R * p.S) / (2.0 * (p.S - p.R))
            domain = Domain("t > -t0", lambda t, x: t > -self.t0)
        super().__init__(p, spec, domain)

    def fields(self, t, x):
        p = self.params
        if self.form == "general":
            if self.c > 0:
                log_base = np.logaddexp(math.log(self.c), self.sigma * t)
            else:
                log_base = np.log(self.c + np.exp(self.sigma * t))
            kernel = -x * x / (4.0 * t) - 0.5 * np.log(t)
            u = np.exp(t + kernel + self.power * log_base)
            v = (p.S - 1.0) / (p.S - p.R) * np.exp(p.S * t + kernel + p.S / (p.R - p.S) * log_base)
            return u, v
        tau = t + self.t0
        half = 0.5 * self.sigma * tau
        u = np.exp(self.power * log_cosh(half) - 0.5 * np.log(tau) + self.rate * t - x * x / (4.0 * tau))
        v = self.sigma / (2.0 * (p.S - p.R)) * (1.0 + np.tanh(half)) * u
        return u, v
