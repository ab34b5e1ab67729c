"""
Solution families built from conditional (non-Lie) symmetries, with their closed-form building blocks.
"""

import logging
import math

import numpy as np

from models.params import close
from models.solution import Domain, ExactSolution
from utils.errors import ConstraintError
from utils.special_functions import asinh_log

logger = logging.getLogger(__name__)


def _require_conditional_system(p, family):
    p.require(p.A == 0, f"{family} requires A = 0")
    p.require(close(p.R, p.S), f"{family} requires R = S")


def f_closed_form(params, t, sign):
    """
    Explicit f(t) for C1 = 0 and its derivative.

    f = sign sqrt(3 sigma / D) e^{sigma t}, f' = 3 sigma f / D,
    with sigma = S - 1 and D = 3 + (1 - d) e^{2 sigma t}.

    Args:
        params (ModelParams): Coefficients (d != 1, S > 1)
        t: Time, scalar or array
        sign (int): +1 or -1

    Returns:
        tuple: (f, f')
    """
    sigma = params.S - 1.0
    growth = np.exp(sigma * t)
    denom = 3.0 + (1.0 - params.d) * growth * growth
    f = sign * np.sqrt(3.0 * sigma / denom) * growth
    return f, 3.0 * sigma * f / denom


def printed_k_coefficients(params, t):
    """
    K1 and K0 of the linear chi equation at C1 = 0, in their rational-exponential form.

    Returns:
        tuple: (K1, K0)
    """
    p = params
    e2 = np.exp(2.0 * (p.S - 1.0) * t)
    denom = 3.0 + (1.0 - p.d) * e2
    b1 = 3.0 * (3.0 * p.S + 6.0 * p.d * p.S - 7.0 * p.d - 2.0)
    b2 = 2.0 * (p.d - 1.0) * (2.0 + p.d - 3.0 * p.S)
    k1 = (1.0 - p.S) * (3.0 + 2.0 * (p.d - 1.0) * e2) / denom
    k0 = (1.0 - p.S) / denom ** 2 * (b2 * e2 * e2 + b1 * e2 - 9.0)
    return k1, k0


class ConditionalUnequalDiffusionSolution(ExactSolution):
    """
    F7: explicit solution of the R = S, A = 0 system with d != 1.

        u = phi(t) e^{x f(t)}
        v = (psi(t)/phi(t) - x f'(t)/S) u

    with f from f_closed_form, phi = e^{G + t} D^{3(2d-1)/(2(d-1))} and
    psi = 3(1 - S) G phi / (S D). G uses asinh for d < 1 and asin for d > 1.

    The "printed" form replaces the f'/S term by a power of 3 sigma / D
    (cube root by default); it fails the residual gate and needs the
    unverified flag.

    Attributes:
        sign (int): Branch of f
        c (float): Integration constant in G
    """

    def __init__(self, spec):
        p = spec.params
        p.require(not close(p.d, 1.0), "F7 requires d != 1")
        p.require(p.S > 1.0, "F7 requires S > 1 for real f")
        _require_conditional_system(p, "F7")
        if "sign" not in spec.constants:
            raise ConstraintError("F7 requires an explicit sign (+1 or -1)")
        sign = spec.constant("sign")
        if sign not in (1.0, -1.0):
            raise ConstraintError(f"F7 sign must be +1 or -1, got {sign:g}")
        self.sign = int(sign)
        self.c = spec.constant("C", 0.0)
        self.sigma = p.S - 1.0
        self.exponent = 3.0 * (2.0 * p.d - 1.0) / (2.0 * (p.d - 1.0))
        self.printed = spec.form == "printed"
        if self.printed and not spec.unverified_as_printed:
            raise ConstraintError("F7 printed form fails the residual gate; pass unverified_as_printed to build it")
        self.printed_power = spec.constant("printed_power", 1.0 / 3.0) if self.printed else None
        self.printed_scale = spec.constant("printed_scale", 1.0) if self.printed else None
        domain = Domain.everywhere()
        if p.d > 1:
            domain = Domain(
                "3 + (1-d) exp(2(S-1)t) > 0",
                lambda t, x: 3.0 + (1.0 - p.d) * np.exp(2.0 * self.sigma * t) > 0,
            )
        super().__init__(p, spec, domain, verified=not self.printed)

    def denominator(self, t):
        return 3.0 + (1.0 - self.params.d) * np.exp(2.0 * self.sigma * t)

    def g_function(self, t):
        """The auxiliary function G(t)."""
        d = self.params.d
        growth = np.exp(self.sigma * t)
        prefactor = growth / np.sqrt(self.denominator(t))
        if d < 1:
            root = math.sqrt(1.0 - d)
            inner = 6.0 * d / root * asinh_log(root / math.sqrt(3.0) * growth)
        else:
            root = math.sqrt(d - 1.0)
            inner = 6.0 * d / root * np.arcsin(root / math.sqrt(3.0) * growth)
        return prefactor * (self.c + inner)

    def f(self, t):
        """(f, f') of the invariant surface condition."""
        return f_closed_form(self.params, t, self.sign)

    def phi_psi(self, t):
        """(phi, psi) of the reduced system."""
        p = self.params
        denom = self.denominator(t)
        g = self.g_function(t)
        phi = np.exp(g + t) * denom ** self.exponent
        psi = 3.0 * (1.0 - p.S) * g / (p.S * denom) * phi
        return phi, psi

    def fields(self, t, x):
        p = self.params
        denom = self.denominator(t)
        g = self.g_function(t)
        f, f_prime = self.f(t)
        log_u = g + t + self.exponent * np.log(denom) + x * f
        u = np.exp(log_u)
        ratio = 3.0 * (1.0 - p.S) * g / (p.S * denom)
        if self.printed:
            slope = self.sign * self.printed_scale * (3.0 * self.sigma / denom) ** self.printed_power
            slope = slope * np.exp(self.sigma * t)
        else:
            slope = f_prime / p.S
        return u, (ratio - x * slope) * u


class ConditionalEqualDiffusionSolution(ExactSolution):
    """
    F8: explicit solutions of the R = S, A = 0 system with d = 1.

    Forms:
        general: constants C, C2, C3
        special: C (C2 = C3 = 0)
        shifted: C, t0, x0, the special form translated in t and x
        simplified: C, C2, the general form with the Galilei boost removed
    """

    FORMS = ("general", "special", "shifted", "simplified")

    def __init__(self, spec):
        p = spec.params
        p.require(close(p.d, 1.0), "F8 requires d = 1")
        _require_conditional_system(p, "F8")
        form = "special" if spec.form == "primary" else spec.form
        if form not in self.FORMS:
            raise ConstraintError(f"F8 form must be one of {self.FORMS}, got {spec.form!r}")
        self.form = form
        self.sigma = p.S - 1.0
        self.c = spec.constant("C")
        self.c2 = spec.constant("C2", 0.0) if form in ("general", "simplified") else 0.0
        self.c3 = spec.constant("C3", 0.0) if form == "general" else 0.0
        self.t0 = spec.constant("t0", 0.0) if form == "shifted" else 0.0
        self.x0 = spec.constant("x0", 0.0) if form == "shifted" else 0.0
        super().__init__(p, spec)

    def positivity_regime(self):
        """Whether C <= -(1/8) e^{(1-S) t0} and S > 1 hold."""
        return self.sigma > 0 and self.c <= -0.125 * math.exp(-self.sigma * self.t0)

    def fields(self, t, x):
        S, sigma, c = self.params.S, self.sigma, self.c
        if self.form in ("special", "shifted"):
            tau, y = t + self.t0, x + self.x0
            source = c * np.exp(sigma * tau)
            u = np.exp((9.0 - S) / 8.0 * tau + source - sigma / 8.0 * y * y)
            v = sigma / (16.0 * S) * (-2.0 - 16.0 * source + sigma * y * y) * u
            return u, v
        source = c * np.exp(sigma * t)
        if self.form == "simplified":
            u = np.exp((9.0 - S) / 8.0 * t + self.c2 * x - sigma / 8.0 * x * x + source)
            v = ((4.0 * self.c2 - sigma * x) ** 2 - 2.0 * sigma * (1.0 + 8.0 * source)) / (16.0 * S) * u
            return u, v
        y = 4.0 * self.c3 * t - x
        u = np.exp(
            ((9.0 - S) / 8.0 - 4.0 * self.c3 ** 2) * t
            + (2.0 * self.c3 - self.c2) * y
            - sigma / 8.0 * y * y
            + source
        )
        v = ((4.0 * self.c2 + sigma * y) ** 2 - 2.0 * sigma * (1.0 + 8.0 * source)) / (16.0 * S) * u
        return u, v

    def gh(self, t):
        """
        (g, g', g'', h, h') of the conditional operator admitted by this member.

        Returns:
            tuple: Five values at t
        """
        sigma = self.sigma
        if self.form == "shifted":
            g = math.exp(sigma * (t + self.t0) / 2.0)
            k = -sigma * self.x0 / 4.0
            return g, sigma / 2.0 * g, sigma ** 2 / 4.0 * g, k * g, k * sigma / 2.0 * g
        g = math.exp(sigma * t / 2.0)
        n = self.c2 - 2.0 * self.c3 + sigma * self.c3 * t
        h = n * g
        h_prime = sigma * self.c3 * g + n * sigma / 2.0 * g
        return g, sigma / 2.0 * g, sigma ** 2 / 4.0 * g, h, h_prime


def gh_particular(S, c1, c2, c3, t):
    """
    Particular solution g = C1 e^{(S-1)t/2}, h = (C2 + C3 t) e^{(S-1)t/2} of the g, h system.

    Returns:
        tuple: (g, g', g'', h, h')
    """
    half = (S - 1.0) / 2.0
    e = math.exp(half * t)
    g = c1 * e
    h = (c2 + c3 * t) * e
    return g, half * g, half * half * g, h, c3 * e + half * h


def case_ii_phi_psi(S, c, c2, c3, t):
    """
    Closed-form (phi, psi) of the equal-diffusion reduced system for g = e^{(S-1)t/2}.

    Returns:
        tuple: (phi, psi)
    """
    sigma = S - 1.0
    source = c * np.exp(sigma * t)
    phi = np.exp((9.0 - S) / 8.0 * t - 4.0 * c3 * (c2 - c3) * t - 2.0 * c3 ** 2 * sigma * t * t + source)
    psi = ((-sigma) / 8.0 + (c2 + c3 * sigma * t) ** 2 - sigma * source) / S * phi
    return phi, psi
