"""
Airy functions of real argument and a few numerically safe elementary helpers.
"""

import math
from dataclasses import dataclass

import numpy as np

from settings.defaults import AIRY_Z_OVERFLOW, AIRY_Z_SWITCH
from utils.errors import InvalidParameterError

# Gamma(2/3) and Gamma(1/3) to 18 digits, from a 40-digit series evaluation.
GAMMA_TWO_THIRDS = 1.35411793942640041695
GAMMA_ONE_THIRD = 2.67893853470774763365

# Ai(0) = 3^(-2/3) / Gamma(2/3), -Ai'(0) = 3^(-1/3) / Gamma(1/3)
AI_ZERO = 0.355028053887817239260
AI_PRIME_ZERO = 0.258819403792806798405

SQRT3 = math.sqrt(3.0)
SQRT_PI = math.sqrt(math.pi)

_SERIES_MAX_TERMS = 400
_ASYMPTOTIC_MAX_TERMS = 80


@dataclass(frozen=True)
class AiryPair:
    """
    Values of Ai, Bi and their derivatives at one point.

    Attributes:
        ai (float): Ai(z)
        bi (float): Bi(z)
        ai_prime (float): Ai'(z)
        bi_prime (float): Bi'(z)
        saturated (bool): True when Bi overflowed and was returned as +inf
    """

    ai: float
    bi: float
    ai_prime: float
    bi_prime: float
    saturated: bool = False

    def wronskian(self):
        """Ai Bi' - Ai' Bi, equal to 1/pi for exact values."""
        return self.ai * self.bi_prime - self.ai_prime * self.bi


def _maclaurin(z):
    """Power series about the origin, valid for moderate |z|."""
    z3 = z * z * z
    # f and g are the two even/odd-type solutions of w'' = z w
    f_term, f_sum = 1.0, 1.0
    g_term, g_sum = z, z
    fp_term, fp_sum = z * z / 2.0, z * z / 2.0
    gp_term, gp_sum = 1.0, 1.0
    for k in range(_SERIES_MAX_TERMS):
        f_term *= z3 / ((3 * k + 2) * (3 * k + 3))
        g_term *= z3 / ((3 * k + 3) * (3 * k + 4))
        fp_term *= z3 / ((3 * k + 3) * (3 * k + 5))
        gp_term *= z3 / ((3 * k + 1) * (3 * k + 3))
        f_sum += f_term
        g_sum += g_term
        fp_sum += fp_term
        gp_sum += gp_term
        scale = max(abs(f_sum), abs(g_sum), abs(fp_sum), abs(gp_sum), 1e-300)
        if max(abs(f_term), abs(g_term), abs(fp_term), abs(gp_term)) < 1e-18 * scale and k > 2:
            break
    ai = AI_ZERO * f_sum - AI_PRIME_ZERO * g_sum
    ai_prime = AI_ZERO * fp_sum - AI_PRIME_ZERO * gp_sum
    bi = SQRT3 * (AI_ZERO * f_sum + AI_PRIME_ZERO * g_sum)
    bi_prime = SQRT3 * (AI_ZERO * fp_sum + AI_PRIME_ZERO * gp_sum)
    return AiryPair(ai, bi, ai_prime, bi_prime)


def _asymptotic_coefficients(count):
    """Coefficients u_k, v_k of the large-argument expansions."""
    u = [1.0]
    v = [1.0]
    for k in range(1, count):
        u_k = u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        u.append(u_k)
        v.append(-(6 * k + 1) / (6 * k - 1) * u_k)
    return u, v


_U_COEFFS, _V_COEFFS = _asymptotic_coefficients(_ASYMPTOTIC_MAX_TERMS)


def _truncated_sum(coeffs, zeta, alternating, start=0, stride=1):
    """Sum an asymptotic series, stopping before the smallest term grows again."""
    total = 0.0
    previous = math.inf
    for j, k in enumerate(range(start, len(coeffs), stride)):
        term = coeffs[k] / zeta ** k
        if alternating and j % 2 == 1:
            term = -term
        if abs(term) > previous:
            break
        total += term
        previous = abs(term)
        if previous < 1e-18 * abs(total):
            break
    return total


def _asymptotic_positive(z):
    """Exponential-type expansions for large positive z."""
    zeta = 2.0 / 3.0 * z ** 1.5
    z14 = z ** 0.25
    ai_sum = _truncated_sum([(-1) ** k * c for k, c in enumerate(_U_COEFFS)], zeta, False)
    aip_sum = _truncated_sum([(-1) ** k * c for k, c in enumerate(_V_COEFFS)], zeta, False)
    decay = math.exp(-zeta)
    ai = decay / (2.0 * SQRT_PI * z14) * ai_sum
    ai_prime = -z14 * decay / (2.0 * SQRT_PI) * aip_sum
    if z > AIRY_Z_OVERFLOW:
        return AiryPair(ai, math.inf, ai_prime, math.inf, saturated=True)
    growth = math.exp(zeta)
    bi = growth / (SQRT_PI * z14) * _truncated_sum(_U_COEFFS, zeta, False)
    bi_prime = z14 * growth / SQRT_PI * _truncated_sum(_V_COEFFS, zeta, False)
    return AiryPair(ai, bi, ai_prime, bi_prime)


def _asymptotic_negative(z):
    """Oscillatory expansions for large negative z."""
    y = -z
    zeta = 2.0 / 3.0 * y ** 1.5
    y14 = y ** 0.25
    phase = zeta - math.pi / 4.0
    c, s = math.cos(phase), math.sin(phase)
    u_even = _truncated_sum(_U_COEFFS, zeta, True, start=0, stride=2)
    u_odd = _truncated_sum(_U_COEFFS, zeta, True, start=1, stride=2)
    v_even = _truncated_sum(_V_COEFFS, zeta, True, start=0, stride=2)
    v_odd = _truncated_sum(_V_COEFFS, zeta, True, start=1, stride=2)
    ai = (c * u_even + s * u_odd) / (SQRT_PI * y14)
    bi = (-s * u_even + c * u_odd) / (SQRT_PI * y14)
    ai_prime = y14 * (s * v_even - c * v_odd) / SQRT_PI
    bi_prime = y14 * (c * v_even + s * v_odd) / SQRT_PI
    return AiryPair(ai, bi, ai_prime, bi_prime)


def airy(z, z_switch=AIRY_Z_SWITCH):
    """
    Evaluate Ai, Bi, Ai' and Bi' at a real point.

    The Maclaurin series is used for |z| <= z_switch and the large-argument
    expansions beyond. Bi and Bi' saturate to +inf for z above the
    representable range, with the saturated flag set.

    Args:
        z (float): Real argument
        z_switch (float): Series/asymptotic crossover

    Returns:
        AiryPair: Function and derivative values

    Raises:
        InvalidParameterError: If z is not finite
    """
    z = float(z)
    if not math.isfinite(z):
        raise InvalidParameterError("z", f"Airy argument must be finite, got {z}")
    if abs(z) <= z_switch:
        return _maclaurin(z)
    if z > 0:
        return _asymptotic_positive(z)
    return _asymptotic_negative(z)


def airy_ai_bi(z):
    """
    Vectorised Ai and Bi.

    Args:
        z (array_like): Real arguments

    Returns:
        tuple: (Ai, Bi) arrays with the shape of z
    """
    z = np.asarray(z, dtype=float)
    ai = np.empty_like(z)
    bi = np.empty_like(z)
    for index, value in np.ndenumerate(z):
        pair = airy(value)
        ai[index] = pair.ai
        bi[index] = pair.bi
    return ai, bi


def log_cosh(y):
    """log(cosh(y)) without overflow for large |y|."""
    a = np.abs(y)
    return a + np.log1p(np.exp(-2.0 * a)) - math.log(2.0)


def asinh_log(z):
    """Inverse hyperbolic sine written as log(z + sqrt(z^2 + 1))."""
    return np.log(z + np.sqrt(z * z + 1.0))
