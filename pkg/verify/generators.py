"""
Infinitesimal generators xi0 d_t + xi1 d_x + eta1 d_u + eta2 d_v of the model.
"""

from dataclasses import dataclass

import numpy as np

from models.params import close
from utils.errors import ConstraintError


def _zero(t, x, u, v):
    return 0.0


@dataclass(frozen=True)
class GeneratorSpec:
    """
    Coefficient functions of one generator, each a closure of (t, x, u, v).

    Attributes:
        tag (str): Operator name, e.g. "P_x" or "Q2"
        xi0 (callable): Coefficient of d_t
        xi1 (callable): Coefficient of d_x
        eta1 (callable): Coefficient of d_u
        eta2 (callable): Coefficient of d_v
    """

    tag: str
    xi0: object = _zero
    xi1: object = _zero
    eta1: object = _zero
    eta2: object = _zero

    def characteristic(self, t, x, u, v, ut, vt, ux, vx):
        """(eta1 - xi0 u_t - xi1 u_x, eta2 - xi0 v_t - xi1 v_x)."""
        xi0 = self.xi0(t, x, u, v)
        xi1 = self.xi1(t, x, u, v)
        return (self.eta1(t, x, u, v) - xi0 * ut - xi1 * ux,
                self.eta2(t, x, u, v) - xi0 * vt - xi1 * vx)


def time_translation():
    return GeneratorSpec("P_t", xi0=lambda t, x, u, v: 1.0)


def space_translation():
    return GeneratorSpec("P_x", xi1=lambda t, x, u, v: 1.0)


def scaling():
    return GeneratorSpec("I", eta1=lambda t, x, u, v: u, eta2=lambda t, x, u, v: v)


def dilation():
    return GeneratorSpec(
        "D",
        xi0=lambda t, x, u, v: 2.0 * t,
        xi1=lambda t, x, u, v: x,
        eta1=lambda t, x, u, v: 2.0 * (1.0 + t) * u,
        eta2=lambda t, x, u, v: 2.0 * t * v,
    )


def galilei():
    return GeneratorSpec(
        "G",
        xi1=lambda t, x, u, v: 2.0 * t,
        eta1=lambda t, x, u, v: -x * u,
        eta2=lambda t, x, u, v: -x * v,
    )


def equal_rs(S):
    sigma = S - 1.0
    return GeneratorSpec(
        "Q",
        eta1=lambda t, x, u, v: np.exp(sigma * t) * S * u,
        eta2=lambda t, x, u, v: np.exp(sigma * t) * (S * v + (1.0 - S) * u),
    )


def predator_shift():
    return GeneratorSpec(
        "Y",
        eta1=lambda t, x, u, v: t * u,
        eta2=lambda t, x, u, v: t * v - u,
    )


def projective(R):
    if close(R, 1.0):
        raise ConstraintError("the projective generator requires R != 1")

    def weight(t, x):
        return t * t + (R + 1.0) / (2.0 * (R - 1.0)) * t - x * x / 4.0

    return GeneratorSpec(
        "Pi",
        xi0=lambda t, x, u, v: t * t,
        xi1=lambda t, x, u, v: t * x,
        eta1=lambda t, x, u, v: weight(t, x) * u,
        eta2=lambda t, x, u, v: weight(t, x) * v + u / (1.0 - R) - 2.0 * t * v,
    )


def conditional_unequal(f, S):
    """Generator d_x + f u d_u + (f v - f' u / S) d_v for t -> (f, f')."""
    def eta1(t, x, u, v):
        return np.vectorize(f)(t)[0] * u

    def eta2(t, x, u, v):
        values, slopes = np.vectorize(f)(t)
        return values * v - slopes / S * u

    return GeneratorSpec("Q1", xi1=lambda t, x, u, v: 1.0, eta1=eta1, eta2=eta2)


def conditional_equal(gh, S):
    """
    Generator 2g d_x + (2h - g'x) u d_u + ((2h - g'x) v - (2h' - g''x) u / S) d_v.
    """
    def parts(t):
        return np.vectorize(gh)(t)

    def xi1(t, x, u, v):
        return 2.0 * parts(t)[0]

    def eta1(t, x, u, v):
        g, gp, gpp, h, hp = parts(t)
        return (2.0 * h - gp * x) * u

    def eta2(t, x, u, v):
        g, gp, gpp, h, hp = parts(t)
        return (2.0 * h - gp * x) * v - (2.0 * hp - gpp * x) * u / S

    return GeneratorSpec("Q2", xi1=xi1, eta1=eta1, eta2=eta2)


def admissible(tag, params):
    """
    Whether the model with these coefficients admits the Lie generator.

    Conditional generators (Q1, Q2) are not Lie symmetries; they report
    the constraints of their families.
    """
    p = params
    a0 = p.A == 0
    d1 = close(p.d, 1.0)
    s1 = close(p.S, 1.0)
    rs = close(p.R, p.S)
    checks = {
        "P_t": True,
        "P_x": True,
        "I": a0,
        "D": a0 and s1,
        "G": a0 and d1,
        "Q": a0 and d1 and rs and not s1,
        "Y": a0 and d1 and s1 and close(p.R, 1.0),
        "Pi": a0 and d1 and s1 and not close(p.R, 1.0),
        "Q1": a0 and rs and not d1,
        "Q2": a0 and rs and d1,
    }
    return checks[tag]


_LIBRARY = {
    "P_t": lambda params, **kw: time_translation(),
    "P_x": lambda params, **kw: space_translation(),
    "I": lambda params, **kw: scaling(),
    "D": lambda params, **kw: dilation(),
    "G": lambda params, **kw: galilei(),
    "Q": lambda params, **kw: equal_rs(params.S),
    "Y": lambda params, **kw: predator_shift(),
    "Pi": lambda params, **kw: projective(params.R),
    "Q1": lambda params, f=None, **kw: conditional_unequal(f, params.S),
    "Q2": lambda params, gh=None, **kw: conditional_equal(gh, params.S),
}

GENERATOR_TAGS = tuple(_LIBRARY)


def generator(tag, params, **functions):
    """
    Look up a generator by tag.

    Args:
        tag (str): One of GENERATOR_TAGS
        params (ModelParams): Coefficients the generator depends on
        **functions: f for Q1, gh for Q2

    Returns:
        GeneratorSpec: The generator

    Raises:
        ConstraintError: For an unknown tag or a missing function
    """
    if tag not in _LIBRARY:
        raise ConstraintError(f"unknown generator {tag!r}; expected one of {', '.join(GENERATOR_TAGS)}")
    if tag == "Q1" and functions.get("f") is None:
        raise ConstraintError("generator Q1 requires f")
    if tag == "Q2" and functions.get("gh") is None:
        raise ConstraintError("generator Q2 requires gh")
    return _LIBRARY[tag](params, **functions)
