"""
Galilei boost of the equal-diffusion system.
"""

import numpy as np

from commands.transform_command import TransformCommand, TransformKind, TransformSpec
from models.params import close


class GalileiCommand(TransformCommand):
    """
    u_new(t, x) = u(t, x + eps t) exp(eps/2 (x + eps t/2)), same for v.

    Valid for d = 1 and A = 0.

    Attributes:
        eps (float): Boost velocity
    """

    def __init__(self, eps):
        super().__init__(TransformSpec(TransformKind.GALILEI, float(eps)), f"Galilei(eps={eps:g})")
        self.eps = float(eps)

    def check(self, sol):
        self._require(close(sol.params.d, 1.0), "d = 1", sol)
        self._require(sol.params.A == 0, "A = 0", sol)

    def pull_back(self, t, x):
        return t, x + self.eps * t

    def factor(self, t, x):
        return np.exp(0.5 * self.eps * (x + 0.5 * self.eps * t))

    def inverse(self):
        return GalileiCommand(-self.eps)
