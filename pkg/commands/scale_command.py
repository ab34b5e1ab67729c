"""
Scaling of both components by a constant.
"""

from commands.transform_command import TransformCommand, TransformKind, TransformSpec
from utils.errors import ConstraintError


class ScaleCommand(TransformCommand):
    """
    (u, v) -> (C u, C v), a symmetry only when A = 0.

    Attributes:
        c (float): Nonzero factor
    """

    def __init__(self, c):
        if c == 0:
            raise ConstraintError("Scale requires C != 0")
        super().__init__(TransformSpec(TransformKind.SCALE, float(c)), f"Scale(C={c:g})")
        self.c = float(c)

    def check(self, sol):
        self._require(sol.params.A == 0, "A = 0", sol)

    def factor(self, t, x):
        return self.c

    def inverse(self):
        return ScaleCommand(1.0 / self.c)
