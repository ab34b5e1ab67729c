"""
Exponential gauge between the DHT system with A = 0, S = 1 and the gauged system.
"""

import numpy as np

from commands.transform_command import TransformCommand, TransformKind, TransformSpec
from models.params import System, close


class GaugeExpCommand(TransformCommand):
    """
    forward: (u, v) -> (e^t u, e^t v), gauged system -> DHT with A = 0, S = 1.
    inverse: (u, v) -> (e^-t u, e^-t v), the opposite direction.

    Attributes:
        direction (str): "forward" or "inverse"
    """

    def __init__(self, direction="forward"):
        super().__init__(TransformSpec(TransformKind.GAUGE_EXP, direction), f"GaugeExp({direction})")
        self.direction = direction

    @property
    def _sign(self):
        return 1.0 if self.direction == "forward" else -1.0

    def check(self, sol):
        self._require(sol.params.A == 0, "A = 0", sol)
        self._require(close(sol.params.S, 1.0), "S = 1", sol)
        source = System.GAUGED if self.direction == "forward" else System.DHT
        self._require(sol.system is source, f"a solution of the {source.value} system", sol)

    def target(self, sol):
        system = System.DHT if self.direction == "forward" else System.GAUGED
        return sol.params, system

    def factor(self, t, x):
        return np.exp(self._sign * t)

    def inverse(self):
        return GaugeExpCommand("inverse" if self.direction == "forward" else "forward")
