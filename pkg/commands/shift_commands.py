"""
Time and space translations.
"""

from commands.transform_command import TransformCommand, TransformKind, TransformSpec


class TimeShiftCommand(TransformCommand):
    """
    (u, v)(t, x) -> (u, v)(t + t0, x).

    Attributes:
        t0 (float): Time shift
    """

    def __init__(self, t0):
        super().__init__(TransformSpec(TransformKind.TIME_SHIFT, float(t0)), f"TimeShift(t0={t0:g})")
        self.t0 = float(t0)

    def pull_back(self, t, x):
        return t + self.t0, x

    def inverse(self):
        return TimeShiftCommand(-self.t0)


class SpaceShiftCommand(TransformCommand):
    """
    (u, v)(t, x) -> (u, v)(t, x + x0).

    Attributes:
        x0 (float): Space shift
    """

    def __init__(self, x0):
        super().__init__(TransformSpec(TransformKind.SPACE_SHIFT, float(x0)), f"SpaceShift(x0={x0:g})")
        self.x0 = float(x0)

    def pull_back(self, t, x):
        return t, x + self.x0

    def inverse(self):
        return SpaceShiftCommand(-self.x0)
