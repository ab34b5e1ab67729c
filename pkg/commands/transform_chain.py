"""
Building commands from TransformSpec records and composing them into chains.
"""

from commands.galilei_command import GalileiCommand
from commands.gauge_command import GaugeExpCommand
from commands.scale_command import ScaleCommand
from commands.shift_commands import SpaceShiftCommand, TimeShiftCommand
from commands.transform_command import TransformCommand, TransformKind, TransformSpec

_COMMANDS = {
    TransformKind.TIME_SHIFT: TimeShiftCommand,
    TransformKind.SPACE_SHIFT: SpaceShiftCommand,
    TransformKind.SCALE: ScaleCommand,
    TransformKind.GALILEI: GalileiCommand,
    TransformKind.GAUGE_EXP: GaugeExpCommand,
}


def make_command(tr):
    """
    Command object for a TransformSpec (commands pass through unchanged).
    """
    if isinstance(tr, TransformCommand):
        return tr
    return _COMMANDS[tr.kind](tr.value)


def apply(tr, sol):
    """
    Apply one transformation or a chain to a solution.

    Args:
        tr (TransformSpec, TransformCommand or TransformChain): Transformation
        sol (ExactSolution): Seed solution

    Returns:
        ExactSolution: Transformed solution
    """
    if isinstance(tr, TransformChain):
        return tr.apply(sol)
    return make_command(tr).apply(sol)


class TransformChain:
    """
    An ordered sequence of transformations, applied first to last.

    Attributes:
        commands (list): TransformCommand objects
    """

    def __init__(self, transforms=()):
        self.commands = []
        for tr in transforms:
            if isinstance(tr, TransformChain):
                self.commands.extend(tr.commands)
            else:
                self.commands.append(make_command(tr))

    @property
    def specs(self):
        return [command.spec for command in self.commands]

    def push(self, tr):
        """Append a transformation at the end of the chain."""
        self.commands.append(make_command(tr))

    def apply(self, sol):
        for command in self.commands:
            sol = command.apply(sol)
        return sol

    def inverse(self):
        """Chain undoing this one: inverses in reverse order."""
        return TransformChain([command.inverse() for command in reversed(self.commands)])

    def labels(self):
        return [command.text for command in self.commands]

    def __len__(self):
        return len(self.commands)

    def __repr__(self):
        return f"<TransformChain {' -> '.join(self.labels()) or 'identity'}>"


def compose(transforms):
    """
    Order-preserving composition of transformations.

    Args:
        transforms (list): TransformSpec, TransformCommand or TransformChain items

    Returns:
        TransformChain: Chain equal to sequential application
    """
    return TransformChain(transforms)
