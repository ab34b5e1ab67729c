"""
Base class and parameter record for finite symmetry transformations.
"""

import enum
import logging
from dataclasses import dataclass

from models.solution import ExactSolution
from utils.errors import ConstraintError, InvalidParameterError

logger = logging.getLogger(__name__)


class TransformKind(enum.Enum):
    """Finite transformations that map solutions to solutions."""

    TIME_SHIFT = "time_shift"
    SPACE_SHIFT = "space_shift"
    SCALE = "scale"
    GALILEI = "galilei"
    GAUGE_EXP = "gauge_exp"


GAUGE_DIRECTIONS = ("forward", "inverse")


@dataclass(frozen=True)
class TransformSpec:
    """
    One finite transformation and its parameter.

    Attributes:
        kind (TransformKind): Transformation kind
        value: Shift, factor or boost (float), or "forward"/"inverse" for GaugeExp
    """

    kind: TransformKind
    value: object

    def __post_init__(self):
        if self.kind is TransformKind.GAUGE_EXP:
            if self.value not in GAUGE_DIRECTIONS:
                raise InvalidParameterError("direction", f"must be forward or inverse, got {self.value!r}")
        elif not isinstance(self.value, (int, float)):
            raise InvalidParameterError(self.kind.value, f"needs a real parameter, got {self.value!r}")

    @classmethod
    def parse(cls, text):
        """
        Parse "kind:value", e.g. "galilei:0.5" or "gauge_exp:forward".

        Args:
            text (str): Transform description

        Returns:
            TransformSpec: Parsed transform
        """
        name, _, raw = text.partition(":")
        try:
            kind = TransformKind(name.strip().lower().replace("-", "_"))
        except ValueError as exc:
            kinds = ", ".join(k.value for k in TransformKind)
            raise InvalidParameterError("transform", f"unknown kind {name!r}; expected one of {kinds}") from exc
        raw = raw.strip()
        if kind is TransformKind.GAUGE_EXP:
            return cls(kind, raw or "forward")
        try:
            return cls(kind, float(raw))
        except ValueError as exc:
            raise InvalidParameterError("transform", f"cannot parse parameter of {text!r}") from exc

    def __str__(self):
        value = self.value if isinstance(self.value, str) else f"{self.value:g}"
        return f"{self.kind.value}:{value}"

    def to_dict(self):
        return {"kind": self.kind.value, "value": self.value}

    @classmethod
    def from_dict(cls, data):
        return cls(TransformKind(data["kind"]), data["value"])


class TransformCommand:
    """
    A finite transformation acting on solutions.

    apply() plays the role of redo and inverse() returns the command that
    undoes it. Every command maps (t, x) back to the seed coordinates and
    multiplies both components by a common factor.

    Attributes:
        spec (TransformSpec): Kind and parameter
        text (str): Label recorded in the provenance chain
    """

    def __init__(self, spec, text):
        self.spec = spec
        self.text = text

    def check(self, sol):
        """
        Raise ConstraintError if the transformation does not apply to sol.
        """

    def pull_back(self, t, x):
        """Seed coordinates of the point (t, x)."""
        return t, x

    def factor(self, t, x):
        """Common multiplier of u and v at (t, x)."""
        return 1.0

    def target(self, sol):
        """(params, system) of the transformed solution."""
        return sol.params, sol.system

    def inverse(self):
        raise NotImplementedError

    def apply(self, sol):
        """
        Transform a solution.

        Args:
            sol (ExactSolution): Seed solution

        Returns:
            TransformedSolution: Wrapped solution with extended provenance

        Raises:
            ConstraintError: If the seed's system does not admit the transformation
        """
        self.check(sol)
        logger.debug("applying %s to %s", self.text, sol.label())
        return TransformedSolution(sol, self)

    def _require(self, condition, requirement, sol):
        if not condition:
            p = sol.params
            raise ConstraintError(
                f"{self.text} requires {requirement} "
                f"(got A={p.A:g}, R={p.R:g}, S={p.S:g}, d={p.d:g}, system={sol.system.value})"
            )

    def __repr__(self):
        return f"<{type(self).__name__} {self.text}>"


class TransformedSolution(ExactSolution):
    """
    A seed solution seen through one transformation.

    Attributes:
        base (ExactSolution): Seed solution
        command (TransformCommand): Applied transformation
    """

    def __init__(self, base, command):
        params, system = command.target(base)
        super().__init__(
            params,
            spec=base.spec,
            domain=base.domain.pulled_back(command.pull_back, command.text),
            system=system,
            provenance=base.provenance + (command.text,),
            approximate=base.approximate,
            verified=base.verified,
        )
        self.base = base
        self.command = command

    def fields(self, t, x):
        ts, xs = self.command.pull_back(t, x)
        u, v = self.base.fields(ts, xs)
        k = self.command.factor(t, x)
        return k * u, k * v
