"""
Solution descriptors, validity domains and the evaluable solution base class.
"""

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from models.jet import FieldSample
from models.params import ModelParams, System
from utils.errors import ConstraintError, DomainError

logger = logging.getLogger(__name__)


class Family(enum.Enum):
    """Closed-form solution families of the catalogue."""

    F1_POWER_LAW = "F1"
    F2_EQUAL_DIFFUSION_TRAVELLING = "F2"
    F3_STATIONARY_PROFILE_LIFT = "F3"
    F4_EXP_SEPARABLE = "F4"
    F5_AIRY = "F5"
    F6_GAUSSIAN_SOURCE = "F6"
    F7_CONDITIONAL_UNEQUAL = "F7"
    F8_CONDITIONAL_EQUAL = "F8"
    STEADY_STATE = "steady"

    @classmethod
    def parse(cls, text):
        """Accept "F6", "f6" or a member name."""
        key = text.strip()
        for member in cls:
            if key.upper() == member.value.upper() or key.upper() == member.name:
                return member
        raise ConstraintError(f"unknown family {text!r}; expected one of {', '.join(m.value for m in cls)}")


@dataclass(frozen=True)
class SolutionSpec:
    """
    Selection of one member of a solution family.

    Attributes:
        family (Family): Family tag
        params (ModelParams): Model coefficients
        constants (dict): Family constants such as alpha, beta, C, t0
        form (str): Family form or branch, e.g. "shifted" for F6
        unverified_as_printed (bool): Allow forms known to fail the residual gate
    """

    family: Family
    params: ModelParams
    constants: dict = field(default_factory=dict)
    form: str = "primary"
    unverified_as_printed: bool = False

    def constant(self, name, default=None):
        """
        Look up a family constant.

        Raises:
            ConstraintError: If the constant is missing and has no default
        """
        if name in self.constants and self.constants[name] is not None:
            return float(self.constants[name])
        if default is None:
            raise ConstraintError(f"{self.family.value} {self.form} form requires parameter {name}")
        return float(default)

    def label(self):
        return f"{self.family.value}:{self.form}"

    def to_dict(self):
        return {
            "family": self.family.value,
            "form": self.form,
            "params": self.params.to_dict(),
            "constants": {key: value for key, value in sorted(self.constants.items())},
            "unverified_as_printed": self.unverified_as_printed,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            family=Family.parse(data["family"]),
            params=ModelParams.from_dict(data["params"]),
            constants=dict(data.get("constants", {})),
            form=data.get("form", "primary"),
            unverified_as_printed=data.get("unverified_as_printed", False),
        )


class Domain:
    """
    Validity domain of a solution, as a vectorised predicate with a description.

    Attributes:
        description (str): Human-readable predicate, e.g. "x > 0"
    """

    def __init__(self, description="all (t,x)", predicate=None):
        self.description = description
        self._predicate = predicate

    @classmethod
    def everywhere(cls):
        return cls()

    def mask(self, t, x):
        """Boolean array marking the points inside the domain."""
        t, x = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(x, dtype=float))
        if self._predicate is None:
            return np.ones(t.shape, dtype=bool)
        with np.errstate(all="ignore"):
            return np.asarray(self._predicate(t, x), dtype=bool) & np.ones(t.shape, dtype=bool)

    def contains(self, t, x):
        return bool(np.all(self.mask(t, x)))

    def check(self, t, x):
        """
        Raise DomainError naming the first point outside the domain.
        """
        inside = self.mask(t, x)
        if np.all(inside):
            return
        tt, xx = np.broadcast_arrays(np.asarray(t, dtype=float), np.asarray(x, dtype=float))
        index = np.argwhere(~inside)[0]
        bad_t, bad_x = float(tt[tuple(index)]), float(xx[tuple(index)])
        raise DomainError(f"(t={bad_t:.12g}, x={bad_x:.12g}) violates domain {self.description}", bad_t, bad_x)

    def intersect(self, other):
        """Domain holding where both domains hold."""
        if self._predicate is None:
            return other
        if other._predicate is None:
            return self
        return Domain(
            f"{self.description} and {other.description}",
            lambda t, x: self._predicate(t, x) & other._predicate(t, x),
        )

    def pulled_back(self, mapping, label):
        """Domain of a solution evaluated at mapped coordinates."""
        if self._predicate is None:
            return self
        return Domain(
            f"{self.description} under {label}",
            lambda t, x: self._predicate(*mapping(t, x)),
        )

    def __str__(self):
        return self.description


class ExactSolution:
    """
    An evaluable (u, v) pair with its domain and provenance.

    Subclasses implement fields(t, x) with numpy operations so that grids
    are evaluated in one call.

    Attributes:
        spec (SolutionSpec): Family selection, None for derived solutions
        params (ModelParams): Coefficients of the system the pair solves
        system (System): DHT or the gauged system
        domain (Domain): Validity domain
        provenance (tuple): Seed label followed by applied transformations
        approximate (bool): True for constructions that are not exact
        verified (bool): False for forms kept only as printed
    """

    def __init__(self, params, spec=None, domain=None, system=System.DHT,
                 provenance=None, approximate=False, verified=True):
        self.params = params
        self.spec = spec
        self.domain = domain or Domain.everywhere()
        self.system = system
        if provenance is None:
            provenance = (spec.label(),) if spec is not None else (type(self).__name__,)
        self.provenance = tuple(provenance)
        self.approximate = approximate
        self.verified = verified

    def fields(self, t, x):
        """
        Closed-form values without domain checks.

        Args:
            t: Time (scalar or array)
            x: Space (scalar or array, broadcastable with t)

        Returns:
            tuple: (u, v)
        """
        raise NotImplementedError

    def evaluate(self, t, x):
        """
        Evaluate at one point.

        Args:
            t (float): Time
            x (float): Space

        Returns:
            FieldSample: (u, v)

        Raises:
            DomainError: Outside the domain or on a non-finite value
        """
        self.domain.check(t, x)
        u, v = self.fields(float(t), float(x))
        u, v = float(u), float(v)
        if not (np.isfinite(u) and np.isfinite(v)):
            raise DomainError(f"non-finite value at (t={t:.12g}, x={x:.12g}) for {self.label()}", t, x)
        return FieldSample(u, v)

    def __call__(self, t, x):
        sample = self.evaluate(t, x)
        return np.array([sample.u, sample.v])

    def evaluate_grid(self, grid):
        """
        Evaluate on every node of a GridSpec.

        Returns:
            tuple: (u, v) arrays of shape (nt, nx)
        """
        tt, xx = np.meshgrid(grid.times, grid.xs, indexing="ij")
        self.domain.check(tt, xx)
        u, v = self.fields(tt, xx)
        u = np.broadcast_to(np.asarray(u, dtype=float), tt.shape).copy()
        v = np.broadcast_to(np.asarray(v, dtype=float), tt.shape).copy()
        bad = ~(np.isfinite(u) & np.isfinite(v))
        if np.any(bad):
            i, j = np.argwhere(bad)[0]
            raise DomainError(
                f"non-finite value at (t={tt[i, j]:.12g}, x={xx[i, j]:.12g}) for {self.label()}",
                float(tt[i, j]), float(xx[i, j]),
            )
        return u, v

    def label(self):
        return " -> ".join(self.provenance)

    def describe(self):
        """Summary dictionary for reports."""
        return {
            "label": self.label(),
            "spec": self.spec.to_dict() if self.spec is not None else None,
            "params": self.params.to_dict(),
            "system": self.system.value,
            "domain": str(self.domain),
            "provenance": list(self.provenance),
            "approximate": self.approximate,
            "verified": self.verified,
        }

    def __repr__(self):
        return f"<{type(self).__name__} {self.label()}>"


class PerturbedSolution(ExactSolution):
    """
    A solution with u multiplied by (1 + factor); a negative control for residual checks.

    Attributes:
        base (ExactSolution): Unperturbed solution
        factor (float): Relative perturbation of u
    """

    def __init__(self, base, factor):
        super().__init__(
            base.params, base.spec, base.domain, base.system,
            base.provenance + (f"perturb(u*{1.0 + factor:g})",),
            approximate=True, verified=False,
        )
        self.base = base
        self.factor = factor

    def fields(self, t, x):
        u, v = self.base.fields(t, x)
        return (1.0 + self.factor) * u, v
