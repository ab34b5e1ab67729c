"""
Rectangular (t, x) sampling grids and sampled field data.
"""

from dataclasses import asdict, dataclass, field, replace

import numpy as np

from utils.errors import InvalidParameterError


@dataclass(frozen=True)
class GridSpec:
    """
    A uniform rectangular lattice in (t, x).

    Attributes:
        t0 (float): First time level
        t1 (float): Last time level
        nt (int): Number of time levels
        x0 (float): Left end of the space window
        x1 (float): Right end of the space window
        nx (int): Number of space nodes
    """

    t0: float
    t1: float
    nt: int
    x0: float
    x1: float
    nx: int

    def __post_init__(self):
        if not self.t1 > self.t0:
            raise InvalidParameterError("t1", f"must exceed t0 ({self.t1} <= {self.t0})")
        if not self.x1 > self.x0:
            raise InvalidParameterError("x1", f"must exceed x0 ({self.x1} <= {self.x0})")
        if int(self.nt) != self.nt or self.nt < 2:
            raise InvalidParameterError("nt", f"must be an integer >= 2, got {self.nt}")
        if int(self.nx) != self.nx or self.nx < 2:
            raise InvalidParameterError("nx", f"must be an integer >= 2, got {self.nx}")

    @classmethod
    def parse(cls, text):
        """
        Parse the single-flag form "t0,t1,nt,x0,x1,nx".

        Args:
            text (str): Comma-separated grid description

        Returns:
            GridSpec: Parsed grid
        """
        parts = [item.strip() for item in text.split(",")]
        if len(parts) != 6:
            raise InvalidParameterError("grid", f"expected 't0,t1,nt,x0,x1,nx', got {text!r}")
        try:
            t0, t1, x0, x1 = (float(parts[i]) for i in (0, 1, 3, 4))
            nt, nx = int(parts[2]), int(parts[5])
        except ValueError as exc:
            raise InvalidParameterError("grid", f"cannot parse {text!r}: {exc}") from exc
        return cls(t0, t1, nt, x0, x1, nx)

    def __str__(self):
        return f"{self.t0:g},{self.t1:g},{self.nt},{self.x0:g},{self.x1:g},{self.nx}"

    @property
    def times(self):
        return np.linspace(self.t0, self.t1, self.nt)

    @property
    def xs(self):
        return np.linspace(self.x0, self.x1, self.nx)

    @property
    def dt(self):
        return (self.t1 - self.t0) / (self.nt - 1)

    @property
    def dx(self):
        return (self.x1 - self.x0) / (self.nx - 1)

    def nodes(self):
        """Iterate over (i, j, t, x) in row-major order."""
        xs = self.xs
        for i, t in enumerate(self.times):
            for j, x in enumerate(xs):
                yield i, j, float(t), float(x)

    def inset(self, t_margin, x_margin):
        """Grid shrunk by the given margins on every side."""
        return replace(
            self,
            t0=self.t0 + t_margin,
            t1=self.t1 - t_margin,
            x0=self.x0 + x_margin,
            x1=self.x1 - x_margin,
        )

    def refined(self, level):
        """Same window with the space spacing divided by 2**level."""
        return replace(self, nx=(self.nx - 1) * 2 ** level + 1)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**{key: data[key] for key in ("t0", "t1", "nt", "x0", "x1", "nx")})


@dataclass
class FieldGrid:
    """
    Samples of (u, v) on a GridSpec.

    Attributes:
        grid (GridSpec): Sampling lattice
        u (np.ndarray): Prey values, shape (nt, nx), one row per time level
        v (np.ndarray): Predator values, same shape
        metadata (dict): Scheme, step, boundary kind, provenance
    """

    grid: GridSpec
    u: np.ndarray
    v: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        shape = (self.grid.nt, self.grid.nx)
        self.u = np.asarray(self.u, dtype=float)
        self.v = np.asarray(self.v, dtype=float)
        if self.u.shape != shape or self.v.shape != shape:
            raise InvalidParameterError(
                "FieldGrid", f"arrays must have shape {shape}, got {self.u.shape} and {self.v.shape}"
            )
        if not self.metadata.get("failed") and not (np.all(np.isfinite(self.u)) and np.all(np.isfinite(self.v))):
            raise InvalidParameterError("FieldGrid", "non-finite samples in a grid not flagged as failed")

    @property
    def approximate(self):
        return bool(self.metadata.get("approximate", False))

    @classmethod
    def from_solution(cls, sol, grid):
        """
        Sample an exact (or approximate) solution on every grid node.

        Args:
            sol (ExactSolution): Solution to sample
            grid (GridSpec): Lattice

        Returns:
            FieldGrid: Sampled values with the solution's provenance
        """
        u, v = sol.evaluate_grid(grid)
        metadata = {
            "source": "closed form",
            "provenance": list(sol.provenance),
            "approximate": sol.approximate,
        }
        return cls(grid, u, v, metadata)

    def rows(self):
        """Iterate over (t, x, u, v) in row-major order."""
        for i, j, t, x in self.grid.nodes():
            yield t, x, float(self.u[i, j]), float(self.v[i, j])
