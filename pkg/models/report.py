"""
Residual report model with JSON persistence.
"""

import json
from dataclasses import dataclass, field

from models.grid import GridSpec


@dataclass
class ResidualReport:
    """
    Norms and worst node of the pointwise PDE residuals over a grid.

    Attributes:
        linf_s1 (float): Max |s1| over the nodes
        linf_s2 (float): Max |s2| over the nodes
        l2_s1 (float): Root-mean-square of s1
        l2_s2 (float): Root-mean-square of s2
        argmax (tuple): (t, x) of the node with the largest residual
        fd_step (float): Base differentiation step
        grid (GridSpec): Nodes actually sampled
        margin (tuple): (t, x) margins removed from the requested grid
        provenance (dict): Solution description (family, transform chain, flags)
        version (str): Version string of the code that produced the report
    """

    linf_s1: float
    linf_s2: float
    l2_s1: float
    l2_s2: float
    argmax: tuple
    fd_step: float
    grid: GridSpec
    margin: tuple = (0.0, 0.0)
    provenance: dict = field(default_factory=dict)
    version: str = ""

    @property
    def linf(self):
        """Largest residual over both components."""
        return max(self.linf_s1, self.linf_s2)

    def passes(self, tol):
        return self.linf <= tol

    @property
    def approximate(self):
        return bool(self.provenance.get("approximate", False))

    def to_dict(self):
        """
        Convert the report to a dictionary for serialization.

        Returns:
            dict: JSON-ready representation
        """
        return {
            "linf_s1": self.linf_s1,
            "linf_s2": self.linf_s2,
            "l2_s1": self.l2_s1,
            "l2_s2": self.l2_s2,
            "linf": self.linf,
            "argmax": {"t": self.argmax[0], "x": self.argmax[1]},
            "fd_step": self.fd_step,
            "grid": self.grid.to_dict(),
            "margin": {"t": self.margin[0], "x": self.margin[1]},
            "provenance": self.provenance,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, data):
        """
        Create a ResidualReport from a dictionary.

        Args:
            data (dict): Output of to_dict

        Returns:
            ResidualReport: New report instance
        """
        margin = data.get("margin", {"t": 0.0, "x": 0.0})
        return cls(
            linf_s1=data["linf_s1"],
            linf_s2=data["linf_s2"],
            l2_s1=data["l2_s1"],
            l2_s2=data["l2_s2"],
            argmax=(data["argmax"]["t"], data["argmax"]["x"]),
            fd_step=data["fd_step"],
            grid=GridSpec.from_dict(data["grid"]),
            margin=(margin["t"], margin["x"]),
            provenance=data.get("provenance", {}),
            version=data.get("version", ""),
        )

    def save_to_file(self, filename):
        """
        Save the report to a JSON file.

        Args:
            filename (str): Path to the file to save to
        """
        with open(filename, "w") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)

    @classmethod
    def load_from_file(cls, filename):
        """
        Load a report from a JSON file.

        Args:
            filename (str): Path to the file to load from

        Returns:
            ResidualReport: Loaded report
        """
        with open(filename, "r") as f:
            return cls.from_dict(json.load(f))
