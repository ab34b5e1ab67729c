"""
Method-of-lines finite-difference solver used as the PDE oracle.
"""

from fdsolver.config import BoundaryCondition, BoundaryKind, SolverConfig
from fdsolver.solver import simulate
from fdsolver.studies import ComparisonReport, ConvergenceStudy, compare, convergence_study

__all__ = [
    "BoundaryCondition",
    "BoundaryKind",
    "ComparisonReport",
    "ConvergenceStudy",
    "SolverConfig",
    "compare",
    "convergence_study",
    "simulate",
]
