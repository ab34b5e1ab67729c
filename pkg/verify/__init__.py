"""
Numerical verification of exact and approximate solutions.
"""

from verify.generators import GENERATOR_TAGS, GeneratorSpec, admissible, generator
from verify.invariant_surface import invariant_surface_check, invariant_surface_check_caseII
from verify.jet import fd_jet, fd_jet_grid
from verify.printed_forms import PrintedFormCandidate, printed_form_scan
from verify.residuals import StepConvergence, interior_grid, residual_report, step_convergence
from verify.symmetry import FlowPerturbedSolution, SymmetryCheckResult, infinitesimal_symmetry_check

__all__ = [
    "GENERATOR_TAGS",
    "FlowPerturbedSolution",
    "GeneratorSpec",
    "PrintedFormCandidate",
    "StepConvergence",
    "SymmetryCheckResult",
    "admissible",
    "fd_jet",
    "fd_jet_grid",
    "generator",
    "infinitesimal_symmetry_check",
    "interior_grid",
    "invariant_surface_check",
    "invariant_surface_check_caseII",
    "printed_form_scan",
    "residual_report",
    "step_convergence",
]
