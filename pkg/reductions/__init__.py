"""
Reduced ODE systems, Riccati closed forms and numerical oracles.
"""

from reductions.cases import ReductionCase, ReductionKind, reduced_rhs, travelling_scalar_residual
from reductions.conditional import (
    CaseIPipelineSolution,
    caseI_coefficients,
    caseI_pipeline,
    f_rhs,
    f_solve,
    gh_from_trajectory,
    gh_rhs,
    gh_solve,
)
from reductions.integrate import ODETrajectory, integrate
from reductions.oracles import (
    ORACLES,
    OracleComparison,
    chi_lift_oracle,
    chi_oracle,
    f_oracle,
    gh_oracle,
    phi_psi_oracle,
    pipeline_oracle,
)
from reductions.riccati import (
    ChiBranch,
    ChiBranchKind,
    ChiLiftSolution,
    chi_antiderivative,
    chi_closed_form,
    chi_to_solution,
    riccati_rhs,
)

__all__ = [
    "ORACLES",
    "OracleComparison",
    "chi_lift_oracle",
    "chi_oracle",
    "f_oracle",
    "gh_oracle",
    "phi_psi_oracle",
    "pipeline_oracle",
    "CaseIPipelineSolution",
    "ChiBranch",
    "ChiBranchKind",
    "ChiLiftSolution",
    "ODETrajectory",
    "ReductionCase",
    "ReductionKind",
    "caseI_coefficients",
    "caseI_pipeline",
    "chi_antiderivative",
    "chi_closed_form",
    "chi_to_solution",
    "f_rhs",
    "f_solve",
    "gh_from_trajectory",
    "gh_rhs",
    "gh_solve",
    "integrate",
    "reduced_rhs",
    "riccati_rhs",
    "travelling_scalar_residual",
]
