import math

import numpy as np
import pytest

from models.params import ModelParams
from reductions import (
    ChiBranch,
    ChiBranchKind,
    ReductionCase,
    ReductionKind,
    caseI_pipeline,
    chi_antiderivative,
    chi_closed_form,
    chi_lift_oracle,
    chi_oracle,
    chi_to_solution,
    f_oracle,
    f_solve,
    gh_from_trajectory,
    gh_oracle,
    gh_solve,
    integrate,
    phi_psi_oracle,
    pipeline_oracle,
    reduced_rhs,
    travelling_scalar_residual,
)
from settings import PIPELINE_GATE_TOL
from utils.errors import ConstraintError, IntegrationError, InvalidParameterError, PoleError, SingularityError

from tests.helpers import make_solution

ORACLE_TOL = 1e-7

PRIMARY = (ChiBranch(ChiBranchKind.PRIMARY, 1.0, beta=1.0), ModelParams(R=2.0, S=1.0, d=0.5))
EQUAL_RS = (ChiBranch(ChiBranchKind.EQUAL_RS, 0.5, beta=0.5), ModelParams(R=2.0, S=2.0, d=1.0))
GAMMA_ZERO = (ChiBranch(ChiBranchKind.GAMMA_ZERO, 1.0, beta=0.5), ModelParams(R=2.0, S=1.0, d=1.0))
GAUSSIAN_GENERAL = (ChiBranch(ChiBranchKind.GAUSSIAN_GENERAL, 1.0), ModelParams(R=1.5, S=3.0, d=1.0))
GAUSSIAN_EQUAL_RS = (ChiBranch(ChiBranchKind.GAUSSIAN_EQUAL_RS, -0.5), ModelParams(R=2.0, S=2.0, d=1.0))

BRANCHES = [
    pytest.param(*PRIMARY, (0.0, 2.0), id="primary"),
    pytest.param(*EQUAL_RS, (0.0, 1.5), id="equal_rs"),
    pytest.param(*GAMMA_ZERO, (0.0, 1.5), id="gamma_zero"),
    pytest.param(*GAUSSIAN_GENERAL, (0.5, 2.0), id="gaussian_general"),
    pytest.param(*GAUSSIAN_EQUAL_RS, (0.5, 1.5), id="gaussian_equal_rs"),
]


@pytest.mark.parametrize("branch, params, span", BRANCHES)
def test_chi_closed_form_against_riccati_integration(branch, params, span):
    assert chi_oracle(branch, params, span).passes(ORACLE_TOL)


@pytest.mark.parametrize("branch, params, span", BRANCHES)
def test_chi_lift_against_reduced_system(branch, params, span):
    result = chi_lift_oracle(branch, params, span)
    assert result.passes(ORACLE_TOL), result.to_dict()


@pytest.mark.parametrize("branch, params, span", BRANCHES)
def test_antiderivative_differentiates_to_chi(branch, params, span):
    t, h = 0.5 * (span[0] + span[1]), 1e-5
    numeric = (chi_antiderivative(branch, params, t + h) - chi_antiderivative(branch, params, t - h)) / (2 * h)
    assert numeric == pytest.approx(chi_closed_form(branch, params, t), rel=1e-7)


def test_gaussian_general_lift_is_the_gaussian_source_family():
    branch, params = GAUSSIAN_GENERAL
    lift = chi_to_solution(branch, params)
    family = make_solution("F6", "general", {"C": 1.0}, d=1.0, R=1.5, S=3.0)
    t, x = np.array([0.4, 1.1, 2.0]), np.array([-1.0, 0.0, 1.5])
    np.testing.assert_allclose(lift.fields(t, x), family.fields(t, x), rtol=1e-12)


def test_primary_lift_is_the_exp_separable_family():
    branch, params = PRIMARY
    lift = chi_to_solution(branch, params)
    family = make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)
    t, x = np.array([0.0, 0.7, 1.4]), np.array([0.5, -1.0, 2.0])
    np.testing.assert_allclose(lift.fields(t, x), family.fields(t, x), rtol=1e-12)


def test_lift_normalisation():
    branch, params = GAMMA_ZERO
    lift = chi_to_solution(branch, params, phi0=2.5, t_ref=0.8)
    phi, _ = lift.phi_psi(0.8)
    assert phi == pytest.approx(2.5)


def test_lift_domain_stays_on_reference_side_of_pole():
    branch = ChiBranch(ChiBranchKind.PRIMARY, -0.5, beta=1.0)
    params = ModelParams(R=2.0, S=1.0, d=0.5)
    lift = chi_to_solution(branch, params)
    pole = math.log(2.0) / 0.5
    assert lift.domain.contains(pole - 0.1, 0.0)
    assert not lift.domain.contains(pole + 0.1, 0.0)


@pytest.mark.parametrize("branch, params, error, message", [
    (ChiBranch(ChiBranchKind.PRIMARY, 1.0, beta=1.0), ModelParams(R=2.0, S=2.0, d=0.5), ConstraintError, "R != S"),
    (ChiBranch(ChiBranchKind.EQUAL_RS, 1.0, beta=1.0), ModelParams(R=2.0, S=1.0), ConstraintError, "R = S"),
    (ChiBranch(ChiBranchKind.GAMMA_ZERO, 0.0, beta=0.0), ModelParams(R=1.0, S=1.0), PoleError, "C1 != 0"),
    (ChiBranch(ChiBranchKind.GAUSSIAN_GENERAL, 1.0), ModelParams(R=2.0, S=3.0, d=0.5), ConstraintError, "d = 1"),
    (ChiBranch(ChiBranchKind.PRIMARY, 1.0, beta=1.0), ModelParams(A=1.0, R=2.0, S=1.0), ConstraintError, "A = 0"),
])
def test_branch_constraints(branch, params, error, message):
    with pytest.raises(error, match=message):
        branch.check(params)


def test_branch_needs_beta():
    with pytest.raises(ConstraintError, match="requires beta"):
        ChiBranch(ChiBranchKind.PRIMARY, 1.0)


def test_closed_form_poles():
    branch = ChiBranch(ChiBranchKind.PRIMARY, -1.0, beta=1.0)
    with pytest.raises(PoleError, match="pole"):
        chi_closed_form(branch, ModelParams(R=2.0, S=1.0, d=0.5), 0.0)
    gaussian, params = GAUSSIAN_GENERAL
    with pytest.raises(PoleError, match="t > 0"):
        chi_closed_form(gaussian, params, 0.0)


def test_travelling_scalar_form_is_consistent():
    params = ModelParams(R=2.0, S=1.5, d=0.7)
    for state in ([1.2, 0.3, 0.4, -0.1], [0.8, -0.5, 1.1, 0.6]):
        assert travelling_scalar_residual(params, 0.6, 0.3, state) == pytest.approx(0.0, abs=1e-10)


def test_exp_separable_rhs_matches_family_derivative():
    sol = make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)
    case = ReductionCase(ReductionKind.EXP_SEPARABLE, beta=1.0)
    t, h = 0.6, 1e-5
    state = sol.fields(t, 0.0)
    numeric = (np.array(sol.fields(t + h, 0.0)) - np.array(sol.fields(t - h, 0.0))) / (2 * h)
    np.testing.assert_allclose(reduced_rhs(case, sol.params, t, state), numeric, rtol=1e-7)


def test_reduction_requires_case_parameters():
    with pytest.raises(ConstraintError, match="requires beta"):
        ReductionCase(ReductionKind.EXP_SEPARABLE)
    with pytest.raises(ConstraintError, match="alpha != 0"):
        ReductionCase(ReductionKind.AIRY_PROFILE, alpha=0.0)


def test_reduced_rhs_singular_phi():
    case = ReductionCase(ReductionKind.GAUSSIAN_PROFILE)
    with pytest.raises(SingularityError):
        reduced_rhs(case, ModelParams(), 1.0, [0.0, 1.0])


def test_f_oracle():
    params = ModelParams(R=2.0, S=2.0, d=0.5)
    assert f_oracle(params, 1, (0.0, 1.0)).passes(1e-8)
    assert f_oracle(params, -1, (0.0, 1.0)).passes(1e-8)


def test_f_solve_runs_backwards_from_right_endpoint():
    params = ModelParams(R=2.0, S=2.0, d=0.5)
    trajectory = f_solve(params, 0.0, 1.0, 1.0, (0.0, 1.0))
    assert trajectory.span == (1.0, 0.0)
    assert trajectory.contains(0.5)


def test_f_solve_rejects_interior_start():
    with pytest.raises(InvalidParameterError, match="endpoint"):
        f_solve(ModelParams(R=2.0, S=2.0, d=0.5), 0.0, 1.0, 0.5, (0.0, 1.0))
    with pytest.raises(ConstraintError, match="d != 1"):
        f_solve(ModelParams(R=2.0, S=2.0, d=1.0), 0.0, 1.0, 0.0, (0.0, 1.0))


def test_f_blow_up_is_located():
    params = ModelParams(R=2.0, S=2.0, d=4.0)
    # f' = f^3 + f from f = 1 blows up at t = ln(2)/2
    with pytest.raises(IntegrationError, match="blow-up") as info:
        f_solve(params, 0.0, 1.0, 0.0, (0.0, 2.0))
    assert info.value.last_point == pytest.approx(0.5 * math.log(2.0), abs=1e-4)


def test_gh_oracle():
    assert gh_oracle(2.0, 1.0, 0.3, 0.2, (0.0, 2.0)).passes(ORACLE_TOL)


def test_gh_solve_stops_where_g_vanishes():
    with pytest.raises(IntegrationError, match="reaches zero") as info:
        gh_solve(1.0, 0.0, 1.0, -0.7, 0.0, 0.0, (0.0, 3.0))
    assert info.value.last_point == pytest.approx(1.0 / 0.7, abs=1e-6)
    with pytest.raises(SingularityError):
        gh_solve(2.0, 0.25, 0.0, 1.0, 0.0, 0.0, (0.0, 1.0))


def test_gh_from_trajectory_supplies_second_derivative():
    S, C = 2.0, 0.25
    trajectory = gh_solve(S, C, 1.0, 0.5, 0.3, 0.0, (0.0, 1.0))
    g, _, gpp, _, _ = gh_from_trajectory(trajectory, S, C)(0.5)
    assert g * gpp == pytest.approx(C * math.exp(0.5))


def test_phi_psi_oracle():
    assert phi_psi_oracle(2.0, -0.25, 0.3, 0.2, (0.0, 1.5)).passes(ORACLE_TOL)


def test_pipeline_reproduces_explicit_family():
    params = ModelParams(R=2.0, S=2.0, d=0.5)
    result = pipeline_oracle(params, 1, (0.1, 0.5))
    assert result.passes(PIPELINE_GATE_TOL), result.to_dict()


def test_pipeline_solution_is_flagged_approximate():
    params = ModelParams(R=2.0, S=2.0, d=0.5)
    sol = caseI_pipeline(params, 0.1, 0.5, 0.0, (0.0, 0.5))
    assert sol.approximate
    assert sol.domain.contains(0.25, 3.0)
    assert not sol.domain.contains(0.6, 0.0)
    u, v = sol.fields(0.0, 0.0)
    assert u == pytest.approx(1.0)
    assert v == pytest.approx(0.0, abs=1e-10)


def test_pipeline_constraints():
    with pytest.raises(ConstraintError, match="R = S"):
        caseI_pipeline(ModelParams(R=1.0, S=2.0, d=0.5), 0.0, 0.5, 0.0, (0.0, 0.5))
    with pytest.raises(ConstraintError, match="phi0 > 0"):
        caseI_pipeline(ModelParams(R=2.0, S=2.0, d=0.5), 0.0, 0.5, 0.0, (0.0, 0.5), phi0=0.0)


def test_integrate_reports_blow_up():
    with pytest.raises(IntegrationError, match="blow-up") as info:
        integrate(lambda t, y: [y[0] ** 2], None, [1.0], (0.0, 2.0))
    assert info.value.last_point == pytest.approx(1.0, abs=1e-6)


def test_integrate_validates_input():
    with pytest.raises(InvalidParameterError, match="finite"):
        integrate(lambda t, y: y, None, [float("nan")], (0.0, 1.0))
    with pytest.raises(InvalidParameterError, match="degenerate"):
        integrate(lambda t, y: y, None, [1.0], (1.0, 1.0))


def test_trajectory_dense_output():
    trajectory = integrate(lambda t, y: [-y[0]], None, [1.0], (0.0, 1.0))
    np.testing.assert_allclose(trajectory(np.array([0.25, 0.75]))[0], np.exp([-0.25, -0.75]), rtol=1e-8)
    assert trajectory.component(0, 0.5) == pytest.approx(math.exp(-0.5), rel=1e-8)
