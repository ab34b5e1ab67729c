import math

import pytest

from models.grid import GridSpec
from models.params import ModelParams
from models.solution import PerturbedSolution
from reductions import ChiBranch, ChiBranchKind, chi_to_solution
from settings import GATE_TOL
from utils.errors import ConstraintError, DomainError, InvalidParameterError
from verify import (
    admissible,
    fd_jet,
    generator,
    infinitesimal_symmetry_check,
    invariant_surface_check,
    invariant_surface_check_caseII,
    printed_form_scan,
    residual_report,
    step_convergence,
)

from tests.helpers import make_solution

SAMPLE_GRID = GridSpec(0.5, 1.5, 5, -1.5, 1.5, 7)
F7_GRID = GridSpec(0.1, 0.4, 4, -1.0, 1.0, 9)


def _f4_primary():
    return make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)


def _gamma_zero_lift():
    return make_solution("F4", "gamma_zero", {"beta": 0.5, "C1": 1.0}, d=1.0, R=2.0, S=1.0)


def _predator_shift_seed():
    return chi_to_solution(ChiBranch(ChiBranchKind.GAUSSIAN_EQUAL_RS, -0.5), ModelParams(R=1.0, S=1.0, d=1.0))


def _conditional_general():
    return make_solution("F8", "general", {"C": -0.25, "C2": 0.3, "C3": 0.2}, d=1.0, R=2.0, S=2.0)


SYMMETRIES = [
    pytest.param("P_t", "gaussian_source", id="P_t"),
    pytest.param("I", "gaussian_source", id="I"),
    pytest.param("P_x", "conditional_special", id="P_x"),
    pytest.param("G", "conditional_special", id="G"),
    pytest.param("Q", "conditional_special", id="Q"),
]


@pytest.mark.parametrize("tag, fixture", SYMMETRIES)
def test_lie_generators_leave_quadratic_residual(tag, fixture, request):
    sol = request.getfixturevalue(fixture)
    result = infinitesimal_symmetry_check(sol, generator(tag, sol.params), SAMPLE_GRID)
    assert result.admissible
    assert result.passed, result.to_dict()
    assert result.verdict in ("quadratic", "inconclusive")


@pytest.mark.parametrize("tag, build", [
    ("D", _f4_primary),
    ("D", _gamma_zero_lift),
    ("Pi", _gamma_zero_lift),
    ("Y", _predator_shift_seed),
])
def test_unit_rate_generators(tag, build):
    sol = build()
    result = infinitesimal_symmetry_check(sol, generator(tag, sol.params), SAMPLE_GRID)
    assert result.admissible
    assert result.passed, result.to_dict()


def test_conditional_generators_vanish_on_their_solutions():
    f7 = make_solution("F7", "primary", {"sign": 1.0}, d=0.5, R=2.0, S=2.0)
    q1 = infinitesimal_symmetry_check(f7, generator("Q1", f7.params, f=f7.f), F7_GRID)
    assert q1.passed and q1.admissible

    f8 = _conditional_general()
    q2 = infinitesimal_symmetry_check(f8, generator("Q2", f8.params, gh=f8.gh), SAMPLE_GRID)
    assert q2.passed and q2.admissible


def test_scaling_is_not_a_symmetry_with_saturation(steady_state):
    result = infinitesimal_symmetry_check(steady_state, generator("I", steady_state.params), SAMPLE_GRID)
    assert not result.admissible
    assert not result.passed
    assert not result.floor_bound
    assert result.slope == pytest.approx(1.0, abs=0.2)
    assert len(result.curve) == len(result.epsilons)
    assert result.to_dict()["verdict"] == "fails"


def test_time_shift_of_steady_state_is_inconclusive(steady_state):
    result = infinitesimal_symmetry_check(steady_state, generator("P_t", steady_state.params), SAMPLE_GRID)
    assert result.floor_bound
    assert result.slope is None
    report = result.to_dict()
    assert report["verdict"] == "inconclusive"
    assert report["passed"]


def test_symmetry_check_rejects_bad_epsilons(gaussian_source):
    gen = generator("P_t", gaussian_source.params)
    with pytest.raises(InvalidParameterError, match="decreasing"):
        infinitesimal_symmetry_check(gaussian_source, gen, SAMPLE_GRID, epsilons=(1e-3, 1e-2))
    with pytest.raises(InvalidParameterError, match="positive"):
        infinitesimal_symmetry_check(gaussian_source, gen, SAMPLE_GRID, epsilons=(1e-2,))


def test_generator_lookup_errors():
    params = ModelParams(R=2.0, S=2.0)
    with pytest.raises(ConstraintError, match="unknown generator"):
        generator("Z", params)
    with pytest.raises(ConstraintError, match="requires f"):
        generator("Q1", params)
    with pytest.raises(ConstraintError, match="requires gh"):
        generator("Q2", params)
    with pytest.raises(ConstraintError, match="R != 1"):
        generator("Pi", ModelParams(R=1.0, S=1.0))


@pytest.mark.parametrize("tag, params, expected", [
    ("I", ModelParams(A=1.0), False),
    ("D", ModelParams(S=1.0), True),
    ("D", ModelParams(S=2.0), False),
    ("G", ModelParams(d=0.5), False),
    ("Q", ModelParams(R=2.0, S=2.0, d=1.0), True),
    ("Q", ModelParams(R=1.0, S=1.0, d=1.0), False),
    ("Y", ModelParams(R=1.0, S=1.0, d=1.0), True),
    ("Pi", ModelParams(R=2.0, S=1.0, d=1.0), True),
    ("Q1", ModelParams(R=2.0, S=2.0, d=0.5), True),
    ("Q2", ModelParams(R=2.0, S=2.0, d=0.5), False),
])
def test_admissibility_table(tag, params, expected):
    assert admissible(tag, params) is expected


def test_invariant_surface_conditions_hold():
    f7 = make_solution("F7", "primary", {"sign": -1.0, "C": -1.0}, d=0.5, R=2.0, S=2.0)
    assert max(invariant_surface_check(f7, f7.f, F7_GRID)) < 1e-7
    f8 = _conditional_general()
    assert max(invariant_surface_check_caseII(f8, f8.gh, SAMPLE_GRID)) < 1e-7


def test_invariant_surface_detects_wrong_operator(gaussian_source):
    e1, _ = invariant_surface_check(gaussian_source, lambda t: (0.0, 0.0), SAMPLE_GRID)
    assert e1 > 1e-3


def test_printed_reading_scan_selects_corrected_form():
    params = ModelParams(R=2.0, S=2.0, d=0.5)
    ranking = printed_form_scan(params, F7_GRID)
    best = ranking[0]
    assert (best.power, best.scale) == (1.5, 0.5)
    assert best.linf < GATE_TOL
    assert all(candidate.linf > GATE_TOL for candidate in ranking[1:])


def test_fd_jet_matches_analytic_slope(conditional_special):
    jet = fd_jet(conditional_special, 1.0, 0.5)
    assert jet.ux == pytest.approx(-0.125 * jet.u, rel=1e-8)


def test_fd_jet_refuses_stencils_outside_domain():
    sol = make_solution("F1", "primary", {}, d=0.5, R=2.0, S=1.0)
    with pytest.raises(DomainError, match="leaves domain"):
        fd_jet(sol, 1.0, 1e-3)


def test_residual_report_insets_grid_near_boundary():
    sol = make_solution("F1", "primary", {}, d=0.5, R=2.0, S=1.0)
    report = residual_report(sol, GridSpec(0.5, 1.5, 5, 1e-3, 2.0, 9))
    assert report.margin[0] == 0.0
    assert report.margin[1] > 0.0
    assert report.grid.x0 > 1e-3


def test_residual_report_with_extrapolation(gaussian_source, small_grid):
    assert residual_report(gaussian_source, small_grid, extrapolate=True).passes(GATE_TOL)


def test_perturbed_solution_fails_gate(conditional_special, small_grid):
    report = residual_report(PerturbedSolution(conditional_special, 1e-3), small_grid)
    assert not report.passes(GATE_TOL)
    assert report.approximate


def test_step_convergence_is_fourth_order(gaussian_source, small_grid):
    study = step_convergence(gaussian_source, small_grid)
    assert list(study.linf) == sorted(study.linf, reverse=True)
    assert all(order > 3.0 for order in study.orders)
    assert study.to_dict()["steps"] == [4e-2, 2e-2, 1e-2]


def test_report_names_worst_node(gaussian_source, small_grid):
    report = residual_report(gaussian_source, small_grid)
    t, x = report.argmax
    assert small_grid.t0 <= t <= small_grid.t1
    assert math.isfinite(report.l2_s1) and report.linf >= report.l2_s1
