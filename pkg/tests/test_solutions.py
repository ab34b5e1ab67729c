import math

import numpy as np
import pytest

from models.grid import GridSpec
from models.params import ModelParams
from models.solution import Family, SolutionSpec
from solutions import CATALOGUE, catalogue, instantiate, positivity_scan
from solutions.catalogue import decay_ratio
from solutions.conditional_families import case_ii_phi_psi, f_closed_form, gh_particular, printed_k_coefficients
from reductions.conditional import caseI_coefficients
from utils.errors import ConstraintError
from verify import residual_report

from tests.helpers import make_solution

GATE = 1e-6
BASE_GRID = GridSpec(0.5, 1.5, 5, -2.0, 2.0, 9)
F7_GRID = GridSpec(0.1, 0.4, 4, -1.0, 1.0, 9)

GATE_CASES = [
    ("F1", "primary", {"power": 1.5}, dict(d=0.5, R=2.0, S=1.0), GridSpec(0.5, 1.5, 5, 0.5, 2.0, 7)),
    ("F1", "primary", {"power": 1.0}, dict(d=0.5, R=2.0, S=1.0), GridSpec(0.5, 1.5, 5, 0.5, 2.0, 7)),
    ("F2", "exponential", {"beta": 0.0, "C2": 0.5}, dict(d=1.0, R=2.0, S=3.0), BASE_GRID),
    ("F2", "sine", {"beta": -4.0, "C0": 0.3}, dict(d=1.0, R=2.0, S=3.0), BASE_GRID),
    ("F3", "exponential", {"beta": 1.0, "C2": 0.2}, dict(d=0.5, R=2.0, S=3.0), BASE_GRID),
    ("F4", "primary", {"beta": 1.0, "C": 1.0}, dict(d=0.5, R=2.0, S=1.0), BASE_GRID),
    ("F4", "gamma_zero", {"beta": 0.5, "C1": 1.0}, dict(d=1.0, R=2.0, S=1.0), BASE_GRID),
    ("F4", "equal_rs", {"beta": 0.5, "C1": 0.5}, dict(d=1.0, R=2.0, S=2.0), BASE_GRID),
    ("F5", "primary", {"alpha": 1.0}, dict(d=1.0, R=0.5, S=2.0), GridSpec(0.5, 1.0, 5, -1.0, 1.0, 9)),
    ("F6", "shifted", {"t0": 0.1}, dict(d=1.0, R=1.5, S=3.0), BASE_GRID),
    ("F6", "general", {"C": 1.0}, dict(d=1.0, R=1.5, S=3.0), BASE_GRID),
    ("F7", "primary", {"sign": 1.0}, dict(d=0.5, R=2.0, S=2.0), F7_GRID),
    ("F7", "primary", {"sign": -1.0, "C": -1.0}, dict(d=0.5, R=2.0, S=2.0), F7_GRID),
    ("F8", "special", {"C": -0.25}, dict(d=1.0, R=2.0, S=2.0), BASE_GRID),
    ("F8", "general", {"C": -0.25, "C2": 0.3, "C3": 0.2}, dict(d=1.0, R=2.0, S=2.0), BASE_GRID),
    ("F8", "shifted", {"C": -0.25, "t0": 0.5, "x0": 1.0}, dict(d=1.0, R=2.0, S=2.0), BASE_GRID),
    ("F8", "simplified", {"C": -0.25, "C2": 0.3}, dict(d=1.0, R=2.0, S=2.0), BASE_GRID),
    ("steady", "primary", {}, dict(A=1.0, R=2.0, S=1.5, d=0.7), BASE_GRID),
]


@pytest.mark.parametrize("family, form, constants, params, grid", GATE_CASES,
                         ids=[f"{c[0]}-{c[1]}-{i}" for i, c in enumerate(GATE_CASES)])
def test_catalogue_members_pass_residual_gate(family, form, constants, params, grid):
    sol = make_solution(family, form, constants, **params)
    report = residual_report(sol, grid)
    assert report.passes(GATE), f"{sol.label()} residual {report.linf:.3e} at {report.argmax}"


def test_catalogue_lists_every_family():
    assert {entry.family for entry in CATALOGUE} == set(Family) - {Family.STEADY_STATE}
    assert [entry.family for entry in catalogue(Family.F6_GAUSSIAN_SOURCE)] == [Family.F6_GAUSSIAN_SOURCE]
    assert catalogue()[0].to_dict()["family"] == "F1"


@pytest.mark.parametrize("family, params, message", [
    ("F1", dict(d=1.0, R=2.0, S=2.0), "d != 1"),
    ("F2", dict(d=1.0, R=2.0, S=2.0), "R != S"),
    ("F5", dict(d=0.5, R=2.0, S=3.0), "d = 1"),
    ("F6", dict(d=1.0, R=2.0, S=1.0), "S != 1"),
    ("F7", dict(d=0.5, R=0.5, S=0.5), "S > 1 for real f"),
    ("F8", dict(d=1.0, R=2.0, S=3.0), "R = S"),
    ("steady", dict(A=0.0, R=2.0), "A > 0"),
])
def test_family_constraints(family, params, message):
    constants = {"beta": 0.0, "alpha": 1.0, "t0": 0.1, "sign": 1.0, "C": -0.25}
    with pytest.raises(ConstraintError, match=message):
        make_solution(family, "primary", constants, **params)


def test_f2_branch_must_match_beta():
    with pytest.raises(ConstraintError, match="selects exponential"):
        make_solution("F2", "sine", {"beta": 0.0}, d=1.0, R=2.0, S=3.0)


def test_f2_linear_branch_at_threshold():
    sol = make_solution("F2", "auto", {"beta": -3.0, "C2": 0.3}, d=1.0, R=2.0, S=3.0)
    assert sol.branch == "linear"
    assert residual_report(sol, BASE_GRID).passes(GATE)


def test_positive_lobe_restricts_domain():
    sol = make_solution("F2", "sine", {"beta": -4.0, "positive_lobe": 1.0}, d=1.0, R=2.0, S=3.0)
    assert sol.domain.contains(0.5, 1.0)
    assert not sol.domain.contains(0.5, -1.0)


def test_f1_lives_on_positive_half_line():
    sol = make_solution("F1", "primary", {}, d=0.5, R=2.0, S=1.0)
    assert not sol.domain.contains(1.0, -0.5)


def test_f4_primary_routes_to_gamma_zero():
    sol = make_solution("F4", "primary", {"beta": 0.5, "C1": 1.0}, d=1.0, R=2.0, S=1.0)
    assert sol.spec.form == "gamma_zero"


def test_f4_primary_closed_form_at_reference_point():
    sol = make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)
    sample = sol.evaluate(0.0, 0.0)
    assert sample.u == pytest.approx(4.0)
    assert sample.v == pytest.approx(0.5 * 2.0)


def test_f6_shifted_matches_general_with_unit_constant():
    shifted = make_solution("F6", "shifted", {"t0": 0.4}, d=1.0, R=1.5, S=3.0)
    general = make_solution("F6", "general", {"C": 1.0}, d=1.0, R=1.5, S=3.0)
    t, x = np.array([0.3, 0.8]), np.array([-1.0, 0.5])
    u_s, v_s = shifted.fields(t, x)
    u_g, v_g = general.fields(t + 0.4, x)
    np.testing.assert_allclose(u_s / u_g, (u_s / u_g)[0])
    np.testing.assert_allclose(v_s / u_s, v_g / u_g)


def test_f7_printed_form_needs_flag_and_fails_gate():
    params = dict(d=0.5, R=2.0, S=2.0)
    with pytest.raises(ConstraintError, match="unverified"):
        make_solution("F7", "printed", {"sign": 1.0}, **params)
    spec = SolutionSpec(Family.F7_CONDITIONAL_UNEQUAL, ModelParams(**params), {"sign": 1.0},
                        form="printed", unverified_as_printed=True)
    sol = instantiate(spec)
    assert not sol.verified
    assert not residual_report(sol, F7_GRID).passes(GATE)


def test_f7_requires_sign():
    with pytest.raises(ConstraintError, match="explicit sign"):
        make_solution("F7", "primary", {}, d=0.5, R=2.0, S=2.0)


def test_f_closed_form_solves_its_ode():
    params = ModelParams(R=2.0, S=2.0, d=0.5)
    t, h = 0.4, 1e-4
    f, fp = f_closed_form(params, t, 1)
    numeric = (f_closed_form(params, t + h, 1)[0] - f_closed_form(params, t - h, 1)[0]) / (2 * h)
    assert fp == pytest.approx(numeric, rel=1e-7)


def test_printed_k_coefficients_match_general_formula():
    params = ModelParams(R=2.5, S=2.5, d=0.4)
    t = np.linspace(0.0, 0.8, 5)
    f, fp = f_closed_form(params, t, 1)
    k1, k0 = caseI_coefficients(params, f, fp)
    printed = printed_k_coefficients(params, t)
    np.testing.assert_allclose(k1, printed[0], rtol=1e-10, atol=1e-12)
    np.testing.assert_allclose(k0, printed[1], rtol=1e-10, atol=1e-12)


def test_gh_particular_satisfies_its_system():
    S, C = 2.0, 0.25 * 1.0 ** 2
    g, gp, gpp, hh, hp = gh_particular(S, 1.0, 0.3, 0.2, 0.7)
    sigma = S - 1.0
    assert gpp == pytest.approx(C * math.exp(sigma * 0.7) / g)
    assert gp == pytest.approx(0.5 * sigma * g)
    assert hh == pytest.approx((0.3 + 0.2 * 0.7) * math.exp(0.35))


def test_case_ii_phi_psi_matches_general_member():
    S, c, c2, c3 = 2.0, -0.25, 0.3, 0.2
    sol = make_solution("F8", "general", {"C": c, "C2": c2, "C3": c3}, d=1.0, R=S, S=S)
    phi, psi = case_ii_phi_psi(S, c, c2, c3, 0.6)
    u0, v0 = sol.fields(0.6, 0.0)
    assert u0 == pytest.approx(phi, rel=1e-12)
    assert psi / phi == pytest.approx(v0 / u0, rel=1e-10)


@pytest.mark.parametrize("c, positive", [(-0.25, True), (0.0, False)])
def test_positivity_scan(c, positive):
    sol = make_solution("F8", "special", {"C": c}, d=1.0, R=2.0, S=2.0)
    ok, violation = positivity_scan(sol, BASE_GRID)
    assert ok is positive
    assert sol.positivity_regime() is positive
    if not positive:
        assert violation[2] == "v"


def test_f8_peak_decays():
    sol = make_solution("F8", "special", {"C": -0.25}, d=1.0, R=2.0, S=2.0)
    u_ratio, v_ratio = decay_ratio(sol, (-5.0, 5.0), 0.5, 3.0)
    assert u_ratio < 1.0
    assert v_ratio > 0.0


def test_f7_domain_for_faster_predator_diffusion():
    sol = make_solution("F7", "primary", {"sign": 1.0}, d=1.5, R=2.0, S=2.0)
    assert sol.domain.contains(0.5, 0.0)
    assert not sol.domain.contains(1.0, 0.0)
