import numpy as np
import pytest

from commands import TransformChain, TransformKind, TransformSpec, apply, compose
from commands.galilei_command import GalileiCommand
from commands.gauge_command import GaugeExpCommand
from commands.scale_command import ScaleCommand
from commands.shift_commands import SpaceShiftCommand, TimeShiftCommand
from models.grid import GridSpec
from models.params import System
from utils.errors import ConstraintError, InvalidParameterError
from verify import residual_report

from tests.helpers import make_solution

GRID = GridSpec(0.5, 1.5, 5, -2.0, 2.0, 9)


@pytest.mark.parametrize("text, kind, value", [
    ("time_shift:0.5", TransformKind.TIME_SHIFT, 0.5),
    ("space-shift:-1", TransformKind.SPACE_SHIFT, -1.0),
    ("GALILEI:0.25", TransformKind.GALILEI, 0.25),
    ("gauge_exp", TransformKind.GAUGE_EXP, "forward"),
    ("gauge_exp:inverse", TransformKind.GAUGE_EXP, "inverse"),
])
def test_parse(text, kind, value):
    spec = TransformSpec.parse(text)
    assert (spec.kind, spec.value) == (kind, value)


@pytest.mark.parametrize("text, message", [
    ("rotate:1", "unknown kind"),
    ("scale:abc", "cannot parse"),
    ("gauge_exp:sideways", "forward or inverse"),
])
def test_parse_rejects(text, message):
    with pytest.raises(InvalidParameterError, match=message):
        TransformSpec.parse(text)


def test_spec_string_form():
    assert str(TransformSpec.parse("scale:2")) == "scale:2"
    assert TransformSpec.from_dict(TransformSpec.parse("galilei:0.5").to_dict()).value == 0.5


def test_shifts_move_the_seed(gaussian_source):
    shifted = apply(TransformSpec.parse("time_shift:0.2"), gaussian_source)
    assert shifted.evaluate(0.5, 1.0).u == pytest.approx(gaussian_source.evaluate(0.7, 1.0).u)
    moved = SpaceShiftCommand(1.5).apply(gaussian_source)
    assert moved.evaluate(0.5, 0.0).v == pytest.approx(gaussian_source.evaluate(0.5, 1.5).v)
    assert moved.provenance[-1] == "SpaceShift(x0=1.5)"


def test_time_shift_pulls_back_domain(gaussian_source):
    shifted = TimeShiftCommand(-0.5).apply(gaussian_source)
    assert not shifted.domain.contains(0.3, 0.0)
    assert shifted.domain.contains(0.5, 0.0)


def test_transformed_solutions_pass_gate(conditional_special):
    chain = compose([TransformSpec.parse(t) for t in ("galilei:0.5", "scale:3", "space_shift:0.25")])
    sol = chain.apply(conditional_special)
    assert residual_report(sol, GRID).passes(1e-6)
    assert len(sol.provenance) == 4


def test_galilei_requires_equal_diffusion():
    sol = make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)
    with pytest.raises(ConstraintError, match="d = 1"):
        GalileiCommand(0.3).apply(sol)


def test_scale_requires_zero_saturation(steady_state):
    with pytest.raises(ConstraintError, match="A = 0"):
        ScaleCommand(2.0).apply(steady_state)
    with pytest.raises(ConstraintError, match="C != 0"):
        ScaleCommand(0.0)


def test_gauge_round_trip():
    seed = make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)
    gauged = GaugeExpCommand("inverse").apply(seed)
    assert gauged.system is System.GAUGED
    assert residual_report(gauged, GRID).passes(1e-6)
    restored = GaugeExpCommand("forward").apply(gauged)
    assert restored.system is System.DHT
    u0, v0 = seed.fields(1.0, 0.5)
    u1, v1 = restored.fields(1.0, 0.5)
    assert (u1, v1) == pytest.approx((u0, v0))


def test_gauge_checks_source_system():
    seed = make_solution("F4", "primary", {"beta": 1.0, "C": 1.0}, d=0.5, R=2.0, S=1.0)
    with pytest.raises(ConstraintError, match="gauged system"):
        GaugeExpCommand("forward").apply(seed)


def test_gauge_requires_unit_predator_rate(conditional_special):
    with pytest.raises(ConstraintError, match="S = 1"):
        GaugeExpCommand("inverse").apply(conditional_special)


def test_chain_inverse_restores_values(conditional_special):
    chain = TransformChain([GalileiCommand(0.4), TimeShiftCommand(0.3), ScaleCommand(2.0)])
    round_trip = chain.inverse().apply(chain.apply(conditional_special))
    t, x = np.array([0.6, 1.2]), np.array([-1.0, 0.7])
    np.testing.assert_allclose(round_trip.fields(t, x), conditional_special.fields(t, x), rtol=1e-12)
    assert len(chain.inverse()) == 3


def test_chain_flattens_nested_chains():
    inner = TransformChain([TimeShiftCommand(1.0)])
    outer = compose([inner, TransformSpec.parse("scale:2")])
    assert outer.labels() == ["TimeShift(t0=1)", "Scale(C=2)"]
    outer.push(TransformSpec.parse("space_shift:1"))
    assert [spec.kind for spec in outer.specs][-1] is TransformKind.SPACE_SHIFT
