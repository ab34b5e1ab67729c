import json
import math

import pytest
from click.testing import CliRunner

from main import main

F8_SPECIAL = ["--family", "F8", "--form", "special", "--C", "-0.25", "--S", "2", "--R", "2"]
F6_SHIFTED = ["--family", "F6", "--form", "shifted", "--t0", "0.1", "--R", "1.5", "--S", "3"]
SMALL_GRID = ["--grid", "0.5,1.5,5,-2,2,9"]


@pytest.fixture
def runner():
    return CliRunner()


def _json(result):
    return json.loads(result.output[result.output.index("{"):])


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert result.output.startswith("v")


def test_list(runner):
    result = runner.invoke(main, ["list"])
    assert result.exit_code == 0
    assert "F8" in result.output and "galilei" in result.output
    data = _json(runner.invoke(main, ["list", "--json", "--family", "F6"]))
    assert [entry["family"] for entry in data["families"]] == ["F6"]


def test_list_unknown_family_is_a_configuration_error(runner):
    assert runner.invoke(main, ["list", "--family", "F9"]).exit_code == 2


def test_eval(runner):
    result = runner.invoke(main, ["eval", *F8_SPECIAL, "--t", "1", "--x", "0"])
    assert result.exit_code == 0, result.output
    header, line = result.output.strip().splitlines()[-2:]
    assert header == "t,x,u,v"
    u = float(line.split(",")[2])
    assert u == pytest.approx(math.exp(0.875 - 0.25 * math.e), rel=1e-9)


def test_eval_applies_transforms(runner):
    shifted = runner.invoke(main, ["eval", *F8_SPECIAL, "--transform", "time_shift:0.5", "--t", "0.5", "--x", "0",
                                   "--json"])
    direct = runner.invoke(main, ["eval", *F8_SPECIAL, "--t", "1", "--x", "0", "--json"])
    assert _json(shifted)["u"] == pytest.approx(_json(direct)["u"])
    assert _json(shifted)["solution"]["provenance"][-1] == "TimeShift(t0=0.5)"


def test_verify_exit_codes(runner):
    passed = runner.invoke(main, ["verify", *F6_SHIFTED, *SMALL_GRID])
    assert passed.exit_code == 0, passed.output
    assert _json(passed)["passed"] is True
    perturbed = runner.invoke(main, ["verify", *F6_SHIFTED, *SMALL_GRID, "--perturb", "1e-3"])
    assert perturbed.exit_code == 1
    assert _json(perturbed)["passed"] is False


def test_verify_writes_report(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(main, ["verify", *F8_SPECIAL, *SMALL_GRID, "--out", str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text())["tolerance"] == 1e-6


def test_constraint_violation_exits_with_two(runner):
    result = runner.invoke(main, ["verify", "--family", "F8", "--C", "-0.25", "--S", "3", "--R", "2"])
    assert result.exit_code == 2
    assert "R = S" in result.output


def test_bad_grid_exits_with_two(runner):
    result = runner.invoke(main, ["verify", *F8_SPECIAL, "--grid", "0,1,3"])
    assert result.exit_code == 2


def test_grid_output_is_reproducible(runner, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (first, second):
        result = runner.invoke(main, ["grid", *F6_SHIFTED, *SMALL_GRID, "--out", str(path)])
        assert result.exit_code == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text().splitlines()[0] == "t,x,u,v"


def test_reduce(runner):
    chi = runner.invoke(main, ["reduce", "--oracle", "chi", "--branch", "primary", "--d", "0.5", "--S", "1",
                               "--R", "2", "--beta", "1", "--C", "1"])
    assert chi.exit_code == 0, chi.output
    gh = runner.invoke(main, ["reduce", "--oracle", "gh", "--S", "2", "--C1", "1", "--C2", "0.3", "--C3", "0.2"])
    assert gh.exit_code == 0
    assert _json(gh)["oracle"] == "gh"


def test_symmetry_check(runner):
    result = runner.invoke(main, ["symmetry-check", *F8_SPECIAL, "--generator", "Q",
                                  "--grid", "0.5,1.5,5,-1.5,1.5,7"])
    assert result.exit_code == 0, result.output
    assert _json(result)["tag"] == "Q"


def test_symmetry_check_conditional_needs_matching_family(runner):
    result = runner.invoke(main, ["symmetry-check", *F6_SHIFTED, "--generator", "Q1"])
    assert result.exit_code == 2
    assert "F7" in result.output


def test_simulate(runner, tmp_path):
    out = tmp_path / "run.csv"
    result = runner.invoke(main, ["simulate", *F6_SHIFTED, "--grid", "0.5,1.0,2,-6,6,49", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert max(_json(result)["linf_u"]) < 5e-2
    assert out.exists() and (tmp_path / "run.residual.json").exists()


def test_superpose(runner):
    result = runner.invoke(main, ["superpose", "--grid", "0.5,1.5,3,-40,40,81"])
    assert result.exit_code == 0, result.output
    assert _json(result)["residual"]["passed"] is True


def test_figure(runner, tmp_path):
    result = runner.invoke(main, ["figure", "3", "--out-dir", str(tmp_path), "--grid", "0.5,1,2,-1,1,3"])
    assert result.exit_code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["figure3_u.csv", "figure3_v.csv"]
    assert runner.invoke(main, ["figure", "7"]).exit_code == 2
