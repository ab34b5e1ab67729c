"""
Command-line entry point of the Holling-Tanner solution lab.
"""

import functools
import logging
import sys
from pathlib import Path

import click

from commands import TransformChain, TransformSpec
from fdsolver import BoundaryCondition, BoundaryKind, SolverConfig, compare, convergence_study, simulate
from models.grid import FieldGrid, GridSpec
from models.params import ModelParams
from models.solution import Family, PerturbedSolution, SolutionSpec
from reductions import ORACLES, ChiBranch, ChiBranchKind
from reductions import oracles
from settings import (
    CFL,
    FD_STEP,
    FIGURE_WINDOW,
    FIGURE_WINDOW_WIDE,
    GATE_TOL,
    SPACING_TIME_OFFSET,
    SYMMETRY_EPSILONS,
    SYMMETRY_FD_STEP,
    debug_enabled,
    output_directory,
)
from solutions import TRANSFORM_KINDS, catalogue, instantiate
from superpose import SUPERPOSITION_GUARD, SuperpositionSpec, build, spacing_residual_curve
from utils.errors import (
    ConstraintError,
    DHTLabError,
    DomainError,
    InvalidParameterError,
    PoleError,
    SingularityError,
)
from utils.version import describe_version
from verify import GENERATOR_TAGS, generator, infinitesimal_symmetry_check, residual_report
from views.catalogue_view import catalogue_data, render_catalogue
from views.csv_writer import sample_line, write_field_grid
from views.figures import FIG5_SHIFTS, FIGURES, write_figure
from views.report_view import residual_sidecar, to_json, verdict, write_json

logger = logging.getLogger("dht_lab")

DEFAULT_GRID = ",".join(str(value) for value in FIGURE_WINDOW)
GATE_GRID = "0.5,2.5,41,-5,5,41"
_CONSTANTS = ("t0", "x0", "C", "C0", "C1", "C2", "C3", "alpha", "beta", "sign", "power",
              "phi0", "t_ref", "printed_power", "printed_scale")


class ConfigurationError(click.ClickException):
    """Invalid flags or parameters; exits with status 2."""

    exit_code = 2


def configure_logging(verbosity):
    if verbosity >= 2 or debug_enabled():
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def handle_errors(command):
    """Map configuration errors to exit 2 and other lab errors to exit 1."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (InvalidParameterError, ConstraintError, PoleError, DomainError, SingularityError) as exc:
            raise ConfigurationError(str(exc)) from exc
        except DHTLabError as exc:
            raise click.ClickException(str(exc)) from exc

    return wrapper


def _parse_grid(text):
    try:
        return GridSpec.parse(text)
    except (ValueError, TypeError) as exc:
        raise ConfigurationError(f"--grid: {exc}") from exc


def _parse_pair(text, name):
    try:
        a, b = (float(part) for part in text.split(","))
    except ValueError as exc:
        raise ConfigurationError(f"{name} expects 'a,b', got {text!r}") from exc
    return a, b


def _parse_floats(text, name):
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ConfigurationError(f"{name} expects comma-separated numbers, got {text!r}") from exc


def params_options(command):
    for name, default in (("d", 1.0), ("S", 1.0), ("R", 1.0), ("A", 0.0)):
        command = click.option(f"--{name}", name, type=float, default=default, show_default=True,
                               help=f"Model coefficient {name}")(command)
    return command


def solution_options(command):
    """Family selection, coefficients, family constants and transforms."""
    command = click.option("--transform", "transforms", multiple=True,
                           help="Transformation kind:value, repeatable, applied in order")(command)
    command = click.option("--unverified-as-printed", is_flag=True,
                           help="Allow forms that fail the residual gate")(command)
    command = click.option("--positive-lobe", is_flag=True, help="Restrict sine branches to one positive lobe")(command)
    for name in reversed(_CONSTANTS):
        flag = "--" + name.replace("_", "-")
        command = click.option(flag, name, type=float, default=None, help=f"Family constant {name}")(command)
    command = click.option("--form", default="primary", show_default=True, help="Family form or branch")(command)
    command = click.option("--family", required=True, help="Family tag F1..F8 or steady")(command)
    return params_options(command)


def _model_params(opts):
    return ModelParams(A=opts["A"], R=opts["R"], S=opts["S"], d=opts["d"])


def _solution(opts):
    constants = {name: opts[name] for name in _CONSTANTS if opts.get(name) is not None}
    if opts.get("positive_lobe"):
        constants["positive_lobe"] = 1.0
    spec = SolutionSpec(
        Family.parse(opts["family"]), _model_params(opts), constants,
        form=opts["form"], unverified_as_printed=opts["unverified_as_printed"],
    )
    sol = instantiate(spec)
    if opts["transforms"]:
        chain = TransformChain([TransformSpec.parse(text) for text in opts["transforms"]])
        sol = chain.apply(sol)
    return sol


def _print_version(ctx, param, value):
    if not value or ctx.resilient_parsing:
        return
    click.echo(describe_version())
    ctx.exit()


@click.group()
@click.option("--version", is_flag=True, expose_value=False, is_eager=True, callback=_print_version,
              help="Show the version and exit.")
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging")
def main(verbose):
    """Exact solutions, reductions and numerical checks for the diffusive Holling-Tanner system."""
    configure_logging(verbose)


@main.command("list")
@click.option("--family", default=None, help="Show one family only")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output")
@handle_errors
def list_command(family, as_json):
    """List solution families and transformations."""
    entries = catalogue(Family.parse(family) if family else None)
    if as_json:
        click.echo(to_json(catalogue_data(entries, TRANSFORM_KINDS)))
    else:
        click.echo(render_catalogue(entries, TRANSFORM_KINDS))


@main.command("eval")
@solution_options
@click.option("--t", "t", type=float, required=True, help="Time")
@click.option("--x", "x", type=float, required=True, help="Space")
@click.option("--json", "as_json", is_flag=True)
@handle_errors
def eval_command(t, x, as_json, **opts):
    """Evaluate a solution at one point."""
    sol = _solution(opts)
    sample = sol.evaluate(t, x)
    if as_json:
        click.echo(to_json({"t": t, "x": x, "u": sample.u, "v": sample.v, "solution": sol.describe()}))
    else:
        click.echo("t,x,u,v")
        click.echo(sample_line(t, x, sample))


@main.command("grid")
@solution_options
@click.option("--grid", "grid_text", default=DEFAULT_GRID, show_default=True, help="t0,t1,nt,x0,x1,nx")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="CSV file")
@handle_errors
def grid_command(grid_text, out, **opts):
    """Sample a solution on a grid and write t,x,u,v CSV."""
    sol = _solution(opts)
    grid = _parse_grid(grid_text)
    out = out or output_directory() / "grid.csv"
    write_field_grid(FieldGrid.from_solution(sol, grid), out)
    click.echo(str(out))
    if sol.approximate:
        report = residual_report(sol, grid, guard=SUPERPOSITION_GUARD)
        click.echo(str(write_json(report.to_dict(), residual_sidecar(out))))


@main.command("verify")
@solution_options
@click.option("--grid", "grid_text", default=GATE_GRID, show_default=True, help="t0,t1,nt,x0,x1,nx")
@click.option("--tol", type=float, default=GATE_TOL, show_default=True)
@click.option("--h", "h", type=float, default=FD_STEP, show_default=True, help="Difference step")
@click.option("--extrapolate", is_flag=True, help="Richardson-extrapolate derivatives")
@click.option("--perturb", type=float, default=None, help="Multiply u by (1 + perturb) as a negative control")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="JSON report file")
@click.pass_context
@handle_errors
def verify_command(ctx, grid_text, tol, h, extrapolate, perturb, out, **opts):
    """Residual gate: exit 0 if the residual stays below --tol, 1 otherwise."""
    sol = _solution(opts)
    if perturb:
        sol = PerturbedSolution(sol, perturb)
    report = residual_report(sol, _parse_grid(grid_text), h, extrapolate=extrapolate)
    data = verdict(report, tol)
    if out:
        write_json(data, out)
    click.echo(to_json(data))
    ctx.exit(0 if data["passed"] else 1)


@main.command("reduce")
@params_options
@click.option("--oracle", type=click.Choice(ORACLES), required=True)
@click.option("--branch", type=click.Choice([k.value for k in ChiBranchKind]), default="primary", show_default=True)
@click.option("--beta", type=float, default=0.0, show_default=True)
@click.option("--C", "C", type=float, default=0.0, show_default=True, help="Branch or closed-form constant")
@click.option("--C1", "C1", type=float, default=1.0, show_default=True)
@click.option("--C2", "C2", type=float, default=0.0, show_default=True)
@click.option("--C3", "C3", type=float, default=1.0, show_default=True)
@click.option("--sign", type=click.Choice(["1", "-1"]), default="1", show_default=True)
@click.option("--span", default="0,2", show_default=True, help="a,b")
@click.option("--tol", type=float, default=1e-6, show_default=True)
@click.pass_context
@handle_errors
def reduce_command(ctx, oracle, branch, beta, C, C1, C2, C3, sign, span, tol, **opts):
    """Compare a closed form with adaptive integration of its reduced system."""
    params = _model_params(opts)
    span = _parse_pair(span, "--span")
    if oracle in ("chi", "chi-lift"):
        kind = ChiBranchKind(branch)
        chi_branch = ChiBranch(kind, C, None if kind.gaussian else beta)
        run = oracles.chi_oracle if oracle == "chi" else oracles.chi_lift_oracle
        result = run(chi_branch, params, span)
    elif oracle == "f":
        result = oracles.f_oracle(params, int(sign), span)
    elif oracle == "gh":
        result = oracles.gh_oracle(params.S, C1, C2, C3, span)
    elif oracle == "phi-psi":
        result = oracles.phi_psi_oracle(params.S, C, C2, C3, span)
    else:
        result = oracles.pipeline_oracle(params, int(sign), span)
    data = result.to_dict()
    data["tolerance"] = tol
    data["passed"] = result.passes(tol)
    click.echo(to_json(data))
    ctx.exit(0 if data["passed"] else 1)


@main.command("simulate")
@solution_options
@click.option("--grid", "grid_text", required=True, help="t0,t1,nt,x0,x1,nx")
@click.option("--bc", type=click.Choice([k.value for k in BoundaryKind]), default="dirichlet", show_default=True)
@click.option("--cfl", type=float, default=CFL, show_default=True)
@click.option("--levels", type=int, default=1, show_default=True, help="More than 1 runs a refinement study")
@click.option("--x-window", default=None, help="a,b window for the error norms")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="CSV file")
@handle_errors
def simulate_command(grid_text, bc, cfl, levels, x_window, out, **opts):
    """Run the finite-difference solver from a solution and compare with it."""
    sol = _solution(opts)
    grid = _parse_grid(grid_text)
    kind = BoundaryKind.parse(bc)
    cfg = SolverConfig(cfl=cfl)
    window = _parse_pair(x_window, "--x-window") if x_window else None
    if levels > 1:
        study = convergence_study(sol.params, sol, grid, levels, kind, cfg, window)
        click.echo(to_json(study.to_dict()))
        return
    condition = BoundaryCondition.dirichlet(sol) if kind is BoundaryKind.DIRICHLET_FROM_EXACT else BoundaryCondition.neumann()
    run = simulate(sol.params, sol, condition, grid, cfg)
    comparison = compare(run, sol, window).to_dict()
    if out:
        write_field_grid(run, out)
        write_json(comparison, residual_sidecar(out))
    click.echo(to_json(comparison))


def _parse_shift(text):
    try:
        t, x = (float(part) for part in text.split(":"))
    except ValueError as exc:
        raise ConfigurationError(f"--shift expects t:x, got {text!r}") from exc
    return t, x


@main.command("superpose")
@click.option("--S", "S", type=float, default=2.0, show_default=True)
@click.option("--C", "C", type=float, default=-0.35, show_default=True)
@click.option("--shift", "shifts", multiple=True, help="t:x of one peak, repeatable")
@click.option("--grid", "grid_text", default=",".join(str(value) for value in FIGURE_WINDOW_WIDE), show_default=True)
@click.option("--spacings", default=None, help="Comma-separated two-peak spacings for a residual curve")
@click.option("--time-offset", type=float, default=SPACING_TIME_OFFSET, show_default=True)
@click.option("--tol", type=float, default=GATE_TOL, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="CSV file")
@click.pass_context
@handle_errors
def superpose_command(ctx, S, C, shifts, grid_text, spacings, time_offset, tol, out):
    """Build a multi-peak superposition and report its residual."""
    grid = _parse_grid(grid_text)
    pairs = tuple(_parse_shift(text) for text in shifts) or FIG5_SHIFTS
    sol = build(SuperpositionSpec(S, C, pairs))
    report = residual_report(sol, grid, guard=SUPERPOSITION_GUARD)
    data = {"residual": verdict(report, tol)}
    if spacings:
        curve = spacing_residual_curve(S, C, _parse_floats(spacings, "--spacings"), grid, time_offset)
        data["spacing_curve"] = curve.to_dict()
    if out:
        write_field_grid(FieldGrid.from_solution(sol, grid), out)
        write_json(report.to_dict(), residual_sidecar(out))
    click.echo(to_json(data))
    ctx.exit(0 if data["residual"]["passed"] else 1)


@main.command("symmetry-check")
@solution_options
@click.option("--generator", "tag", type=click.Choice(GENERATOR_TAGS), required=True)
@click.option("--grid", "grid_text", default="0.5,1.5,11,-2,2,11", show_default=True)
@click.option("--epsilons", default=",".join(str(e) for e in SYMMETRY_EPSILONS), show_default=True)
@click.option("--h", "h", type=float, default=SYMMETRY_FD_STEP, show_default=True)
@click.pass_context
@handle_errors
def symmetry_command(ctx, tag, grid_text, epsilons, h, **opts):
    """Log-log slope of the residual of a first-order flow perturbation."""
    sol = _solution(opts)
    functions = {}
    if tag == "Q1":
        if not hasattr(sol, "f"):
            raise ConfigurationError("generator Q1 needs an F7 solution")
        functions["f"] = sol.f
    if tag == "Q2":
        if not hasattr(sol, "gh"):
            raise ConfigurationError("generator Q2 needs an F8 solution")
        functions["gh"] = sol.gh
    gen = generator(tag, sol.params, **functions)
    result = infinitesimal_symmetry_check(
        sol, gen, _parse_grid(grid_text), epsilons=_parse_floats(epsilons, "--epsilons"), h=h,
    )
    click.echo(to_json(result.to_dict()))
    ctx.exit(0 if result.passed else 1)


@main.command("figure")
@click.argument("number", type=click.IntRange(1, len(FIGURES)))
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), default=None)
@click.option("--grid", "grid_text", default=None, help="Override the default window")
@handle_errors
def figure_command(number, out_dir, grid_text):
    """Write the CSV grids behind one figure."""
    grid = _parse_grid(grid_text) if grid_text else None
    for path in write_figure(number, out_dir or output_directory(), grid):
        click.echo(str(path))


if __name__ == "__main__":
    main()
