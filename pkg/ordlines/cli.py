#!/usr/bin/python
# -*- coding: utf8
import functools
import logging
import os
import sys

import click

from ordlines import __version__, analysis, constructions, reader, report
from ordlines.exceptions import (
    DegenerateInputError,
    MalformedRational,
    OrdLinesException,
    PointSetFormatError,
    UsageError,
)
from ordlines.field import RATIONAL, parse_rational, to_field
from ordlines.geometry import Kind, Point, canon_line
from ordlines.incidence import (
    image_point_set,
    kelly_trace,
    plane_summary,
    project_from,
    span_summary,
)
from ordlines.log import configure_logger
from ordlines.search import SearchConfig, minimize_ordinary

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ("skew", "near-coplanar", "coplanar-heavy", "random", "grid", "hesse", "axes", "concurrent")


class RationalParamType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return parse_rational(value)
        except MalformedRational as e:
            self.fail(str(e), param, ctx)


RATIONAL_TYPE = RationalParamType()


def parse_point(arg, kind, fld):
    tokens = arg.replace(",", " ").split()
    if len(tokens) != kind.ncoords:
        raise click.BadParameter(f"expected {kind.ncoords} coordinates, got {arg!r}")
    try:
        return Point(tuple(to_field(t, fld) for t in tokens), kind, fld)
    except OrdLinesException as e:
        raise click.BadParameter(str(e))


def translate_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (UsageError, PointSetFormatError) as e:
            raise click.UsageError(str(e))
        except OrdLinesException as e:
            raise click.ClickException(f"{type(e).__name__}: {e}")

    return wrapper


def version_msg():
    python_version = f"{sys.version_info.major}.{sys.version_info.minor}"
    location = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return f"ordlines %(version)s from {location} (Python {python_version})"


def emit(text, output=None):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        click.echo(text, nl=not text.endswith("\n"))


def fail_guarantee(message):
    click.echo(f"guarantee failed: {message}", err=True)
    click.get_current_context().exit(1)


@click.group(context_settings=dict(help_option_names=["-h", "--help"]))
@click.version_option(__version__, "-V", "--version", message=version_msg())
@click.option(
    "--debug-file",
    type=click.Path(),
    default=None,
    help="File to be used as a stream for DEBUG logging",
)
@click.option(
    "-v", "--verbose", is_flag=True, default=False, help="Print debug information"
)
def main(verbose, debug_file):
    """Count ordinary lines and spanned lines/planes of finite point sets, exactly."""
    configure_logger(stream_level="DEBUG" if verbose else "INFO", debug_file=debug_file)


@main.command()
@click.option("-c", "--construction", type=click.Choice(CONSTRUCTIONS), required=True, help="configuration to generate")
@click.option("--m", "m", type=int, default=10, show_default=True, help="points per skew line")
@click.option("--n", "n", type=int, default=10, show_default=True, help="number of points")
@click.option("--k", "k", type=int, default=2, show_default=True, help="points off the plane / per axis")
@click.option("--alpha", type=RATIONAL_TYPE, default="1/2", show_default=True, help="coplanar fraction")
@click.option("--dim", type=click.IntRange(2, 3), default=3, show_default=True)
@click.option("--a", "a", type=int, default=3, show_default=True, help="grid width")
@click.option("--b", "b", type=int, default=3, show_default=True, help="grid height")
@click.option("--lines", type=int, default=3, show_default=True, help="concurrent lines")
@click.option("--per-line", type=int, default=2, show_default=True, help="points per concurrent line")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--bound", type=click.IntRange(1, None), default=10, show_default=True, help="bound on numerators and denominators"
)
@click.option("-o", "--output", type=click.Path(), help="Save point set into file")
@translate_errors
def gen(construction, m, n, k, alpha, dim, a, b, lines, per_line, seed, bound, output):
    """Generate a point set file."""
    if construction == "skew":
        point_set = constructions.gen_two_skew(m)
    elif construction == "near-coplanar":
        point_set = constructions.gen_near_coplanar(n, k, seed=seed, bound=bound)
    elif construction == "coplanar-heavy":
        point_set = constructions.gen_coplanar_heavy(n, alpha.numerator, alpha.denominator, seed=seed, bound=bound)
    elif construction == "random":
        point_set = constructions.gen_random(n, dim, bound=bound, seed=seed)
    elif construction == "grid":
        point_set = constructions.gen_grid2d(a, b)
    elif construction == "hesse":
        point_set = constructions.gen_hesse()
    elif construction == "axes":
        point_set = constructions.gen_axes(k)
    else:
        point_set = constructions.gen_concurrent(lines, per_line, seed=seed, bound=bound)
    logger.debug(f"generated {point_set!r}")
    emit(reader.write_pointset(point_set), output)


@main.command()
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--planes", is_flag=True, default=False, help="List every spanned plane")
@click.option("--json", "as_json", is_flag=True, default=False, help="Print a JSON report")
@translate_errors
def stats(file, planes, as_json):
    """Spanned-line histogram (and spanned planes for sets in space)."""
    point_set = reader.read(file)
    summary = span_summary(point_set)
    plane_data = None
    if point_set.kind is Kind.AFFINE3 and point_set.n >= 3 and summary.num_lines > 1:
        plane_data = plane_summary(point_set)

    if as_json:
        click.echo(report.dumps({"span": summary, "planes": plane_data}, params={"file": file}))
        return
    click.echo(report.render(summary, title=f"{point_set.label or file}: {point_set.n} points"))
    if plane_data is not None:
        click.echo(f"  max_coplanar: {plane_data.max_coplanar}")
        click.echo(f"  spanned_planes: {len(plane_data.plane_members)}")
        if planes:
            for plane, count in plane_data.plane_counts.items():
                click.echo(f"    {plane} {count}")


@main.command()
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--center", type=int, required=True, help="index of the projection center")
@click.option("--trace", is_flag=True, default=False, help="Run the projection argument from the center")
@click.option("--json", "as_json", is_flag=True, default=False, help="Print a JSON report")
@translate_errors
def project(file, center, trace, as_json):
    """Project a set in space from one of its points."""
    point_set = reader.read(file)
    image = project_from(point_set, center)
    q1, unique = image_point_set(image)
    result = kelly_trace(point_set, center) if trace else None

    if as_json:
        groups = [{"image": p, "preimages": list(idx)} for p, idx in image.groups]
        payload = {"groups": groups, "q1_size": q1.n, "q2_size": sum(unique), "trace": result}
        click.echo(report.dumps(payload, params={"file": file, "center": center}))
        return
    click.echo(f"projection of {point_set.label or file} from point {center}")
    click.echo(f"  |Q1|: {q1.n}  |Q2|: {sum(unique)}")
    for p, indices in image.groups:
        click.echo(f"    {p} <- {', '.join(str(i) for i in indices)}")
    if result is not None:
        click.echo(report.render(result, title="trace:", skip=("planes",)))
        if result.planes:
            click.echo(report.render_table(result.planes, ("image_line", "concurrent_lines", "points", "ordinary_avoiding_center")))


@main.command()
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--beta", type=RATIONAL_TYPE, default="2/3", show_default=True)
@click.option("--gamma", type=RATIONAL_TYPE, default="1/9", show_default=True)
@click.option("--json", "as_json", is_flag=True, default=False, help="Print a JSON report")
@translate_errors
def pipeline(file, beta, gamma, as_json):
    """Run the few-coplanar argument on a set in space."""
    point_set = reader.read(file)
    result = analysis.few_coplanar_pipeline(point_set, beta=beta, gamma=gamma)
    if as_json:
        click.echo(report.dumps(result, params={"file": file, "beta": beta, "gamma": gamma}))
        return
    click.echo(report.render(result, title=f"pipeline on {point_set.label or file}", skip=("trace",)))
    if result.trace is not None:
        click.echo(report.render(result.trace, title="trace:", skip=("planes",)))


@main.group()
def verify():
    """Check the statements the bounds rely on; exit 1 when a guarantee over Q fails."""


@verify.command("sylvester-gallai")
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def verify_sylvester_gallai(file, as_json):
    point_set = reader.read(file)
    result = analysis.verify_sylvester_gallai(point_set)
    click.echo(report.dumps(result, {"file": file}) if as_json else report.render(result, title="sylvester-gallai"))
    if not result.holds and result.field == RATIONAL:
        fail_guarantee("non-collinear rational set without an ordinary line")


@verify.command("skew-bound")
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--line1", nargs=2, type=int, required=True, help="indices of two points spanning the first line")
@click.option("--line2", nargs=2, type=int, required=True, help="indices of two points spanning the second line")
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def verify_skew_bound(file, line1, line2, as_json):
    point_set = reader.read(file)
    try:
        first = canon_line(point_set[line1[0]], point_set[line1[1]])
        second = canon_line(point_set[line2[0]], point_set[line2[1]])
    except IndexError:
        raise click.BadParameter(f"point indices must lie in 0..{point_set.n - 1}")
    except DegenerateInputError as e:
        raise click.BadParameter(str(e))
    result = analysis.verify_skew_bound(point_set, first, second)
    params = {"file": file, "line1": list(line1), "line2": list(line2)}
    click.echo(report.dumps(result, params) if as_json else report.render(result, title="skew-bound"))
    if not result.holds:
        fail_guarantee("fewer ordinary lines than |P∩l|·|P∩l'| - |P|")


@verify.command("almost-coplanar")
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--k", "k", type=int, required=True, help="at most n - k points on a plane")
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def verify_almost_coplanar(file, k, as_json):
    point_set = reader.read(file)
    result = analysis.verify_almost_coplanar(point_set, k)
    click.echo(report.dumps(result, {"file": file, "k": k}) if as_json else report.render(result, title="almost-coplanar"))


@verify.command("concurrent")
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--apex", required=True, help="common point, e.g. '0 0'")
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def verify_concurrent(file, apex, as_json):
    point_set = reader.read(file)
    apex_point = parse_point(apex, point_set.kind, point_set.field)
    result = analysis.concurrent_lines_probe(point_set, apex_point)
    click.echo(report.dumps(result, {"file": file, "apex": apex}) if as_json else report.render(result, title="concurrent"))
    if not result.holds:
        fail_guarantee("no ordinary line avoiding the apex")


@verify.command("small-lines")
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def verify_small_lines(file, as_json):
    point_set = reader.read(file)
    result = analysis.small_line_counts(point_set)
    click.echo(report.dumps(result, {"file": file}) if as_json else report.render(result, title="small-lines"))


@verify.command("beck")
@click.argument("file", type=click.Path(exists=True, readable=True))
@click.option("--beta", type=RATIONAL_TYPE, default="2/3", show_default=True)
@click.option("--gamma", type=RATIONAL_TYPE, default="1/9", show_default=True)
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def verify_beck(file, beta, gamma, as_json):
    point_set = reader.read(file)
    result = analysis.beck_report(point_set, beta=beta, gamma=gamma)
    params = {"file": file, "beta": beta, "gamma": gamma}
    click.echo(report.dumps(result, params) if as_json else report.render(result, title="beck"))


@main.command()
@click.option("--alpha", type=RATIONAL_TYPE, required=True)
@click.option("--beta", type=RATIONAL_TYPE, default="2/3", show_default=True)
@click.option("--gamma", type=RATIONAL_TYPE, default="1/9", show_default=True)
@click.option("--grid", is_flag=True, default=False, help="Also evaluate d_alpha on the 1/100 grid")
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def constants(alpha, beta, gamma, grid, as_json):
    """Exact constants of the ordinary-line bound."""
    result = analysis.bound_constants(alpha, beta, gamma)
    grid_rows = None
    combined = None
    if grid:
        grid_rows = [analysis.bound_constants(a, beta, gamma) for a in analysis.alpha_grid()]
        combined = analysis.main_constant_on_grid(alpha, beta, gamma)

    if as_json:
        payload = {"constants": result, "combined": combined}
        if grid_rows is not None:
            payload["grid"] = [{"alpha": r.alpha, "d_alpha": r.d_alpha} for r in grid_rows]
        click.echo(report.dumps(payload, params={"alpha": alpha, "beta": beta, "gamma": gamma}))
        return
    click.echo(report.render(result, title="constants"))
    if grid_rows is not None:
        click.echo(report.render_table(grid_rows, ("alpha", "mu", "nu", "d_alpha")))
        click.echo(report.render(combined, title="combined on grid"))


@main.command()
@click.option("--m", "m", type=int, required=True, help="even number of conic points")
@click.option("--json", "as_json", is_flag=True, default=False)
@translate_errors
def boroczky(m, as_json):
    """Conic-plus-line incidence model on 2m points."""
    result = constructions.boroczky_model(m)
    click.echo(report.dumps(result, {"m": m}) if as_json else report.render(result, title="boroczky"))


@main.command()
@click.option("--n", "n", type=int, default=None, help="number of points (defaults to the initial set's size)")
@click.option("--alpha", type=RATIONAL_TYPE, required=True, help="at most floor(alpha n) points on a plane")
@click.option("--iters", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--bound", type=click.IntRange(1, None), default=10, show_default=True, help="bound on random numerators and denominators"
)
@click.option("--init", "init", type=click.Path(exists=True, readable=True), help="initial point set")
@click.option("-o", "--output", type=click.Path(), required=True, help="Save best point set into file")
@click.option("--trace-json", type=click.Path(), help="Save the JSON report into file instead of printing it")
@click.option("-q", "--quiet", is_flag=True, default=False, help="No progress bar")
@translate_errors
def search(n, alpha, iters, seed, bound, init, output, trace_json, quiet):
    """Anneal toward few ordinary lines under a coplanarity cap."""
    initial = reader.read(init) if init else None
    if n is None:
        if initial is None:
            raise click.UsageError("give --n or --init")
        n = initial.n
    config = SearchConfig(n=n, alpha=alpha, iterations=iters, seed=seed, coordinate_bound=bound, initial=initial)

    if quiet:
        result = minimize_ordinary(config)
    else:
        with click.progressbar(length=iters, label="annealing", file=sys.stderr) as bar:
            result = minimize_ordinary(config, progress=bar.update)

    reader.write(result.best, output)
    params = {"n": n, "alpha": alpha, "iters": iters, "seed": seed, "bound": bound, "init": init}
    emit(report.dumps(result, params) + "\n", trace_json)
    logger.info(f"best {result.best_count} ordinary lines written to {output}")
