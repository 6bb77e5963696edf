import click
import logging
import sys
import traceback
from functools import wraps
from pathlib import Path

from .config import Scenario, bundled_scenarios, resolve_scenario
from .pipeline import Runner
from .render import render_quiver
from .utils import setup_logger, parse_level_spec
from . import constants
from .exceptions import (
    OpgpError,
    ConfigurationError,
    DefinitionError,
    AlgebraError,
    RenderError,
    CheckFailedError,
)
from . import __version__


def complete_scenarios(ctx, param, incomplete):
    """Auto-complete bundled scenario names and .yml files in the current directory"""
    try:
        local = [p.name for p in Path.cwd().iterdir() if p.suffix in constants.SCENARIO_SUFFIXES]
        return sorted(n for n in bundled_scenarios() + local if n.startswith(incomplete))
    except Exception as e:
        logging.debug(f"Scenario auto-completion failed: {e}")
        return []


def setup_logging(debug: bool, log_levels: str = None, log_file: str = None):
    """Setup logger with debug and module-level configuration"""
    setup_logger(debug=debug, module_levels=parse_level_spec(log_levels) or None, log_file=log_file)


def _fail(message: str, code: int):
    logging.error(message)
    ctx = click.get_current_context()
    if ctx.obj and ctx.obj.get('debug'):
        traceback.print_exc()
    ctx.exit(code)


def handle_errors(func):
    """Decorator mapping exceptions to exit codes: 2 for bad input, 1 for everything else"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except ConfigurationError as e:
            _fail(f"Configuration error: {e}", constants.EXIT_USAGE)
        except DefinitionError as e:
            _fail(f"Definition error: {e}", constants.EXIT_USAGE)
        except AlgebraError as e:
            _fail(f"Algebra error: {e}", constants.EXIT_USAGE)
        except RenderError as e:
            _fail(f"Render error: {e}", constants.EXIT_USAGE)
        except CheckFailedError as e:
            _fail(f"Check failed: {e}", constants.EXIT_CHECK_FAILED)
        except OpgpError as e:
            _fail(f"Computation failed: {e}", constants.EXIT_CHECK_FAILED)
        except Exception as e:
            _fail(f"An unexpected error occurred: {e}", constants.EXIT_CHECK_FAILED)
    return wrapper


def _report(report):
    """Print the check outcomes; raise if any failed"""
    for result in report.results:
        mark = "PASS" if result.passed else "FAIL"
        click.echo(f"[{mark}] {result.stage}/{result.kind}: {result.detail}")
    if not report.passed:
        names = ", ".join(f"{r.stage}/{r.kind}" for r in report.failures)
        raise CheckFailedError(f"{len(report.failures)} check(s) failed: {names}")


@handle_errors
def do_run(scenario: str, output_dir: str):
    """Execute run command"""
    scenario = Scenario(resolve_scenario(scenario))
    runner = Runner(scenario, Path(output_dir))
    report = runner.run()
    _report(report)
    if runner.output_dir is not None and runner.output_dir.exists():
        click.echo(f"Artifacts written to {runner.output_dir}")


@handle_errors
def do_check(scenario: str):
    """Execute check command"""
    scenario = Scenario(resolve_scenario(scenario))
    report = Runner(scenario).run()
    _report(report)
    click.echo(f"Scenario '{scenario.name}': all {len(report.results)} check(s) passed.")


def _parse_point(text: str):
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise click.BadParameter(f"'{text}' is not a comma-separated point")


@handle_errors
def do_quiver(csv_file: str, output: str, scale: float, project: str, highlight: tuple):
    """Execute quiver command"""
    points = [_parse_point(h) for h in highlight]
    out = render_quiver(csv_file, output, scale=scale, project=project, highlight=points)
    click.echo(f"Wrote {out}")


@click.group()
@click.option('--debug', is_flag=True, help='Enable debug logging')
@click.option('-l', '--log-levels', help="Comma-separated per-module log levels (e.g., 'gb=DEBUG,kc=INFO')")
@click.option('-f', '--log-file', help='Path to log file')
@click.version_option(version=__version__, prog_name='opgp')
@click.pass_context
def cli(ctx, debug, log_levels, log_file):
    """opgp - Gaussian process priors for linear operator equations

    \b
    Examples:
      opgp list                                  Show bundled scenarios
      opgp run sphere_div_free -o out            Run a scenario, write artifacts
      opgp check square_flow.yml                 Run the checks only
      opgp quiver out/square_flow/field.csv      Render a grid as SVG
    """
    ctx.ensure_object(dict)
    ctx.obj['debug'] = debug
    setup_logging(debug, log_levels, log_file)


@cli.command()
@click.argument('scenario', shell_complete=complete_scenarios)
@click.option('-o', '--out', 'output_dir', default=constants.DEFAULT_OUTPUT_DIR, show_default=True,
              help='Directory receiving <scenario name>/ with all artifacts')
@click.pass_context
def run(ctx, scenario, output_dir):
    """Run a scenario and write its artifacts

    SCENARIO is a YAML file or the name of a bundled scenario.
    Exits 0 when every check passes, 1 when one fails, 2 on bad input.
    """
    do_run(scenario, output_dir)


@cli.command()
@click.argument('scenario', shell_complete=complete_scenarios)
@click.pass_context
def check(ctx, scenario):
    """Run a scenario in memory and evaluate its checks, writing nothing"""
    do_check(scenario)


@cli.command()
@click.argument('csv_file', type=click.Path(dir_okay=False))
@click.option('-o', '--output', help='SVG path (default: CSV path with .svg suffix)')
@click.option('--scale', type=float, default=constants.SVG_DEFAULT_SCALE, show_default=True,
              help='Arrow length per unit of field value')
@click.option('--project', type=click.Choice(constants.SVG_PROJECTION_AXES), default='z', show_default=True,
              help='Axis dropped when plotting 3-D fields')
@click.option('--highlight', multiple=True, help="Point to mark, e.g. '0.5,0.5'; repeatable")
@click.pass_context
def quiver(ctx, csv_file, output, scale, project, highlight):
    """Render an exported grid as an SVG quiver plot

    \b
    Examples:
      opgp quiver field.csv --scale 0.05
      opgp quiver sphere.csv --project z --highlight 1,0,0
    """
    do_quiver(csv_file, output, scale, project, highlight)


@cli.command(name='list')
def list_scenarios():
    """List the bundled scenarios"""
    for name in bundled_scenarios():
        description = ""
        try:
            description = Scenario(resolve_scenario(name)).model.description
        except OpgpError as e:
            logging.debug(f"Could not load bundled scenario '{name}': {e}")
        click.echo(f"{name:<28} {description}".rstrip())


if __name__ == "__main__":
    sys.exit(cli())
