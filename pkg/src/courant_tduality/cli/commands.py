"""
Command-line interface.

Problem documents are read from a file or stdin and reports are written to
stdout, so commands compose in pipes:

    courant-tduality example lens -p m=1 -p k=1 -p n=1 | courant-tduality tdualize -

Exit codes: 0 when every verdict passes, 2 when a verdict fails, 1 on errors.
"""

from typing import Any, Dict, Optional, Tuple
import importlib
import logging
import sys
from pathlib import Path

import click

from ..core import ConfigManager, Workbench, WorkbenchError, get_registry
from ..utils import parse_box, setup_logging
from ..workbench import COMMAND_TABLE, ProblemDocument, ReportDocument, cmd_example

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 2


def discover_components() -> None:
    """
    Import every component package so that its @register_component runs.

    Scans components/<category>/<component>/ directories.
    """
    components_path = Path(__file__).parent.parent / "components"
    if not components_path.exists():
        return
    for category_dir in sorted(components_path.iterdir()):
        if not category_dir.is_dir() or category_dir.name.startswith("_"):
            continue
        for component_dir in sorted(category_dir.iterdir()):
            if not component_dir.is_dir() or component_dir.name.startswith("_"):
                continue
            module_path = f"courant_tduality.components.{category_dir.name}.{component_dir.name}"
            try:
                importlib.import_module(module_path)
            except ImportError as e:
                logging.getLogger(__name__).warning(f"Skipping {module_path}: {e}")


def _fail(message: str) -> None:
    click.echo(f"✗ Error: {message}", err=True)
    sys.exit(EXIT_ERROR)


def _bench(ctx: click.Context, timings: bool) -> Workbench:
    overrides: Dict[str, Any] = {"report": {"include_timings": True}} if timings else {}
    bench = Workbench(config_dir=ctx.obj.get("config_dir"), config=overrides)
    if ctx.obj.get("verbose"):
        bench.subscribe_event("*", lambda name, data: click.echo(f"  · {name}", err=True))
    return bench


def _emit(report: ReportDocument, fmt: str) -> None:
    click.echo(report.to_json() if fmt == "json" else report.to_text())
    sys.exit(EXIT_OK if report.passed else EXIT_FAILED)


def sampling_options(fn):
    """--seed, --samples, --box, --format and --timings shared by the document commands."""
    fn = click.option("--timings", is_flag=True, help="Include stage timings in the report")(fn)
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "text"]),
        default="json",
        help="Report format (default: json)",
    )(fn)
    fn = click.option("--box", type=str, help="Sampling box as 'a,b' (rationals)")(fn)
    fn = click.option("--samples", type=int, help="Number of sample points (at least 20)")(fn)
    fn = click.option("--seed", type=int, help="Seed of sample points and random sections")(fn)
    fn = click.argument("document", type=click.File("r"), default="-")(fn)
    return fn


def _run(
    ctx: click.Context,
    command: str,
    document,
    seed: Optional[int],
    samples: Optional[int],
    box: Optional[str],
    fmt: str,
    timings: bool,
) -> None:
    try:
        doc = ProblemDocument.from_json(document.read())
        flags = {"seed": seed, "samples": samples, "box": parse_box(box) if box else None}
        report = COMMAND_TABLE[command](doc, _bench(ctx, timings), flags)
    except WorkbenchError as e:
        _fail(str(e))
    _emit(report, fmt)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output")
@click.option("--log-file", type=click.Path(), help="Log file path")
@click.option(
    "--config-dir",
    type=click.Path(exists=True, file_okay=False),
    help="Folder with framework.yaml and components/*.yaml",
)
@click.pass_context
def cli(ctx, verbose, log_file, config_dir):
    """Courant algebroid reduction and T-duality toolkit."""
    discover_components()
    try:
        if config_dir:
            config = ConfigManager.from_config_folder(config_dir)
        else:
            config = ConfigManager.defaults()
        level = logging.DEBUG if verbose else config.get("logging.level", "INFO")
        setup_logging("courant_tduality", level=level, log_file=log_file)
    except WorkbenchError as e:
        _fail(str(e))
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    ctx.obj["config_dir"] = config_dir


@cli.command()
@sampling_options
@click.pass_context
def check(ctx, document, seed, samples, box, fmt, timings):
    """Courant axioms, reducibility and invariance suites."""
    _run(ctx, "check", document, seed, samples, box, fmt, timings)


@cli.command()
@sampling_options
@click.pass_context
def reduce(ctx, document, seed, samples, box, fmt, timings):
    """Reduce by K1 and K2 and report the reduced fluxes."""
    _run(ctx, "reduce", document, seed, samples, box, fmt, timings)


@cli.command()
@sampling_options
@click.pass_context
def relate(ctx, document, seed, samples, box, fmt, timings):
    """Generators and rank of the T-duality relation."""
    _run(ctx, "relate", document, seed, samples, box, fmt, timings)


@cli.command()
@sampling_options
@click.pass_context
def tdualize(ctx, document, seed, samples, box, fmt, timings):
    """Run the full T-duality pipeline and print the dual background."""
    _run(ctx, "tdualize", document, seed, samples, box, fmt, timings)


@cli.command(name="para-check")
@sampling_options
@click.pass_context
def para_check(ctx, document, seed, samples, box, fmt, timings):
    """Fluxes, admissible directions and the para-Buscher dual."""
    _run(ctx, "para-check", document, seed, samples, box, fmt, timings)


def _parse_params(pairs: Tuple[str, ...]) -> Dict[str, str]:
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise click.BadParameter(f"expected key=value, got '{pair}'", param_hint="--param")
        params[key.strip()] = value.strip()
    return params


@cli.command()
@click.argument("name", type=click.Choice(["lens", "heisenberg", "circle"]))
@click.option("--param", "-p", multiple=True, help="Example parameter as key=value")
def example(name, param):
    """Print a packaged example document (lens, heisenberg or circle)."""
    try:
        doc = cmd_example(name, _parse_params(param))
    except WorkbenchError as e:
        _fail(str(e))
    click.echo(doc.to_json())


@cli.command()
@click.option("--category", type=str, help="Filter by category (optional)")
def list_components(category):
    """List all registered components."""
    registry = get_registry()
    listing = registry.list_components(category)
    if not any(listing.values()):
        click.echo(f"No components found{f' in category: {category}' if category else '.'}")
        return
    for cat, names in listing.items():
        click.echo(f"\n📦 {cat}")
        for comp_name in names:
            info = registry.get_info(cat, comp_name)
            click.echo(f"  • {comp_name} (v{info['version']})")
            if info["description"]:
                click.echo(f"    {info['description']}")


@cli.command()
@click.argument("category")
@click.argument("component_name")
def info(category, component_name):
    """Show detailed information about a component."""
    try:
        info_data = get_registry().get_info(category, component_name)
    except WorkbenchError as e:
        click.echo(f"✗ Component not found: {e}", err=True)
        sys.exit(EXIT_ERROR)
    click.echo("\n📋 Component Information")
    click.echo(f"{'─' * 40}")
    click.echo(f"Name:        {info_data['name']}")
    click.echo(f"Category:    {info_data['category']}")
    click.echo(f"Version:     {info_data['version']}")
    click.echo(f"Description: {info_data['description']}")
    if info_data["metadata"]:
        click.echo("\nMetadata:")
        for key, value in info_data["metadata"].items():
            click.echo(f"  {key}: {value}")


if __name__ == "__main__":
    cli()
