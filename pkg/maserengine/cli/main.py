"""Main CLI entry point."""

from argparse import Namespace
from typing import Optional

import click

from ..logging import setup_logging
from ..shared.constants import DEFAULT_OUTPUT_DIR
from .commands import AuditCommand, ListPresetsCommand, RunCommand


@click.group()
@click.option(
    '--log-level',
    type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
    default='INFO',
    help='Console log level',
)
@click.option('--log-file', type=click.Path(), default=None, help='Also log to this file')
def cli(log_level: str, log_file: Optional[str]):
    """Three-level maser heat engine simulator."""
    setup_logging(log_file, level=log_level.upper())


@cli.command()
@click.option('--config', 'config', type=click.Path(), default=None, help='Run configuration file (JSON or YAML)')
@click.option('--preset', 'presets', multiple=True, help='Named preset; repeat for a batch')
@click.option(
    '--out',
    type=click.Path(file_okay=False),
    default=str(DEFAULT_OUTPUT_DIR),
    show_default=True,
    help='Directory the run directories are created in',
)
@click.pass_context
def run(ctx: click.Context, config: Optional[str], presets: tuple[str, ...], out: str):
    """Integrate a configuration or presets and write all outputs."""
    ctx.exit(RunCommand()(Namespace(config=config, presets=presets, out=out)))


@cli.command(name='list-presets')
@click.option('--json', 'as_json', is_flag=True, help='Output the full configurations as JSON')
@click.pass_context
def list_presets(ctx: click.Context, as_json: bool):
    """List the named presets."""
    ctx.exit(ListPresetsCommand()(Namespace(json=as_json)))


@cli.command()
@click.option('--trajectory', type=click.Path(file_okay=False), required=True, help='Run directory')
@click.pass_context
def audit(ctx: click.Context, trajectory: str):
    """Re-run the thermodynamic audits on a stored run."""
    ctx.exit(AuditCommand()(Namespace(trajectory=trajectory)))


def main():
    cli()


if __name__ == '__main__':
    main()
