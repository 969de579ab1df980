import click

from unicov.cli.compute import compute
from unicov.cli.construct import construct
from unicov.cli.output import configure_logging
from unicov.cli.verify import replay, table, verify
from unicov.core.config import settings


@click.group()
@click.option("--verbose", is_flag=True, help="Log at DEBUG level")
@click.version_option(settings.TOOL_VERSION, prog_name=settings.PROJECT_NAME)
def cli(verbose: bool) -> None:
    """Universality and covering numbers in finite abelian groups."""
    configure_logging(verbose)


cli.add_command(compute)
cli.add_command(construct)
cli.add_command(verify)
cli.add_command(table)
cli.add_command(replay)
