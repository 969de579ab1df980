from pathlib import Path

import click
from loguru import logger

from unicov.cli.output import EXIT_FAILURES, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, emit
from unicov.constructions.exceptions import CertificationError, FamilyParameterError
from unicov.core.enums.family import FamilyTag
from unicov.core.enums.invariant import OutputFormat
from unicov.fourier.exceptions import FourierError
from unicov.group.exceptions import GroupError
from unicov.schemas.family import FamilySpec
from unicov.services.construct.construct_service import ConstructService
from unicov.solver.exceptions import SolverError


@click.command()
@click.argument("family", type=click.Choice([f.value.replace("_", "-") for f in FamilyTag]))
@click.option("--group", default=None, help="Group spec for ap, random and bohr")
@click.option("--p", type=int, default=None, help="Prime for qr and interval")
@click.option("--n", type=int, default=None, help="Dimension for subspace-union")
@click.option("--k", type=int, default=None, help="Universality target")
@click.option("--N", "order", type=int, default=None, help="Order for universal-sumset")
@click.option("--start", type=int, default=0)
@click.option("--length", type=int, default=None)
@click.option("--density", type=float, default=None)
@click.option("--frequency", "frequencies", type=int, multiple=True, help="Bohr frequency; repeatable")
@click.option("--radius", type=float, default=None)
@click.option("--symmetric", is_flag=True, help="Universal sumset with A = B")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--node-budget", type=int, default=None)
@click.option("--output", type=click.Path(path_type=Path), default=None)
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]), default="json")
@click.pass_context
def construct(
    ctx: click.Context,
    family: str,
    group: str | None,
    p: int | None,
    n: int | None,
    k: int | None,
    order: int | None,
    start: int,
    length: int | None,
    density: float | None,
    frequencies: tuple[int, ...],
    radius: float | None,
    symmetric: bool,
    seed: int,
    node_budget: int | None,
    output: Path | None,
    output_format: str,
) -> None:
    """Build a set family and print it with its verification record."""
    try:
        spec = FamilySpec(
            family=family.replace("-", "_"),
            group=group,
            p=p,
            n=n,
            k=k,
            order=order,
            start=start,
            length=length,
            density=density,
            frequencies=list(frequencies),
            radius=radius,
            symmetric=symmetric,
            seed=seed,
        )
        record = ConstructService(spec, node_budget=node_budget).run()
    except (FamilyParameterError, GroupError, FourierError, ValueError) as e:
        logger.error(f"Bad construction parameters: {e}")
        ctx.exit(EXIT_USAGE)
    except (CertificationError, SolverError) as e:
        logger.error(f"Construction could not be certified: {e}")
        ctx.exit(EXIT_INCONCLUSIVE)

    emit(record, output, OutputFormat(output_format))
    ctx.exit(EXIT_FAILURES if record.verification.get("holds") is False else EXIT_OK)
