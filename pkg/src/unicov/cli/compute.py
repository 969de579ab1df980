from pathlib import Path

import click
from loguru import logger

from unicov.cli.output import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, emit
from unicov.core.enums.invariant import Invariant, OutputFormat
from unicov.fourier.exceptions import FourierError, ParameterRangeError
from unicov.group.exceptions import GroupError
from unicov.schemas.run_config import RunConfig
from unicov.services.compute.compute_service import ComputeService
from unicov.sets.exceptions import SetError
from unicov.solver.exceptions import SolverError


@click.command()
@click.argument("invariant", type=click.Choice([i.value for i in Invariant]))
@click.option("--group", "group", required=True, help="Group spec, e.g. Z12, Z2^4 or Z6xZ4")
@click.option("--set", "set_literal", required=True, help="JSON list of ranks or coordinate tuples")
@click.option("--target", "target_literal", default=None, help="Target set E for cov(A; E)")
@click.option("--n", type=int, default=None, help="Arity for u_n, order for ek, profile entry for un")
@click.option("--eps", type=float, default=None, help="Spectrum threshold in (0, 1]")
@click.option("--node-budget", type=int, default=None, help="Branch-and-bound node budget")
@click.option("--output", type=click.Path(path_type=Path), default=None, help="Write the report here")
@click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]), default="json")
@click.pass_context
def compute(
    ctx: click.Context,
    invariant: str,
    group: str,
    set_literal: str,
    target_literal: str | None,
    n: int | None,
    eps: float | None,
    node_budget: int | None,
    output: Path | None,
    output_format: str,
) -> None:
    """Compute one invariant of a set."""
    try:
        config = RunConfig(
            command="compute",
            invariant=invariant,
            group=group,
            set_literal=set_literal,
            target_literal=target_literal,
            n=n,
            eps=eps,
            node_budget=node_budget,
            output=output,
            output_format=output_format,
        )
        report = ComputeService(config).run()
    except (GroupError, SetError, ParameterRangeError, ValueError) as e:
        logger.error(f"Bad input: {e}")
        ctx.exit(EXIT_USAGE)
    except (SolverError, FourierError) as e:
        logger.error(f"{invariant} failed: {e}")
        ctx.exit(EXIT_INCONCLUSIVE)

    emit(report, config.output, config.output_format)
    ctx.exit(EXIT_OK if report.conclusive else EXIT_INCONCLUSIVE)
