from pathlib import Path

import click
from loguru import logger

from unicov.cli.output import EXIT_FAILURES, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, emit
from unicov.constructions.exceptions import FamilyParameterError
from unicov.core.enums.invariant import OutputFormat
from unicov.group.exceptions import GroupError
from unicov.schemas.run_config import RunConfig
from unicov.services.verify.verify_service import VerifyService
from unicov.verify.exceptions import VerifyError
from unicov.verify.table import to_frame


def _primes(raw: str) -> list[int]:
    """Parse ``11,13,17`` or a range ``11-101``."""
    raw = raw.strip()
    if "-" in raw and "," not in raw:
        lo, hi = (int(part) for part in raw.split("-", 1))
        return list(range(lo, hi + 1))
    return [int(part) for part in raw.split(",") if part.strip()]


def _families(raw: tuple[str, ...]) -> list[str]:
    return [name.strip() for token in raw for name in token.split(",") if name.strip()]


@click.command()
@click.option("--suite", default="all", show_default=True, help="Suite name or comma-separated check ids")
@click.option("--trials", type=int, default=0, show_default=True, help="Random instances per check")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--parallelism", type=int, default=1, show_default=True)
@click.option("--exhaustive", default=None, help="Group whose every subset is checked instead of random trials")
@click.option("--output", type=click.Path(path_type=Path), default=None)
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    trials: int,
    seed: int,
    parallelism: int,
    exhaustive: str | None,
    output: Path | None,
) -> None:
    """Run a verification campaign; exits 1 if any check fails, 3 if a premise-gated check never ran."""
    try:
        config = RunConfig(
            command="verify",
            suite=suite,
            trials=trials,
            seed=seed,
            parallelism=parallelism,
            exhaustive=exhaustive,
            output=output,
        )
        report = VerifyService(config).campaign()
    except (VerifyError, GroupError, ValueError) as e:
        logger.error(f"Bad campaign parameters: {e}")
        ctx.exit(EXIT_USAGE)

    emit(report, output, OutputFormat.JSON)
    if not report.ok:
        ctx.exit(EXIT_FAILURES)
    ctx.exit(EXIT_OK if report.adequate else EXIT_INCONCLUSIVE)


@click.command()
@click.option("--p", "primes", required=True, help="Primes as 11,13,17 or a range 11-101 (composites rejected)")
@click.option(
    "--family", "--families", "families", multiple=True, help="random, qr or interval; repeatable or comma-separated"
)
@click.option("--density", type=float, default=0.5, show_default=True, help="Density of the random family")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--node-budget", type=int, default=None)
@click.option("--output", "--out", "output", type=click.Path(path_type=Path), default=None)
@click.option("--format", "output_format", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.pass_context
def table(
    ctx: click.Context,
    primes: str,
    families: tuple[str, ...],
    density: float,
    seed: int,
    node_budget: int | None,
    output: Path | None,
    output_format: str,
) -> None:
    """Covering numbers of the sum-product table rows; exits 1 if an asserted cell fails."""
    try:
        config = RunConfig(
            command="table",
            primes=_primes(primes),
            families=_families(families),
            density=density,
            seed=seed,
            node_budget=node_budget,
            output=output,
            output_format=output_format,
        )
        report = VerifyService(config).table()
    except (VerifyError, FamilyParameterError, ValueError) as e:
        logger.error(f"Bad table parameters: {e}")
        ctx.exit(EXIT_USAGE)

    emit(report, output, config.output_format, frame=to_frame(report))
    ctx.exit(EXIT_OK if report.ok else EXIT_FAILURES)


@click.command()
@click.argument("report_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--output", type=click.Path(path_type=Path), default=None)
@click.pass_context
def replay(ctx: click.Context, report_path: Path, output: Path | None) -> None:
    """Re-run the failures stored in a campaign report; exits 1 unless every one reproduces."""
    try:
        config = RunConfig(command="replay", report_path=report_path, output=output)
        result = VerifyService(config).replay(report_path)
    except (VerifyError, ValueError) as e:
        logger.error(f"Cannot replay {report_path}: {e}")
        ctx.exit(EXIT_USAGE)

    emit(result, output, OutputFormat.JSON)
    ctx.exit(EXIT_OK if result.ok else EXIT_FAILURES)
