import sys
from pathlib import Path
from typing import Final

import click
import pandas as pd
from loguru import logger
from pydantic import BaseModel

from unicov.core.config import settings
from unicov.core.enums.invariant import OutputFormat

EXIT_OK: Final[int] = 0
EXIT_FAILURES: Final[int] = 1
EXIT_USAGE: Final[int] = 2
EXIT_INCONCLUSIVE: Final[int] = 3


def configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else settings.LOG_LEVEL)


def emit(model: BaseModel, output: Path | None, output_format: OutputFormat, frame: pd.DataFrame | None = None) -> None:
    """Write a report as JSON, CSV (tabular reports only) or a short text summary."""
    match output_format:
        case OutputFormat.CSV:
            if frame is None:
                raise click.UsageError("CSV output is only available for the table command")
            text = frame.to_csv(index=False)
        case OutputFormat.TEXT:
            text = "\n".join(f"{key}: {value}" for key, value in model.model_dump(mode="json").items()) + "\n"
        case _:
            text = model.model_dump_json(indent=2) + "\n"

    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text)
        logger.info(f"Wrote {output_format} report to {output}")
