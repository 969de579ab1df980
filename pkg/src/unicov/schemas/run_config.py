from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from unicov.core.enums.invariant import Invariant, OutputFormat
from unicov.schemas.family import FamilySpec


class RunConfig(BaseModel):
    """Everything a command was run with; serialized into its report so the run can be repeated."""

    model_config = ConfigDict(extra="forbid")

    command: Literal["compute", "construct", "verify", "table", "replay"]
    seed: int = 0
    output: Path | None = None
    output_format: OutputFormat = OutputFormat.JSON

    # +--- compute ---+#
    invariant: Invariant | None = None
    group: str | None = None
    set_literal: str | None = None
    target_literal: str | None = None
    n: int | None = Field(default=None, ge=1)
    eps: float | None = Field(default=None, gt=0.0, le=1.0)
    node_budget: int | None = Field(default=None, ge=1)

    # +--- construct ---+#
    family: FamilySpec | None = None

    # +--- verify ---+#
    suite: str = "all"
    trials: int = Field(default=0, ge=0)
    parallelism: int = Field(default=1, ge=1)
    exhaustive: str | None = None
    report_path: Path | None = None

    # +--- table ---+#
    primes: list[int] = Field(default_factory=list)
    families: list[str] = Field(default_factory=list)
    density: float = Field(default=0.5, gt=0.0, le=1.0)
