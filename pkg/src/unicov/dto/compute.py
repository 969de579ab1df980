from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from unicov.core.enums.invariant import ComputeStatus, Invariant
from unicov.dto.check import Quantity


class ComputeReport(BaseModel):
    """One invariant of one set, with its witness and provenance."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    invariant: Invariant
    group: str
    elements: list[int]
    value: Quantity | None = None
    status: ComputeStatus
    witness: list[int] | None = None
    details: dict[str, Any] = Field(default_factory=dict)
    config: dict[str, Any] = Field(default_factory=dict)
    tool_version: str

    @property
    def conclusive(self) -> bool:
        return self.status not in (ComputeStatus.INFEASIBLE, ComputeStatus.INDETERMINATE)
