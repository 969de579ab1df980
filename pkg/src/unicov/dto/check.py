from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field

from unicov.core.enums.check import CheckKind, CheckStatus, Relation
from unicov.dto.types import Rational
from unicov.schemas.check_instance import CheckInstance

Quantity = Annotated[Rational | float, Field(union_mode="left_to_right")]


class Comparison(BaseModel):
    """One side-by-side evaluation ``lhs relation rhs``; positive slack means room to spare."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    label: str
    lhs: Quantity
    rhs: Quantity
    relation: Relation
    holds: bool
    slack: Quantity
    exact: bool = True


class CheckResult(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="strings")

    check_id: str
    anchor: str
    kind: CheckKind
    status: CheckStatus
    instance: CheckInstance
    comparisons: list[Comparison] = Field(default_factory=list)
    lhs: Quantity | None = None
    rhs: Quantity | None = None
    relation: Relation | None = None
    holds: bool | None = None
    slack: Quantity | None = None
    reason: str | None = None
    measurements: dict[str, Any] = Field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status is CheckStatus.FAILED
