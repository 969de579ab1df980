import math
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from unicov.core.enums.cover import CoverStatus
from unicov.dto.types import Rational
from unicov.sets.group_set import GroupSet


class CoverWitness(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: CoverStatus
    value: int | None = None
    witness: GroupSet | None = None
    optimal: bool = False
    lower_bound: int = 0
    upper_bound: int | None = None
    nodes_explored: int = 0
    deterministic_witness: bool = True
    notes: dict[str, Any] = Field(default_factory=dict)

    @field_serializer("witness")
    def _witness_ranks(self, witness: GroupSet | None) -> list[int] | None:
        return None if witness is None else witness.to_list()

    @property
    def is_finite(self) -> bool:
        return self.value is not None


class UniversalityReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, ser_json_inf_nan="strings")

    un: int | Literal["infinite"]
    optimal: bool = True
    witnessing_failure: list[int] | None = None
    u_profile: dict[int, Rational] = Field(default_factory=dict)
    u_bar: dict[int, float] = Field(default_factory=dict)
    cover: CoverWitness | None = None
    notes: dict[str, Any] = Field(default_factory=dict)

    @property
    def value(self) -> float:
        return math.inf if self.un == "infinite" else float(self.un)

    @property
    def is_infinite(self) -> bool:
        return self.un == "infinite"
