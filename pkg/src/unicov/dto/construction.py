from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from unicov.dto.types import Rational
from unicov.sets.group_set import GroupSet


class SumsetCertificate(BaseModel):
    order: int
    modulus: int
    k_requested: int
    k_certified: int
    seed_set: list[int]
    shift: int
    q_size: int
    u_size: int
    lifting_holds: bool
    a_density: Rational
    b_density: Rational
    density_floor: Rational
    direct_un: int | None = None
    symmetric: bool = False
    attempts: int = 1

    @property
    def complement_size(self) -> int:
        return self.order - self.u_size


class UniversalSumset(BaseModel):
    """The triple (A, B, U = A + B) with its certificate."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    a: GroupSet
    b: GroupSet
    u: GroupSet
    certificate: SumsetCertificate

    @field_serializer("a", "b", "u")
    def _ranks(self, s: GroupSet) -> list[int]:
        return s.to_list()


class ConstructionRecord(BaseModel):
    """A constructed set with its verification record, as emitted by ``construct``."""

    family: str
    group: str
    elements: list[int]
    size: int
    verification: dict[str, Any] = Field(default_factory=dict)
