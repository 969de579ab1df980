from unicov.core.compat import Self

from pydantic import BaseModel, Field, model_validator

from unicov.core.enums.family import FamilyTag

_REQUIRED: dict[FamilyTag, tuple[str, ...]] = {
    FamilyTag.AP: ("group", "length"),
    FamilyTag.RANDOM: ("group", "density"),
    FamilyTag.QR: ("p",),
    FamilyTag.INTERVAL: ("p",),
    FamilyTag.SUBSPACE_UNION: ("n", "k"),
    FamilyTag.UNIVERSAL_SUMSET: ("order", "k"),
    FamilyTag.BOHR: ("group", "radius"),
}


class FamilySpec(BaseModel):
    """A named set family with its parameters; realization is deterministic given the seed."""

    family: FamilyTag
    group: str | None = None
    p: int | None = Field(default=None, ge=2)
    n: int | None = Field(default=None, ge=1)
    k: int | None = Field(default=None, ge=1)
    order: int | None = Field(default=None, ge=2)
    start: int = 0
    length: int | None = Field(default=None, ge=1)
    density: float | None = Field(default=None, gt=0.0, le=1.0)
    frequencies: list[int] = Field(default_factory=list)
    radius: float | None = Field(default=None, gt=0.0, le=2.0)
    symmetric: bool = False
    seed: int = 0

    @model_validator(mode="after")
    def check_parameters(self) -> Self:
        missing = [name for name in _REQUIRED[self.family] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"Family {self.family} requires {', '.join(missing)}")
        return self
