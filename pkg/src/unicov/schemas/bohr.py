from pydantic import BaseModel, Field, NonNegativeInt


class BohrSpec(BaseModel):
    frequencies: list[NonNegativeInt] = Field(default_factory=list)
    radius: float = Field(gt=0.0, le=2.0)

    @property
    def dimension(self) -> int:
        return len(self.frequencies)
