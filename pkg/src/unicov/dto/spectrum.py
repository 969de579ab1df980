from pydantic import BaseModel, Field


class SpectrumSet(BaseModel):
    threshold: float = Field(gt=0.0, le=1.0)
    characters: list[int]
    principal_excluded: bool = False

    def __len__(self) -> int:
        return len(self.characters)

    def __contains__(self, chi: object) -> bool:
        return chi in self.characters
