from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PositiveInt


class CheckInstance(BaseModel):
    """
    A replayable check input.

    Sets are rank lists. A set listed in ``powers`` lives in G^m and its ranks
    are ranks of the power group; every other set is a subset of G.
    """

    model_config = ConfigDict(extra="forbid")

    group: str
    sets: dict[str, list[int]] = Field(default_factory=dict)
    powers: dict[str, PositiveInt] = Field(default_factory=dict)
    params: dict[str, Any] = Field(default_factory=dict)
    seed: int | None = None
    trial: int | None = None
