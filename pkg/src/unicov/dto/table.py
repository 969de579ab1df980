from typing import Literal

from pydantic import BaseModel, Field

Operation = Literal["+", "×"]


class TableRow(BaseModel):
    """One cell of the sum-product covering table: a derived set and one covering operation."""

    p: int
    family: str
    row_label: str
    operation: Operation
    value: int | None
    optimal: bool
    predicted_class: str
    size: int
    bound: float | None = None
    holds: bool | None = None


class TableReport(BaseModel):
    primes: list[int]
    families: list[str]
    seed: int
    rows: list[TableRow] = Field(default_factory=list)
    tool_version: str

    @property
    def failures(self) -> list[TableRow]:
        return [row for row in self.rows if row.holds is False]

    @property
    def ok(self) -> bool:
        return not self.failures
