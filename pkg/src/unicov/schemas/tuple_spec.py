from pydantic import BaseModel, Field, PositiveInt


class TupleSpec(BaseModel):
    """Block sizes m_1, ..., m_n of a generalized diagonal in G^m, m = sum m_i."""

    blocks: list[PositiveInt] = Field(min_length=1)

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def total(self) -> int:
        return sum(self.blocks)

    def widened(self) -> "TupleSpec":
        """The spec with every block grown by one, as used by interleaved products."""
        return TupleSpec(blocks=[m + 1 for m in self.blocks])
