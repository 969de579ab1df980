import json
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from typing import Any

import numpy as np

from unicov.group.exceptions import ElementRangeError
from unicov.group.group import Element, Group
from unicov.sets.exceptions import GroupMismatchError, SetLiteralError


class GroupSet:
    """An immutable subset of a finite abelian group stored as a dense bit-vector."""

    __slots__ = ("group", "_bits", "_size", "_hash")

    def __init__(self, group: Group, bits: np.ndarray) -> None:
        bits = np.array(bits, dtype=bool).reshape(-1)
        if bits.size != group.order:
            raise SetLiteralError(
                f"Bit-vector of length {bits.size} does not fit {group} (N={group.order})"
            )
        bits.setflags(write=False)
        self.group = group
        self._bits = bits
        self._size = int(np.count_nonzero(bits))
        self._hash: int | None = None

    # +--- constructors ---+#

    @classmethod
    def from_elements(cls, group: Group, elements: Iterable[Element]) -> "GroupSet":
        bits = np.zeros(group.order, dtype=bool)
        ranks = np.fromiter((int(e) for e in elements), dtype=np.int64)
        if ranks.size and (ranks.min() < 0 or ranks.max() >= group.order):
            raise ElementRangeError(f"Set element out of range for {group}")
        bits[ranks] = True
        return cls(group, bits)

    @classmethod
    def from_mask(cls, group: Group, mask: int) -> "GroupSet":
        """Build a set from a Python int whose bit ``i`` marks rank ``i``."""
        raw = mask.to_bytes((group.order + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return cls(group, bits[: group.order])

    @classmethod
    def empty(cls, group: Group) -> "GroupSet":
        return cls(group, np.zeros(group.order, dtype=bool))

    @classmethod
    def full(cls, group: Group) -> "GroupSet":
        return cls(group, np.ones(group.order, dtype=bool))

    @classmethod
    def from_literal(cls, group: Group, literal: str | Sequence[Any]) -> "GroupSet":
        """
        Parse a JSON array of ranks (``[0,1,5]``) or of coordinate tuples
        (``[[0,1],[1,0]]``) and canonicalize it to ranks.
        """
        if isinstance(literal, str):
            try:
                literal = json.loads(literal)
            except json.JSONDecodeError as e:
                raise SetLiteralError(f"Set literal is not valid JSON: {e}") from e
        if not isinstance(literal, list):
            raise SetLiteralError("Set literal must be a JSON array")

        ranks: list[int] = []
        for item in literal:
            if isinstance(item, bool):
                raise SetLiteralError(f"Invalid set element {item!r}")
            if isinstance(item, int):
                ranks.append(group.check(item))
            elif isinstance(item, list) and all(isinstance(c, int) for c in item):
                if len(item) != group.rank_count or any(
                    not 0 <= c < n for c, n in zip(item, group.factors, strict=False)
                ):
                    raise SetLiteralError(f"Coordinates {item} do not fit {group}")
                ranks.append(group.rank(item))
            else:
                raise SetLiteralError(f"Invalid set element {item!r}")
        return cls.from_elements(group, ranks)

    # +--- views ---+#

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    def cube(self) -> np.ndarray:
        """The bit-vector shaped like the factor list of the group."""
        return self._bits.reshape(self.group.shape)

    @property
    def elements(self) -> np.ndarray:
        return np.flatnonzero(self._bits)

    @property
    def density(self) -> Fraction:
        return Fraction(self._size, self.group.order)

    @property
    def order(self) -> int:
        return self.group.order

    def to_mask(self) -> int:
        packed = np.packbits(self._bits, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def to_list(self) -> list[int]:
        return [int(e) for e in self.elements]

    def to_literal(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))

    def is_empty(self) -> bool:
        return self._size == 0

    def is_full(self) -> bool:
        return self._size == self.group.order

    # +--- protocol ---+#

    def __len__(self) -> int:
        return self._size

    def __contains__(self, item: object) -> bool:
        return isinstance(item, int | np.integer) and 0 <= item < self.group.order and bool(
            self._bits[item]
        )

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupSet):
            return NotImplemented
        return self.group == other.group and np.array_equal(self._bits, other._bits)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.group, self._bits.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        shown = self.to_list()
        body = shown if len(shown) <= 16 else f"{shown[:16]}... ({self._size} elements)"
        return f"GroupSet({self.group}, {body})"

    def _same_group(self, other: "GroupSet") -> None:
        if self.group != other.group:
            raise GroupMismatchError(f"Sets live in {self.group} and {other.group}")

    def __and__(self, other: "GroupSet") -> "GroupSet":
        self._same_group(other)
        return GroupSet(self.group, self._bits & other._bits)

    def __or__(self, other: "GroupSet") -> "GroupSet":
        self._same_group(other)
        return GroupSet(self.group, self._bits | other._bits)

    def __sub__(self, other: "GroupSet") -> "GroupSet":
        self._same_group(other)
        return GroupSet(self.group, self._bits & ~other._bits)

    def __le__(self, other: "GroupSet") -> bool:
        self._same_group(other)
        return not np.any(self._bits & ~other._bits)

    def __ge__(self, other: "GroupSet") -> bool:
        return other <= self


def same_group(*sets: GroupSet) -> Group:
    group = sets[0].group
    for s in sets[1:]:
        if s.group != group:
            raise GroupMismatchError(f"Sets live in {group} and {s.group}")
    return group
