import math
import re
from collections.abc import Iterable, Sequence
from functools import cached_property, reduce
from typing import NamedTuple

import numpy as np

from unicov.core.config import settings
from unicov.group.exceptions import ElementRangeError, GroupCapError, GroupSpecError

Element = int
CharacterIndex = int

_TOKEN = re.compile(r"z(\d+)(?:\^(\d+))?")


class Group:
    """
    The group Z/n_1 x ... x Z/n_r with elements encoded as mixed-radix ranks.

    The first factor is the most significant digit, so ranks agree with the
    C-order ravel of an array shaped like ``factors``. Groups built by
    ``power_group`` remember their base group and exponent, which lets tuple
    sets over G^m be split back into coordinates in G.
    """

    def __init__(
        self,
        factors: Sequence[int],
        *,
        base: "Group | None" = None,
        power: int = 1,
        cap: int | None = None,
    ) -> None:
        factors = tuple(int(n) for n in factors)
        if not factors:
            raise GroupSpecError("A group needs at least one cyclic factor")
        if any(n < 1 for n in factors):
            raise GroupSpecError(f"Cyclic orders must be positive, got {factors}")

        order = math.prod(factors)
        cap = settings.GROUP_ORDER_CAP if cap is None else cap
        if order > cap:
            raise GroupCapError(f"Group order {order} exceeds the cap {cap}")

        self.factors = factors
        self.order = order
        self.base = self if base is None else base
        self.power = power

    # +--- identity ---+#

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"Group({self.spec})"

    def __str__(self) -> str:
        return self.spec

    def __len__(self) -> int:
        return self.order

    @property
    def spec(self) -> str:
        return "x".join(f"Z{n}" for n in self.factors)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.factors

    @property
    def rank_count(self) -> int:
        return len(self.factors)

    @cached_property
    def exponent(self) -> int:
        """Least common multiple of the cyclic orders."""
        return reduce(math.lcm, self.factors, 1)

    @property
    def is_cyclic_factor(self) -> bool:
        return len(self.factors) == 1

    # +--- rank encoding ---+#

    def check(self, a: Element) -> Element:
        if not 0 <= a < self.order:
            raise ElementRangeError(f"Rank {a} is outside [0, {self.order}) in {self}")
        return a

    def coords(self, a: Element) -> tuple[int, ...]:
        self.check(a)
        return tuple(int(c) for c in np.unravel_index(a, self.factors))

    def rank(self, coords: Sequence[int]) -> Element:
        if len(coords) != len(self.factors):
            raise ElementRangeError(
                f"Expected {len(self.factors)} coordinates for {self}, got {len(coords)}"
            )
        reduced = [int(c) % n for c, n in zip(coords, self.factors, strict=True)]
        return int(np.ravel_multi_index(reduced, self.factors))

    @cached_property
    def coord_table(self) -> np.ndarray:
        """Row ``a`` holds the coordinates of rank ``a``."""
        table = np.stack(np.unravel_index(np.arange(self.order), self.factors), axis=1)
        table.setflags(write=False)
        return table

    def ranks_of(self, coords: np.ndarray) -> np.ndarray:
        """Vectorized ``rank`` for an array of coordinate rows."""
        moduli = np.asarray(self.factors)
        return np.ravel_multi_index(tuple((coords % moduli).T), self.factors)

    # +--- arithmetic ---+#

    def add(self, a: Element, b: Element) -> Element:
        ca, cb = self.coords(a), self.coords(b)
        return self.rank([x + y for x, y in zip(ca, cb, strict=True)])

    def neg(self, a: Element) -> Element:
        return self.rank([-x for x in self.coords(a)])

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def scalar_mul(self, lam: int, a: Element) -> Element:
        return self.rank([lam * x for x in self.coords(a)])

    def is_unit(self, lam: int) -> bool:
        return math.gcd(lam, self.order) == 1

    @cached_property
    def neg_table(self) -> np.ndarray:
        table = self.ranks_of(-self.coord_table)
        table.setflags(write=False)
        return table

    def scalar_table(self, lam: int) -> np.ndarray:
        """Entry ``a`` is the rank of ``lam * a``."""
        return self.ranks_of(lam * self.coord_table)

    def add_table_row(self, x: Element) -> np.ndarray:
        """Entry ``a`` is the rank of ``a + x``."""
        return self.ranks_of(self.coord_table + np.asarray(self.coords(x)))

    def elements(self) -> range:
        return range(self.order)

    # +--- tuples over the base group ---+#

    def split(self, a: Element) -> tuple[Element, ...]:
        """Ranks in the base group of the components of a tuple element."""
        return tuple(int(c) for c in np.unravel_index(a, (self.base.order,) * self.power))

    def join(self, parts: Sequence[Element]) -> Element:
        if len(parts) != self.power:
            raise ElementRangeError(
                f"Expected {self.power} components for {self}, got {len(parts)}"
            )
        for part in parts:
            self.base.check(part)
        return int(np.ravel_multi_index(tuple(parts), (self.base.order,) * self.power))


class CharacterValue(NamedTuple):
    """The root of unity exp(2 pi i numerator / order), with its float shadow."""

    numerator: int
    order: int
    value: complex


def make_group(factors: Iterable[int], *, cap: int | None = None) -> Group:
    return Group(tuple(factors), cap=cap)


def power_group(group: Group, m: int, *, cap: int | None = None) -> Group:
    if m < 1:
        raise GroupSpecError(f"Power must be positive, got {m}")
    if m == 1:
        return group
    base = group.base
    cap = settings.GROUP_ORDER_CAP if cap is None else cap
    if group.order**m > cap:
        raise GroupCapError(f"Order {group.order}^{m} exceeds the cap {cap}")
    return Group(group.factors * m, base=base, power=group.power * m, cap=cap)


def parse_group_spec(spec: str, *, cap: int | None = None) -> Group:
    """Parse ``Z12``, ``Z2^4`` or ``Z6xZ4`` style group descriptions."""
    if not spec or any(ch.isspace() for ch in spec):
        raise GroupSpecError(f"Invalid group spec {spec!r}")

    factors: list[int] = []
    for token in spec.lower().split("x"):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise GroupSpecError(f"Invalid factor {token!r} in group spec {spec!r}")
        order = int(match.group(1))
        repeat = int(match.group(2)) if match.group(2) else 1
        if repeat < 1:
            raise GroupSpecError(f"Invalid repetition in group spec {spec!r}")
        factors.extend([order] * repeat)
    return Group(factors, cap=cap)


def character_exponents(group: Group, chi: CharacterIndex) -> np.ndarray:
    """Entry ``g`` is the exponent e with chi(g) = exp(2 pi i e / L), L the exponent of G."""
    c = np.asarray(group.coords(group.check(chi)))
    weights = np.asarray([group.exponent // n for n in group.factors])
    return (group.coord_table @ (c * weights)) % group.exponent


def character_value(group: Group, chi: CharacterIndex, g: Element) -> CharacterValue:
    exponents = character_exponents(group, chi)
    e = int(exponents[group.check(g)])
    order = group.exponent
    common = math.gcd(e, order)
    numerator, order = e // common, order // common
    return CharacterValue(
        numerator=numerator,
        order=order,
        value=complex(np.exp(2j * np.pi * numerator / order)),
    )


def character_sum_exact(group: Group, chi: CharacterIndex) -> int:
    """
    Sum of chi over G computed on exponents only.

    The exponents of a character are equidistributed over the subgroup of
    Z/L they generate, so the sum is N for the principal character and 0
    otherwise. The distribution is checked rather than assumed.
    """
    exponents = character_exponents(group, chi)
    counts = np.bincount(exponents, minlength=group.exponent)
    step = math.gcd(group.exponent, *[int(e) for e in np.flatnonzero(counts)])
    support = np.arange(0, group.exponent, step)
    if np.any(counts[support] != counts[0]) or counts.sum() != counts[support].sum():
        raise ElementRangeError(f"Character {chi} of {group} is not equidistributed")
    return group.order if len(support) == 1 else 0
