"""Seeded instance generators shared by the checks."""

from collections.abc import Iterator, Sequence
from typing import Final

import numpy as np

from unicov.group.group import Group, parse_group_spec, power_group
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.group_set import GroupSet

TINY_GROUPS: Final[tuple[str, ...]] = ("z2", "z3", "z4", "z5", "z2^2")
SMALL_GROUPS: Final[tuple[str, ...]] = ("z5", "z6", "z7", "z8", "z2^3", "z9", "z10", "z4xz2", "z12", "z6xz2")
MEDIUM_GROUPS: Final[tuple[str, ...]] = ("z12", "z15", "z16", "z2^4", "z4^2", "z18", "z20", "z24", "z6xz4", "z2^5", "z36")
SMALL_PRIMES: Final[tuple[int, ...]] = (11, 13, 17, 19, 23, 29, 31)


def pick(rng: np.random.Generator, pool: Sequence[str]) -> Group:
    return parse_group_spec(pool[int(rng.integers(len(pool)))])


def random_subset(
    rng: np.random.Generator,
    group: Group,
    density: float | None = None,
    *,
    lo: float = 0.2,
    hi: float = 0.8,
    proper: bool = False,
) -> GroupSet:
    """A nonempty random subset; the density is drawn from [lo, hi] unless given."""
    if density is None:
        density = float(rng.uniform(lo, hi))
    bits = rng.random(group.order) < density
    if not bits.any():
        bits[int(rng.integers(group.order))] = True
    if proper and bits.all():
        bits[int(rng.integers(group.order))] = False
    return GroupSet(group, bits)


def random_sized(rng: np.random.Generator, group: Group, size: int) -> GroupSet:
    return GroupSet.from_elements(group, rng.choice(group.order, size=size, replace=False))


def random_tuple_set(rng: np.random.Generator, base: Group, m: int, **kwargs: float) -> GroupSet:
    """A nonempty random subset of G^m."""
    return random_subset(rng, power_group(base, m), **kwargs)


def permute_coordinates(s: GroupSet, perm: Sequence[int]) -> GroupSet:
    """Image of S under the coordinate permutation (x_i) -> (x_perm[i])."""
    group = s.group
    coords = group.coord_table[:, list(perm)]
    return GroupSet(group, s.bits[group.ranks_of(coords)])


def build(
    group: Group,
    sets: dict[str, GroupSet],
    params: dict | None = None,
    *,
    base: Group | None = None,
) -> CheckInstance:
    """Pack sets into a descriptor; sets over powers of ``base`` record their power."""
    base = group if base is None else base
    powers = {name: s.group.power for name, s in sets.items() if s.group.power != 1}
    return CheckInstance(
        group=base.spec,
        sets={name: s.to_list() for name, s in sets.items()},
        powers=powers,
        params=params or {},
    )


def all_subsets(group: Group, *, nonempty: bool = True, proper: bool = False) -> Iterator[GroupSet]:
    """Every subset of G in mask order."""
    for mask in range(1 << group.order):
        if nonempty and mask == 0:
            continue
        if proper and mask == (1 << group.order) - 1:
            continue
        yield GroupSet.from_mask(group, mask)
