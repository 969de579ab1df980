"""
Higher difference sets A_1 x ... x A_n - Delta_n(S) counted without
materializing G^n.

A tuple (x_1, ..., x_n) belongs to the set iff S meets every A_i - x_i, so
the count only depends on the intersection profiles
T = S & (A_1 - x_1) & ... & (A_i - x_i). The dynamic program keeps each
distinct nonempty profile once, with the number of prefixes reaching it.
"""

import itertools
from collections.abc import Sequence

import numpy as np
from loguru import logger

from unicov.core.config import settings
from unicov.group.group import Element
from unicov.sets.exceptions import ArityError, EnumerationCapError, ProfileCapError
from unicov.sets.group_set import GroupSet, same_group
from unicov.sets.operations import translate

COUNT_LIMIT = 2**62


def shift_matrix(a: GroupSet) -> np.ndarray:
    """Row x is the bit-vector of A - x."""
    group = a.group
    return np.stack([translate(a, int(group.neg_table[x])).bits for x in range(group.order)])


def higher_diff_membership(
    sets: Sequence[GroupSet], s: GroupSet, x: Sequence[Element]
) -> bool:
    """Whether x lies in A_1 x ... x A_n - Delta_n(S)."""
    if len(sets) != len(x):
        raise ArityError(f"Got {len(sets)} sets but a tuple of length {len(x)}")
    group = same_group(s, *sets)
    common = s.bits.copy()
    for a, xi in zip(sets, x, strict=True):
        common &= translate(a, int(group.neg_table[group.check(int(xi))])).bits
        if not common.any():
            return False
    return True


def _expand(
    states: np.ndarray, counts: np.ndarray, matrix: np.ndarray, batch_cells: int
) -> tuple[np.ndarray, np.ndarray]:
    n = matrix.shape[0]
    per_state = n * n
    step = max(1, batch_cells // per_state)

    packed_parts: list[np.ndarray] = []
    count_parts: list[np.ndarray] = []
    for lo in range(0, len(states), step):
        block = states[lo : lo + step, None, :] & matrix[None, :, :]
        block = block.reshape(-1, n)
        mult = np.repeat(counts[lo : lo + step], n)
        alive = block.any(axis=1)
        if not alive.any():
            continue
        packed = np.packbits(block[alive], axis=1)
        uniq, inverse = np.unique(packed, axis=0, return_inverse=True)
        merged = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(merged, inverse.reshape(-1), mult[alive])
        packed_parts.append(uniq)
        count_parts.append(merged)

    if not packed_parts:
        return np.zeros((0, n), dtype=bool), np.zeros(0, dtype=np.int64)

    packed = np.concatenate(packed_parts)
    uniq, inverse = np.unique(packed, axis=0, return_inverse=True)
    merged = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(merged, inverse.reshape(-1), np.concatenate(count_parts))
    return np.unpackbits(uniq, axis=1, count=n).astype(bool), merged


def product_diff_size(
    sets: Sequence[GroupSet], s: GroupSet, *, cap: int | None = None
) -> int:
    """|A_1 x ... x A_n - Delta_n(S)| by intersection-profile dynamic programming."""
    if not sets:
        raise ArityError("At least one factor set is required")
    group = same_group(s, *sets)
    cap = settings.PROFILE_CAP if cap is None else cap
    if group.order ** len(sets) >= COUNT_LIMIT:
        raise EnumerationCapError(f"|G|^{len(sets)} overflows the profile counters")
    if s.is_empty():
        return 0

    states = s.bits[None, :].copy()
    counts = np.ones(1, dtype=np.int64)
    for i, a in enumerate(sets[:-1]):
        states, counts = _expand(states, counts, shift_matrix(a), settings.PROFILE_BATCH_CELLS)
        logger.debug(f"Profile step {i + 1}/{len(sets)}: {len(states)} distinct profiles")
        if len(states) > cap:
            raise ProfileCapError(f"{len(states)} distinct profiles exceed the cap {cap}")
        if len(states) == 0:
            return 0

    # The last coordinate only needs to know how many x keep T & (A - x) nonempty.
    last = shift_matrix(sets[-1]).astype(np.int32)
    hits = (states.astype(np.int32) @ last.T) > 0
    return int((counts * hits.sum(axis=1)).sum())


def higher_diff_size(a: GroupSet, n: int, s: GroupSet | None = None, *, cap: int | None = None) -> int:
    """|A^n - Delta_n(S)|, with S = G by default."""
    if n < 1:
        raise ArityError(f"Arity must be positive, got {n}")
    s = GroupSet.full(a.group) if s is None else s
    return product_diff_size([a] * n, s, cap=cap)


def product_diff_size_bruteforce(sets: Sequence[GroupSet], s: GroupSet) -> int:
    """Direct enumeration of G^n; the oracle for ``product_diff_size``."""
    group = same_group(s, *sets)
    total = group.order ** len(sets)
    if total > settings.ENUMERATION_CAP:
        raise EnumerationCapError(
            f"|G|^{len(sets)} = {total} exceeds the enumeration cap {settings.ENUMERATION_CAP}"
        )
    rows = [[m.to_mask() for m in _shifted(a)] for a in sets]
    s_mask = s.to_mask()
    count = 0
    for combo in itertools.product(*rows):
        common = s_mask
        for mask in combo:
            common &= mask
            if not common:
                break
        else:
            count += 1
    return count


def _shifted(a: GroupSet) -> list[GroupSet]:
    group = a.group
    return [translate(a, int(group.neg_table[x])) for x in range(group.order)]
