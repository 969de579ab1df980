"""
Subsets of G^m stored as GroupSets over power groups.

A tuple (g_1, ..., g_m) has rank sum rank(g_i) N^(m-i), so tuple sets are
ordinary GroupSets and every set operation applies to them unchanged.
"""

from collections.abc import Sequence

import numpy as np

from unicov.core.config import settings
from unicov.group.group import Element, Group, power_group
from unicov.schemas.tuple_spec import TupleSpec
from unicov.sets.exceptions import ArityError, EnumerationCapError, GroupMismatchError
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import translate


def _base_of(*sets: GroupSet) -> Group:
    base = sets[0].group.base
    for s in sets[1:]:
        if s.group.base != base:
            raise GroupMismatchError(f"Tuple sets over {base} and {s.group.base}")
    return base


def cartesian_product(*sets: GroupSet) -> GroupSet:
    if not sets:
        raise ArityError("A Cartesian product needs at least one factor")
    base = _base_of(*sets)
    power = sum(s.group.power for s in sets)
    group = power_group(base, power, cap=settings.GROUP_ORDER_CAP)
    bits = sets[0].bits
    for s in sets[1:]:
        bits = np.logical_and.outer(bits, s.bits).reshape(-1)
    return GroupSet(group, bits)


def cartesian_power(a: GroupSet, m: int) -> GroupSet:
    if m < 1:
        raise ArityError(f"Cartesian power must be positive, got {m}")
    return cartesian_product(*([a] * m))


def diagonal(base: Group, spec: TupleSpec, c: Sequence[Element]) -> Element:
    """Rank in G^m of (c_1 repeated m_1 times, ..., c_n repeated m_n times)."""
    if len(c) != spec.n:
        raise ArityError(f"Expected {spec.n} components, got {len(c)}")
    group = power_group(base, spec.total)
    parts = [ci for ci, m in zip(c, spec.blocks, strict=True) for _ in range(m)]
    return group.join(parts)


def diagonal_set(c: GroupSet, spec: TupleSpec) -> GroupSet:
    """Delta_{m_1..m_n;n}(C) for C a subset of G^n."""
    if c.group.power != spec.n:
        raise ArityError(f"Diagonal of {spec.blocks} needs tuples of length {spec.n}")
    base = c.group.base
    group = power_group(base, spec.total)
    ranks = [diagonal(base, spec, c.group.split(int(t))) for t in c.elements]
    return GroupSet.from_elements(group, ranks)


def interleave(a: GroupSet, spec: TupleSpec, b: GroupSet) -> GroupSet:
    """A x_{m_1..m_n} B = {(a_1, b_1, ..., a_n, b_n)} with |a_i| = m_i."""
    base = _base_of(a, b)
    if a.group.power != spec.total or b.group.power != spec.n:
        raise ArityError(
            f"Interleaving needs A in G^{spec.total} and B in G^{spec.n}, got "
            f"G^{a.group.power} and G^{b.group.power}"
        )
    n_base = base.order
    cube = np.logical_and.outer(a.bits, b.bits).reshape((n_base,) * (spec.total + spec.n))

    order: list[int] = []
    start = 0
    for i, m in enumerate(spec.blocks):
        order.extend(range(start, start + m))
        order.append(spec.total + i)
        start += m
    group = power_group(base, spec.total + spec.n)
    return GroupSet(group, np.transpose(cube, order).reshape(-1))


def tuple_difference(t: GroupSet, spec: TupleSpec, c: GroupSet, sign: int = -1) -> GroupSet:
    """T - Delta_{m_1..m_n;n}(C) for sign -1, T + Delta(C) for sign +1."""
    if sign not in (-1, 1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if t.group.power != spec.total or c.group.power != spec.n:
        raise ArityError(
            f"Block shape {spec.blocks} does not match G^{t.group.power} and G^{c.group.power}"
        )
    _base_of(t, c)
    work = len(c) * t.group.order
    if work > settings.ENUMERATION_CAP:
        raise EnumerationCapError(
            f"Tuple difference needs {work} cell updates, cap is {settings.ENUMERATION_CAP}"
        )

    group = t.group
    out = np.zeros(group.order, dtype=bool)
    for tup in c.elements:
        shift = diagonal(group.base, spec, c.group.split(int(tup)))
        if sign < 0:
            shift = int(group.neg_table[shift])
        out |= translate(t, shift).bits
    return GroupSet(group, out)


def _check_enumeration(base: Group, m: int) -> None:
    if base.order**m > settings.ENUMERATION_CAP:
        raise EnumerationCapError(
            f"|G|^{m} = {base.order**m} exceeds the enumeration cap {settings.ENUMERATION_CAP}"
        )


def gen_diff_size(a: GroupSet, spec: TupleSpec, b: GroupSet) -> int:
    """|A^m - Delta_{m_1..m_n;n}(B)| by direct enumeration over G^m."""
    _check_enumeration(a.group, spec.total)
    return len(tuple_difference(cartesian_power(a, spec.total), spec, b))


def gen_product_diff_size(a: GroupSet, b: GroupSet, c: GroupSet, spec: TupleSpec) -> int:
    """|A x_{m_1..m_n} B - Delta_{m_1+1..m_n+1;n}(C)|."""
    _check_enumeration(a.group.base, spec.total + spec.n)
    return len(tuple_difference(interleave(a, spec, b), spec.widened(), c))
