from typing import NamedTuple

import numpy as np
from loguru import logger

from unicov.fourier.density import DensityFunction, convolve
from unicov.group.group import Element, Group
from unicov.sets.exceptions import EmptyShiftError, SetError
from unicov.sets.group_set import GroupSet, same_group


class Dilation(NamedTuple):
    image: GroupSet
    unit: bool


def _roll(group: Group, bits: np.ndarray, x: Element, sign: int = 1) -> np.ndarray:
    shift = tuple(int(c) for c in sign * group.coord_table[x])
    axes = tuple(range(len(group.factors)))
    return np.roll(bits.reshape(group.shape), shift, axis=axes).reshape(-1)


def translate(a: GroupSet, x: Element) -> GroupSet:
    group = a.group
    return GroupSet(group, _roll(group, a.bits, group.check(x)))


def negate(a: GroupSet) -> GroupSet:
    group = a.group
    bits = np.zeros(group.order, dtype=bool)
    bits[group.neg_table[a.elements]] = True
    return GroupSet(group, bits)


def complement(a: GroupSet) -> GroupSet:
    return GroupSet(a.group, ~a.bits)


def dilate(lam: int, a: GroupSet) -> Dilation:
    group = a.group
    bits = np.zeros(group.order, dtype=bool)
    bits[group.scalar_table(lam)[a.elements]] = True
    unit = group.is_unit(lam)
    if not unit:
        logger.debug(f"Dilation by {lam} is not injective on {group}")
    return Dilation(image=GroupSet(group, bits), unit=unit)


def _union_of_translates(a: GroupSet, shifts: np.ndarray, sign: int) -> np.ndarray:
    group = a.group
    out = np.zeros(group.order, dtype=bool)
    for x in shifts:
        out |= _roll(group, a.bits, int(x), sign)
    return out


def sumset(a: GroupSet, b: GroupSet) -> GroupSet:
    group = same_group(a, b)
    if len(b) > len(a):
        a, b = b, a
    return GroupSet(group, _union_of_translates(a, b.elements, 1))


def difference_set(a: GroupSet, b: GroupSet) -> GroupSet:
    same_group(a, b)
    return sumset(a, negate(b))


def shift_intersection(a: GroupSet, x: GroupSet) -> GroupSet:
    """A_X, the intersection of A + x over x in X."""
    group = same_group(a, x)
    if x.is_empty():
        raise EmptyShiftError("A_X is undefined for an empty shift set X")
    out = np.ones(group.order, dtype=bool)
    for shift in x.elements:
        out &= _roll(group, a.bits, int(shift))
    return GroupSet(group, out)


def representation_count(a: GroupSet, b: GroupSet) -> DensityFunction:
    """r(x) = #{(a, b) : a + b = x}, as the exact convolution of indicators."""
    group = same_group(a, b)
    return convolve(
        DensityFunction.indicator(group, a.bits),
        DensityFunction.indicator(group, b.bits),
    )


def popular_sumset(a: GroupSet, b: GroupSet, eps: float) -> GroupSet:
    if not 0 < eps < 1:
        raise SetError(f"Popularity threshold must lie in (0, 1), got {eps}")
    counts = representation_count(a, b).values
    return GroupSet(a.group, counts >= eps * a.group.order)


def multiple_sumset(a: GroupSet, n: int) -> GroupSet:
    """nA; 0A is {0}."""
    if n < 0:
        raise SetError(f"Sumset multiplicity must be nonnegative, got {n}")
    out = GroupSet.from_elements(a.group, [0])
    for _ in range(n):
        out = sumset(out, a)
    return out


def iterated_sumset(a: GroupSet, n: int, m: int) -> GroupSet:
    """nA - mA."""
    return difference_set(multiple_sumset(a, n), multiple_sumset(a, m))
