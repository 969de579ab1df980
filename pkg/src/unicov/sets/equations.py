from collections.abc import Sequence

import numpy as np
from loguru import logger

from unicov.fourier.density import DensityFunction, convolve
from unicov.group.group import Element
from unicov.sets.exceptions import ArityError
from unicov.sets.group_set import GroupSet


def dilation_counts(a: GroupSet, lam: int) -> DensityFunction:
    """h(y) = #{a in A : lam * a = y}."""
    group = a.group
    images = group.scalar_table(lam)[a.elements]
    return DensityFunction.counts(group, np.bincount(images, minlength=group.order))


def solution_count(a: GroupSet, coeffs: Sequence[int], beta: Element) -> int:
    """Number of (x_1, ..., x_n) in A^n with sum alpha_j x_j = beta."""
    group = a.group
    if len(coeffs) < 2:
        raise ArityError(f"An equation needs at least two variables, got {len(coeffs)}")
    group.check(beta)
    non_units = [c for c in coeffs if not group.is_unit(c)]
    if non_units:
        logger.warning(f"Coefficients {non_units} are not coprime to |G| = {group.order}")
    if a.is_empty():
        return 0

    acc = dilation_counts(a, coeffs[0])
    for c in coeffs[1:]:
        acc = convolve(acc, dilation_counts(a, c))
    return int(acc.values[beta])


def is_solution_free(a: GroupSet, coeffs: Sequence[int], beta: Element = 0) -> bool:
    return solution_count(a, coeffs, beta) == 0
