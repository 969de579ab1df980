"""Sets with no solution to alpha_1 x_1 + ... + alpha_n x_n = beta."""

from collections.abc import Sequence
from typing import Final

import numpy as np
from loguru import logger

from unicov.constructions.exceptions import FamilyParameterError
from unicov.group.group import Element, Group
from unicov.sets.equations import is_solution_free
from unicov.sets.group_set import GroupSet

EXHAUSTIVE_ORDER_CAP: Final[int] = 16


def _check_coefficients(group: Group, coeffs: Sequence[int]) -> None:
    if len(coeffs) < 2:
        raise FamilyParameterError(f"Need at least two coefficients, got {len(coeffs)}")
    bad = [c for c in coeffs if not group.is_unit(c)]
    if bad:
        raise FamilyParameterError(f"Coefficients {bad} are not units modulo {group.order}")


def solution_free_greedy(
    group: Group, coeffs: Sequence[int], beta: Element, seed: int
) -> GroupSet:
    """A maximal solution-free set grown in a seeded random order."""
    _check_coefficients(group, coeffs)
    order = np.random.default_rng(seed).permutation(group.order)
    members: list[int] = []
    for x in order:
        trial = GroupSet.from_elements(group, [*members, int(x)])
        if is_solution_free(trial, coeffs, beta):
            members.append(int(x))
    result = GroupSet.from_elements(group, members)
    logger.debug(f"Greedy solution-free set in {group}: {len(result)} elements")
    return result


def exhaustive_solution_free(
    group: Group, coeffs: Sequence[int], beta: Element = 0, *, limit: int | None = None
) -> list[GroupSet]:
    """
    Every nonempty solution-free set, in lexicographic order of element lists.

    Subsets of a solution-free set are solution-free, so the depth-first
    enumeration extends only sets that are still free.
    """
    _check_coefficients(group, coeffs)
    if group.order > EXHAUSTIVE_ORDER_CAP:
        raise FamilyParameterError(
            f"Exhaustive filtering is limited to |G| <= {EXHAUSTIVE_ORDER_CAP}, got {group.order}"
        )

    found: list[GroupSet] = []
    stack: list[tuple[int, ...]] = [(x,) for x in reversed(range(group.order))]
    while stack:
        members = stack.pop()
        candidate = GroupSet.from_elements(group, members)
        if not is_solution_free(candidate, coeffs, beta):
            continue
        found.append(candidate)
        if limit is not None and len(found) >= limit:
            break
        stack.extend((*members, y) for y in reversed(range(members[-1] + 1, group.order)))
    return found
