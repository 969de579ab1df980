"""
Universality un(A) and the proportions U_n(A).

A is k-universal when every k-tuple has a common translate inside A, i.e.
A_{-Z} is nonempty for every k-set Z. Equivalently, A^c needs more than k
translates to cover G, which gives the production path un(A) = cov(A^c) - 1.
"""

import itertools
import math
from collections.abc import Iterable
from fractions import Fraction

from loguru import logger

from unicov.core.config import settings
from unicov.core.enums.cover import CoverStatus
from unicov.dto.cover import UniversalityReport
from unicov.sets.group_set import GroupSet
from unicov.sets.higher import higher_diff_size
from unicov.sets.operations import complement, negate, shift_intersection
from unicov.solver.cover import cov_exact
from unicov.solver.exceptions import EmptySetError, IndeterminateCoverError, OracleCapError


def u_n(a: GroupSet, n: int) -> Fraction:
    """U_n(A) = |A^n - Delta_n(G)| / N^n."""
    if a.is_empty():
        raise EmptySetError("U_n is undefined for the empty set")
    return Fraction(higher_diff_size(a, n), a.group.order**n)


def u_bar(a: GroupSet, n: int) -> float:
    return float(u_n(a, n)) ** (1 / n)


def un_exact(
    a: GroupSet, *, profile: Iterable[int] = (), node_budget: int | None = None
) -> UniversalityReport:
    if a.is_empty():
        raise EmptySetError("un is undefined for the empty set")
    profile = sorted(set(profile))
    u_profile = {n: u_n(a, n) for n in profile}
    u_bars = {n: float(u) ** (1 / n) for n, u in u_profile.items()}

    if a.is_full():
        return UniversalityReport(un="infinite", u_profile=u_profile, u_bar=u_bars)

    cover = cov_exact(complement(a), node_budget=node_budget)
    optimal = cover.status is CoverStatus.OPTIMAL
    if not optimal:
        logger.warning(f"un(A) only bracketed: cover of A^c in [{cover.lower_bound}, {cover.upper_bound}]")
    return UniversalityReport(
        un=int(cover.value) - 1,
        optimal=optimal,
        witnessing_failure=cover.witness.to_list() if cover.witness is not None else None,
        u_profile=u_profile,
        u_bar=u_bars,
        cover=cover,
        notes={} if optimal else {"un_lower": cover.lower_bound - 1},
    )


def un_floor(a: GroupSet) -> float:
    """Volume bound un(A) >= ceil(N/|A^c|) - 1, inf for A = G."""
    if a.is_empty():
        raise EmptySetError("un is undefined for the empty set")
    if a.is_full():
        return math.inf
    return float(-(-a.order // (a.order - len(a))) - 1)


def un_value(a: GroupSet, *, node_budget: int | None = None) -> float:
    """un(A) as a number, inf for A = G."""
    report = un_exact(a, node_budget=node_budget)
    if not report.optimal:
        raise IndeterminateCoverError("un(A) was not certified within the node budget")
    return report.value


def is_universal(a: GroupSet, k: int, *, node_budget: int | None = None) -> bool:
    return un_value(a, node_budget=node_budget) >= k


def un_bruteforce(a: GroupSet, *, work_cap: int | None = None) -> float:
    """
    un(A) by direct search over translate sets Z containing 0.

    A fails to be k-universal iff some Z with |Z| = k has A_{-Z} empty; by
    translation invariance Z may be taken to contain 0.
    """
    if a.is_empty():
        raise EmptySetError("un is undefined for the empty set")
    if a.is_full():
        return math.inf

    work_cap = settings.ORACLE_WORK_CAP if work_cap is None else work_cap
    group = a.group
    others = range(1, group.order)
    work = 0
    for k in range(1, group.order + 1):
        for rest in itertools.combinations(others, k - 1):
            work += 1
            if work > work_cap:
                raise OracleCapError(f"Brute-force un exceeded {work_cap} translate sets")
            z = GroupSet.from_elements(group, (0, *rest))
            if shift_intersection(a, negate(z)).is_empty():
                return float(k - 1)
    return math.inf
