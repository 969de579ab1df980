"""
Multiplicative covering numbers over F_p^*.

F_p^* is cyclic of order p - 1, so the discrete logarithm turns cov^x and
un^x into the additive invariants of the image inside Z/(p-1). The element
0 has no logarithm and is dropped from both the covering set and the target.
"""

from typing import Any

from loguru import logger

from unicov.dto.cover import CoverWitness, UniversalityReport
from unicov.group.group import make_group
from unicov.sets.group_set import GroupSet, same_group
from unicov.sets.multiplicative import prime_modulus
from unicov.solver.cover import cov_exact
from unicov.solver.exceptions import EmptySetError
from unicov.solver.universality import un_exact
from unicov.utils.number_theory import dlog_table, exp_table


def log_image(a: GroupSet) -> GroupSet:
    """Image of A minus 0 under the discrete logarithm, inside Z/(p-1)."""
    p = prime_modulus(a.group)
    _, table = dlog_table(p)
    nonzero = a.elements[a.elements != 0]
    return GroupSet.from_elements(make_group([p - 1]), table[nonzero])


def exp_image(x: GroupSet, p: int) -> GroupSet:
    """Multipliers g^x in Z/p for a set of exponents."""
    return GroupSet.from_elements(make_group([p]), exp_table(p)[x.elements])


def _metadata(a: GroupSet) -> dict[str, Any]:
    p = a.group.order
    g, _ = dlog_table(p)
    return {"prime": p, "primitive_root": g, "dropped_zero": 0 in a}


def cov_mult(a: GroupSet, e: GroupSet | None = None, *, node_budget: int | None = None) -> CoverWitness:
    """cov^x(A; E): fewest multipliers t with E minus 0 inside the union of t A."""
    p = prime_modulus(a.group)
    image = log_image(a)
    if image.is_empty():
        raise EmptySetError("A has no nonzero elements")
    target = None
    if e is not None:
        same_group(a, e)
        target = log_image(e)

    result = cov_exact(image, target, node_budget=node_budget)
    notes = _metadata(a) | result.notes
    if notes["dropped_zero"]:
        logger.debug(f"0 dropped from a multiplicative cover in F_{p}")
    witness = exp_image(result.witness, p) if result.witness is not None else None
    return result.model_copy(update={"witness": witness, "notes": notes})


def un_mult(a: GroupSet, *, node_budget: int | None = None) -> UniversalityReport:
    p = prime_modulus(a.group)
    image = log_image(a)
    if image.is_empty():
        raise EmptySetError("A has no nonzero elements")
    report = un_exact(image, node_budget=node_budget)
    failure = None
    if report.witnessing_failure is not None:
        failure = exp_image(GroupSet.from_elements(image.group, report.witnessing_failure), p).to_list()
    return report.model_copy(
        update={"witnessing_failure": failure, "notes": _metadata(a) | report.notes}
    )
