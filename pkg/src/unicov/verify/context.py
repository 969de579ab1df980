"""Decoded check inputs and the certified invariants checks are built from."""

import math
from typing import Any

from unicov.core.config import settings
from unicov.core.enums.cover import CoverStatus
from unicov.group.exceptions import GroupError
from unicov.group.group import Group, parse_group_spec, power_group
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.exceptions import SetError
from unicov.sets.group_set import GroupSet
from unicov.solver.cover import cov_exact
from unicov.solver.exceptions import IndeterminateCoverError
from unicov.solver.multiplicative import cov_mult
from unicov.solver.universality import un_exact, un_floor, un_value
from unicov.verify.exceptions import MalformedInstanceError, PremiseNotMetError

_MISSING = object()


class CheckContext:
    def __init__(self, instance: CheckInstance) -> None:
        self.instance = instance
        self.measurements: dict[str, Any] = {}
        try:
            self.group = parse_group_spec(instance.group)
            self.sets = {name: self._decode(name, ranks) for name, ranks in instance.sets.items()}
        except (GroupError, SetError) as e:
            raise MalformedInstanceError(f"Cannot decode instance: {e}") from e

    def _decode(self, name: str, ranks: list[int]) -> GroupSet:
        group: Group = power_group(self.group, self.instance.powers.get(name, 1))
        return GroupSet.from_elements(group, ranks)

    @property
    def order(self) -> int:
        return self.group.order

    def __getitem__(self, name: str) -> GroupSet:
        try:
            return self.sets[name]
        except KeyError:
            raise MalformedInstanceError(f"Instance has no set named {name!r}") from None

    def param(self, name: str, default: Any = _MISSING) -> Any:
        if name in self.instance.params:
            return self.instance.params[name]
        if default is _MISSING:
            raise MalformedInstanceError(f"Instance has no parameter {name!r}")
        return default

    def require(self, condition: bool, reason: str) -> None:
        if not condition:
            raise PremiseNotMetError(reason)

    def nonempty(self, *names: str) -> None:
        for name in names:
            self.require(not self[name].is_empty(), f"{name} is empty")

    def measure(self, key: str, value: Any) -> None:
        self.measurements[key] = value


def _certified(result: Any, what: str) -> int | float:
    if result.status is CoverStatus.INFEASIBLE:
        return math.inf
    if not result.optimal:
        raise IndeterminateCoverError(
            f"{what} only bracketed in [{result.lower_bound}, {result.upper_bound}]"
        )
    return int(result.value)


def cov(a: GroupSet, e: GroupSet | None = None) -> int | float:
    """Certified cov(A; E); inf when A is empty and E is not."""
    return _certified(cov_exact(a, e, node_budget=settings.CHECK_NODE_BUDGET), "cov")


def cov_times(a: GroupSet) -> int | float:
    return _certified(cov_mult(a, node_budget=settings.CHECK_NODE_BUDGET), "cov^x")


def _number(value: float) -> int | float:
    return value if math.isinf(value) else int(value)


def un(a: GroupSet) -> int | float:
    """Certified un(A); inf for A = G."""
    return _number(un_value(a, node_budget=settings.CHECK_NODE_BUDGET))


def un_at_least(a: GroupSet, target: int | float) -> tuple[int | float, str]:
    """
    A certified lower bound on un(A) for checking un(A) >= target.

    The volume bound is tried first, then the budgeted solver. The solver's
    bracket is good enough once its lower end reaches the target; otherwise
    only the exact value will do. The second item names which bound was used.
    """
    floor = un_floor(a)
    if floor >= target:
        return _number(floor), "volume"
    report = un_exact(a, node_budget=settings.CHECK_NODE_BUDGET)
    if report.optimal:
        return _number(report.value), "exact"
    lower = report.notes["un_lower"]
    if lower >= target:
        return int(lower), "bracket"
    raise IndeterminateCoverError(
        f"un(A) only bracketed from {lower}, below the target {target}"
    )
