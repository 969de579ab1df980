"""
Additive and multiplicative covering numbers of the sets derived from a pair
(A, B) in F_p, laid out as the sum-product table with the predicted growth
class of each cell next to the measured value.

Only two cells are theorems at every scale and are asserted: cov(A - A) <=
p/|A| and cov(A + B) <= (p/|A|) log(p/|B|) + 1. Everything else is reported.
"""

import math
from collections.abc import Callable, Sequence
from typing import Final

import numpy as np
import pandas as pd
from loguru import logger
from sympy import isprime

from unicov.constructions.families import interval_middle_third, quadratic_residues, random_set
from unicov.core.config import settings
from unicov.core.enums.cover import CoverStatus
from unicov.dto.cover import CoverWitness
from unicov.dto.table import Operation, TableReport, TableRow
from unicov.group.group import make_group
from unicov.sets.group_set import GroupSet
from unicov.sets.multiplicative import inverse_set, product_set
from unicov.sets.operations import complement, difference_set, sumset
from unicov.solver.cover import cov_exact
from unicov.solver.exceptions import EmptySetError
from unicov.solver.multiplicative import cov_mult
from unicov.verify.exceptions import TableParameterError

FAMILIES: Final[tuple[str, ...]] = ("random", "qr", "interval")

# (additive, multiplicative) growth class per row; L = log p.
PREDICTED: Final[dict[str, tuple[str, str]]] = {
    "A-A": ("O(1)", "O(1)"),
    "(A-A)^c": ("∀_O(1)", "Ω(L)"),
    "A+B": ("O(1)", "∀"),
    "(A+B)^c": ("∀_O(1)", "∀"),
    "AB": ("?_Ω(L)", "O(1)"),
    "(AB)^c": ("Ω(L)", "∀_O(1)"),
    "(A+B)^-1": ("?_Ω(L)", "∀"),
    "((A+B)^-1)^c": ("Ω(L)", "∀"),
}

CSV_COLUMNS: Final[list[str]] = [
    "p",
    "family",
    "row-label",
    "operation",
    "value",
    "optimal",
    "predicted_class",
    "size",
    "bound",
    "holds",
]


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise TableParameterError(f"Table moduli must be prime, got {p}")
    if p > settings.TABLE_PRIME_CAP:
        raise TableParameterError(f"p = {p} exceeds the table cap {settings.TABLE_PRIME_CAP}")


def family_pair(family: str, p: int, seed: int, density: float = 0.5) -> tuple[GroupSet, GroupSet]:
    match family:
        case "random":
            group = make_group([p])
            seed_a, seed_b = (int(s) for s in np.random.default_rng([seed, p]).integers(2**31, size=2))
            return random_set(group, density, seed_a), random_set(group, density, seed_b)
        case "qr":
            residues = quadratic_residues(p)
            return residues, residues
        case "interval":
            interval = interval_middle_third(p)
            return interval, interval
    raise TableParameterError(f"Unknown table family {family!r}; expected one of {', '.join(FAMILIES)}")


def row_sets(a: GroupSet, b: GroupSet) -> dict[str, GroupSet]:
    s = sumset(a, b)
    d = difference_set(a, a)
    prod = product_set(a, b)
    inv = inverse_set(s)
    return {
        "A-A": d,
        "(A-A)^c": complement(d),
        "A+B": s,
        "(A+B)^c": complement(s),
        "AB": prod,
        "(AB)^c": complement(prod),
        "(A+B)^-1": inv,
        "((A+B)^-1)^c": complement(inv),
    }


def _cover(solve: Callable[[], CoverWitness]) -> CoverWitness | None:
    try:
        result = solve()
    except EmptySetError:
        return None
    return None if result.status is CoverStatus.INFEASIBLE else result


def _holds(result: CoverWitness | None, bound: float) -> bool | None:
    if result is None:
        return False
    if result.value <= bound + settings.FLOAT_TOLERANCE:
        return True
    if result.lower_bound > bound + settings.FLOAT_TOLERANCE:
        return False
    return None


def _asserted_bound(label: str, op: Operation, a: GroupSet, b: GroupSet) -> float | None:
    p = a.group.order
    if op != "+":
        return None
    if label == "A-A":
        return p / len(a)
    if label == "A+B":
        return p / len(a) * math.log(p / len(b)) + 1
    return None


def table_rows(
    p: int, family: str, a: GroupSet, b: GroupSet, *, node_budget: int | None = None
) -> list[TableRow]:
    budget = settings.TABLE_NODE_BUDGET if node_budget is None else node_budget
    rows = []
    for label, s in row_sets(a, b).items():
        additive, multiplicative = PREDICTED[label]
        cells: list[tuple[Operation, str, CoverWitness | None]] = [
            ("+", additive, _cover(lambda s=s: cov_exact(s, node_budget=budget))),
            ("×", multiplicative, _cover(lambda s=s: cov_mult(s, node_budget=budget))),
        ]
        for op, predicted, result in cells:
            bound = _asserted_bound(label, op, a, b)
            row = TableRow(
                p=p,
                family=family,
                row_label=label,
                operation=op,
                value=None if result is None else result.value,
                optimal=result is not None and result.optimal,
                predicted_class=predicted,
                size=len(s),
                bound=bound,
                holds=None if bound is None else _holds(result, bound),
            )
            if row.holds is False:
                logger.error(f"Table cell {label} {op} at p={p} ({family}) = {row.value} exceeds {bound:.4f}")
            rows.append(row)
    return rows


def table_experiment(
    primes: Sequence[int],
    families: Sequence[str] = FAMILIES,
    seed: int = 0,
    *,
    density: float = 0.5,
    node_budget: int | None = None,
) -> TableReport:
    for p in primes:
        _check_prime(p)
    report = TableReport(
        primes=list(primes), families=list(families), seed=seed, tool_version=settings.TOOL_VERSION
    )
    for p in primes:
        for family in families:
            a, b = family_pair(family, p, seed, density)
            if a.is_empty() or b.is_empty():
                logger.warning(f"Family {family} is empty at p={p}; no rows")
                continue
            report.rows.extend(table_rows(p, family, a, b, node_budget=node_budget))
        logger.info(f"Table rows for p={p} done")
    return report


def to_frame(report: TableReport) -> pd.DataFrame:
    frame = pd.DataFrame([row.model_dump() for row in report.rows])
    if frame.empty:
        return pd.DataFrame(columns=CSV_COLUMNS)
    return frame.rename(columns={"row_label": "row-label"})[CSV_COLUMNS]
