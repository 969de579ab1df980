"""
Exact and guarded comparisons.

Integer and Fraction operands compare exactly. As soon as one side is a
float the comparison is made in floating point with a guard band of
FLOAT_TOLERANCE in favour of the inequality.
"""

import math
from fractions import Fraction

from unicov.core.config import settings
from unicov.core.enums.check import Relation
from unicov.dto.check import Comparison

Number = int | Fraction | float


def _is_exact(x: Number) -> bool:
    return isinstance(x, int | Fraction) and not isinstance(x, bool)


def _holds(lhs: Number, rhs: Number, relation: Relation, tol: float) -> bool:
    match relation:
        case Relation.LE:
            return lhs <= rhs + tol
        case Relation.LT:
            return lhs < rhs + tol
        case Relation.GE:
            return lhs >= rhs - tol
        case Relation.GT:
            return lhs > rhs - tol
        case Relation.EQ:
            return lhs == rhs if tol == 0 else abs(lhs - rhs) <= tol
    raise ValueError(f"Unknown relation {relation}")


def _slack(lhs: Number, rhs: Number, relation: Relation, holds: bool) -> Number:
    if isinstance(lhs, float) and math.isinf(lhs) and math.isinf(rhs):
        if lhs == rhs:
            return 0.0
        return math.inf if holds else -math.inf
    match relation:
        case Relation.LE | Relation.LT:
            return rhs - lhs
        case Relation.GE | Relation.GT:
            return lhs - rhs
    return -abs(lhs - rhs)


def compare(label: str, lhs: Number, rhs: Number, relation: Relation) -> Comparison:
    exact = _is_exact(lhs) and _is_exact(rhs)
    if exact:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        tol = 0.0
    else:
        lhs, rhs = float(lhs), float(rhs)
        infinite = math.isinf(lhs) or math.isinf(rhs)
        tol = 0.0 if infinite else settings.FLOAT_TOLERANCE
    holds = _holds(lhs, rhs, relation, tol)
    return Comparison(
        label=label,
        lhs=lhs,
        rhs=rhs,
        relation=relation,
        holds=holds,
        slack=_slack(lhs, rhs, relation, holds),
        exact=exact,
    )


def tightest(comparisons: list[Comparison]) -> Comparison:
    """The first failing comparison, else the one with the least slack."""
    for c in comparisons:
        if not c.holds:
            return c
    return min(comparisons, key=lambda c: float(c.slack))
