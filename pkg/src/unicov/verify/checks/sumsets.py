"""Sumset sizes and the set identities linking sums, shift intersections and complements."""

from collections.abc import Iterator
from fractions import Fraction

import numpy as np

from unicov.core.enums.check import Relation
from unicov.dto.check import Comparison
from unicov.group.group import Group
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import (
    complement,
    difference_set,
    iterated_sumset,
    shift_intersection,
    sumset,
)
from unicov.verify.compare import compare
from unicov.verify.context import CheckContext
from unicov.verify.generators import SMALL_GROUPS, all_subsets, build, pick, random_sized, random_subset
from unicov.verify.registry import Check, register


def _symmetric_difference(s: GroupSet, t: GroupSet) -> GroupSet:
    return (s - t) | (t - s)


def _small_shifts(group: Group) -> GroupSet:
    return GroupSet.from_elements(group, [0, 1 % group.order])


@register
class PlunneckeBound(Check):
    check_id = "V01"
    anchor = "|nA - mA| <= (|A+A|/|A|)^(n+m) |A|"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS)
        a = random_subset(rng, group, lo=0.05, hi=0.4)
        n, m = int(rng.integers(1, 4)), int(rng.integers(0, 3))
        return build(group, {"A": a}, {"n": n, "m": m})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        a = ctx["A"]
        n, m = int(ctx.param("n")), int(ctx.param("m"))
        ctx.require(n >= 1 and m >= 0, f"Need n >= 1 and m >= 0, got n={n}, m={m}")
        doubling = Fraction(len(sumset(a, a)), len(a))
        ctx.measure("doubling", str(doubling))
        return [
            compare(
                "|nA - mA| <= K^(n+m) |A|",
                len(iterated_sumset(a, n, m)),
                doubling ** (n + m) * len(a),
                Relation.LE,
            )
        ]


@register
class ShiftIntersectionInclusion(Check):
    check_id = "V09"
    anchor = "A_X is contained in (A - B)_(B + X)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS)
        a = random_subset(rng, group, lo=0.3, hi=0.8)
        b = random_subset(rng, group, lo=0.1, hi=0.5)
        x = random_sized(rng, group, int(rng.integers(1, 4)))
        return build(group, {"A": a, "B": b, "X": x})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("B", "X")
        a, b, x = ctx["A"], ctx["B"], ctx["X"]
        inner = shift_intersection(a, x)
        outer = shift_intersection(difference_set(a, b), sumset(b, x))
        ctx.measure("size_A_X", len(inner))
        ctx.measure("size_D_BX", len(outer))
        return [compare("|A_X minus (A-B)_(B+X)| = 0", len(inner - outer), 0, Relation.EQ)]

    def exhaustive(self, group: Group) -> Iterator[CheckInstance]:
        x = _small_shifts(group)
        for a in all_subsets(group):
            yield build(group, {"A": a, "B": a, "X": x})


@register
class ComplementDuality(Check):
    check_id = "V36"
    anchor = "(A + X)^c = (A^c)_X and (A_X)^c = A^c + X"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS)
        a = random_subset(rng, group, lo=0.2, hi=0.9)
        x = random_sized(rng, group, int(rng.integers(1, 4)))
        return build(group, {"A": a, "X": x})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("X")
        a, x = ctx["A"], ctx["X"]
        omega = complement(a)
        return [
            compare(
                "|(A+X)^c xor (A^c)_X| = 0",
                len(_symmetric_difference(complement(sumset(a, x)), shift_intersection(omega, x))),
                0,
                Relation.EQ,
            ),
            compare(
                "|(A_X)^c xor (A^c + X)| = 0",
                len(_symmetric_difference(complement(shift_intersection(a, x)), sumset(omega, x))),
                0,
                Relation.EQ,
            ),
        ]

    def exhaustive(self, group: Group) -> Iterator[CheckInstance]:
        x = _small_shifts(group)
        for a in all_subsets(group, nonempty=False):
            yield build(group, {"A": a, "X": x})
