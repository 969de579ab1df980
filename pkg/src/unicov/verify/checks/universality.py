"""Universality of sumsets, products and iterated sums, and the U_n profile bounds."""

import math
from collections.abc import Iterator

import numpy as np

from unicov.constructions.families import subspace_union_universal
from unicov.core.enums.check import Relation
from unicov.dto.check import Comparison
from unicov.group.group import Group
from unicov.schemas.check_instance import CheckInstance
from unicov.schemas.tuple_spec import TupleSpec
from unicov.sets.higher import higher_diff_size
from unicov.sets.operations import complement, multiple_sumset, sumset
from unicov.sets.tuples import cartesian_product, gen_diff_size
from unicov.solver.universality import u_bar, u_n
from unicov.verify.compare import compare
from unicov.verify.context import CheckContext, cov, un, un_at_least
from unicov.verify.generators import (
    MEDIUM_GROUPS,
    SMALL_GROUPS,
    TINY_GROUPS,
    all_subsets,
    build,
    permute_coordinates,
    pick,
    random_subset,
    random_tuple_set,
)
from unicov.verify.registry import Check, register

PROFILE_GROUPS = ("z5", "z6", "z7", "z8", "z9", "z10", "z2^3", "z4xz2")
ARITY_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


def _sumset_pair(rng: np.random.Generator) -> CheckInstance:
    group = pick(rng, SMALL_GROUPS + MEDIUM_GROUPS)
    a = random_subset(rng, group, lo=0.15, hi=0.4)
    b = random_subset(rng, group, lo=0.15, hi=0.4)
    return build(group, {"A": a, "B": b})


@register
class SumsetUniversalityAdditive(Check):
    check_id = "V07"
    anchor = "un(A + B) >= un(A) + un(B) - 1"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        return _sumset_pair(rng)

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A", "B")
        a, b = ctx["A"], ctx["B"]
        target = un(a) + un(b) - 1
        lhs, source = un_at_least(sumset(a, b), target)
        ctx.measure("un_sum_source", source)
        return [compare("un(A+B) >= un(A) + un(B) - 1", lhs, target, Relation.GE)]


@register
class SumsetUniversalityProduct(Check):
    check_id = "V08"
    anchor = "un(A + B) >= un(A) un(B)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        if rng.random() < 0.125:
            n = int(rng.integers(4, 6))
            u = subspace_union_universal(n, 2)
            perm = [int(i) for i in rng.permutation(n)]
            return build(u.group, {"A": u, "B": permute_coordinates(u, perm)}, {"perm": perm})
        return _sumset_pair(rng)

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A", "B")
        a, b = ctx["A"], ctx["B"]
        target = un(a) * un(b)
        lhs, source = un_at_least(sumset(a, b), target)
        ctx.measure("un_sum_source", source)
        return [compare("un(A+B) >= un(A) un(B)", lhs, target, Relation.GE)]


@register
class ProfileProduct(Check):
    check_id = "V10"
    anchor = "U_nm(A + B) >= U_m(A) U_n(B)^m"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS[:8])
        n, m = ARITY_PAIRS[int(rng.integers(len(ARITY_PAIRS)))]
        a = random_subset(rng, group, lo=0.2, hi=0.7)
        b = random_subset(rng, group, lo=0.2, hi=0.7)
        return build(group, {"A": a, "B": b}, {"n": n, "m": m})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A", "B")
        a, b = ctx["A"], ctx["B"]
        n, m = int(ctx.param("n")), int(ctx.param("m"))
        return [
            compare(
                "U_nm(A+B) >= U_m(A) U_n(B)^m",
                u_n(sumset(a, b), n * m),
                u_n(a, m) * u_n(b, n) ** m,
                Relation.GE,
            )
        ]


@register
class ProfileSumsetSize(Check):
    check_id = "V11"
    anchor = "|A + B + S| >= (|S|/N)^(1/mn) Ubar_m(A)^(1/n) Ubar_n(B) N"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS[:8])
        n, m = ARITY_PAIRS[int(rng.integers(len(ARITY_PAIRS)))]
        sets = {name: random_subset(rng, group, lo=0.1, hi=0.5) for name in ("A", "B", "S")}
        return build(group, sets, {"n": n, "m": m})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A", "B", "S")
        a, b, s = ctx["A"], ctx["B"], ctx["S"]
        n, m = int(ctx.param("n")), int(ctx.param("m"))
        size = ctx.order
        bound = (len(s) / size) ** (1 / (m * n)) * u_bar(a, m) ** (1 / n) * u_bar(b, n) * size
        return [compare("|A+B+S| >= profile bound", len(sumset(sumset(a, b), s)), bound, Relation.GE)]


@register
class IteratedSumProfile(Check):
    check_id = "V12"
    anchor = "Ubar_(m^l)(lA) >= Ubar_m(A)^((m^l - 1)/(m^l - m^(l-1)))"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, PROFILE_GROUPS)
        m, l = ((2, 2), (2, 3), (3, 2))[int(rng.integers(3))]
        return build(group, {"A": random_subset(rng, group, lo=0.2, hi=0.6)}, {"m": m, "l": l})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        a = ctx["A"]
        m, l = int(ctx.param("m")), int(ctx.param("l"))
        arity = m**l
        exponent = (arity - 1) / (arity - m ** (l - 1))
        return [
            compare(
                "Ubar_{m^l}(lA) >= Ubar_m(A)^e",
                u_bar(multiple_sumset(a, l), arity),
                u_bar(a, m) ** exponent,
                Relation.GE,
            )
        ]


@register
class DiagonalUniversality(Check):
    check_id = "V13"
    anchor = "|U^(kn) - Delta_(k..k)(S)| >= |S| N^(nk - n) for k-universal U"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, TINY_GROUPS + ("z6",))
        n = int(rng.integers(1, 3))
        u = random_subset(rng, group, lo=0.4, hi=0.9, proper=True)
        s = random_tuple_set(rng, group, n, lo=0.1, hi=0.6)
        return build(group, {"U": u, "S": s}, {"n": n, "k_max": 2})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("U", "S")
        u, s = ctx["U"], ctx["S"]
        ctx.require(not u.is_full(), "U = G")
        n = int(ctx.param("n"))
        k = min(un(u), int(ctx.param("k_max", 2)))
        ctx.measure("k", k)
        lhs = gen_diff_size(u, TupleSpec(blocks=[k] * n), s)
        return [compare("|U^{nk} - Delta(S)| >= |S| N^{nk-n}", lhs, len(s) * ctx.order ** (n * k - n), Relation.GE)]


@register
class ProductUniversality(Check):
    check_id = "V26"
    anchor = "un(U_1 x ... x U_m) = min un(U_i)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, TINY_GROUPS + ("z6", "z7", "z8"))
        m = 3 if group.order <= 4 and rng.random() < 0.5 else 2
        sets = {f"U{i + 1}": random_subset(rng, group, lo=0.3, hi=0.9) for i in range(m)}
        return build(group, sets, {"m": m})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        m = int(ctx.param("m"))
        names = [f"U{i + 1}" for i in range(m)]
        ctx.nonempty(*names)
        factors = [ctx[name] for name in names]
        return [
            compare(
                "un(U_1 x ... x U_m) = min un(U_i)",
                un(cartesian_product(*factors)),
                min(un(u) for u in factors),
                Relation.EQ,
            )
        ]

    def exhaustive(self, group: Group) -> Iterator[CheckInstance]:
        for a in all_subsets(group):
            yield build(group, {"U1": a, "U2": a}, {"m": 2})


@register
class HigherDifferenceLowerBound(Check):
    check_id = "V27"
    anchor = "|U^m - Delta_m(S)| > N^m (1 - m/(k - m + 1) log(1/sigma)) for k-universal U"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS)
        u = random_subset(rng, group, lo=0.5, hi=0.9, proper=True)
        s = random_subset(rng, group, lo=0.3, hi=1.0)
        return build(group, {"U": u, "S": s}, {"m": int(rng.integers(1, 4))})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("U", "S")
        u, s = ctx["U"], ctx["S"]
        ctx.require(not u.is_full(), "U = G")
        m = int(ctx.param("m"))
        k = un(u)
        ctx.require(1 <= m <= k, f"Need 1 <= m <= un(U) = {k}, got m = {m}")
        size = ctx.order
        bound = size**m * (1 - m / (k - m + 1) * math.log(size / len(s)))
        relation = Relation.GE if s.is_full() else Relation.GT
        ctx.measure("k", k)
        return [compare("|U^m - Delta_m(S)| vs N^m(1 - m log(1/sigma)/(k-m+1))", higher_diff_size(u, m, s), bound, relation)]


@register
class IteratedComplementCover(Check):
    check_id = "V31"
    anchor = "cov((nA)^c) >= (cov(A^c) - 1)^n + 1"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS)
        a = random_subset(rng, group, lo=0.2, hi=0.6, proper=True)
        return build(group, {"A": a}, {"n": int(rng.integers(2, 4))})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        a = ctx["A"]
        ctx.require(not a.is_full(), "A = G")
        n = int(ctx.param("n"))
        lhs = cov(complement(multiple_sumset(a, n)))
        return [compare("cov((nA)^c) >= (cov(A^c)-1)^n + 1", lhs, (cov(complement(a)) - 1) ** n + 1, Relation.GE)]


@register
class UniversalityDensity(Check):
    check_id = "V33"
    anchor = "un(A) <= log N / log(1/delta) and |A|^k >= N^(k-1) for k = un(A)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, SMALL_GROUPS + MEDIUM_GROUPS)
        return build(group, {"A": random_subset(rng, group, lo=0.3, hi=0.95, proper=True)})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        a = ctx["A"]
        ctx.require(not a.is_full(), "A = G")
        size = ctx.order
        k = un(a)
        return [
            compare("un(A) <= log N / log(1/delta)", k, math.log(size) / math.log(size / len(a)), Relation.LE),
            compare("|A|^un(A) >= N^(un(A)-1)", len(a) ** k, size ** (k - 1), Relation.GE),
        ]

    def exhaustive(self, group: Group) -> Iterator[CheckInstance]:
        for a in all_subsets(group, proper=True):
            yield build(group, {"A": a})

