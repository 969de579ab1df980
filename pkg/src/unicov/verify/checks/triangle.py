"""
Ruzsa-type triangle inequalities for tuple sets.

All sets here live in small powers G^m of tiny groups, so every size is an
exact enumeration over the power group.
"""

from collections.abc import Iterator
from itertools import product

import numpy as np

from unicov.core.enums.check import Relation
from unicov.dto.check import Comparison
from unicov.fourier.density import DensityFunction, correlate
from unicov.group.group import Group
from unicov.schemas.check_instance import CheckInstance
from unicov.schemas.tuple_spec import TupleSpec
from unicov.sets.group_set import GroupSet
from unicov.sets.higher import product_diff_size
from unicov.sets.operations import difference_set, sumset, translate
from unicov.sets.tuples import cartesian_product, gen_diff_size, gen_product_diff_size, tuple_difference
from unicov.verify.compare import compare
from unicov.verify.context import CheckContext
from unicov.verify.generators import TINY_GROUPS, all_subsets, build, pick, random_subset, random_tuple_set
from unicov.verify.registry import Check, register


def _blocks(rng: np.random.Generator, n: int, total_cap: int) -> list[int]:
    while True:
        blocks = [int(b) for b in rng.integers(1, 3, size=n)]
        if sum(blocks) <= total_cap:
            return blocks


@register
class DiagonalTriangle(Check):
    check_id = "V23"
    anchor = "|W||X| |Y - Delta(Z)| <= |W x Y x Z - Delta(X)| and its symmetric forms"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, TINY_GROUPS)
        k1, k2 = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        k = int(rng.integers(2, 4))
        sets = {
            "W": random_tuple_set(rng, group, k1, lo=0.2, hi=0.7),
            "Y": random_tuple_set(rng, group, k2, lo=0.2, hi=0.7),
            "X": random_subset(rng, group, lo=0.2, hi=0.7),
            "Z": random_subset(rng, group, lo=0.2, hi=0.7),
        }
        sets |= {f"A{i + 1}": random_subset(rng, group, lo=0.2, hi=0.8) for i in range(k)}
        return build(group, sets, {"k1": k1, "k2": k2, "k": k})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        k = int(ctx.param("k"))
        factor_names = [f"A{i + 1}" for i in range(k)]
        ctx.nonempty("W", "X", "Y", "Z", *factor_names)
        w, x, y, z = ctx["W"], ctx["X"], ctx["Y"], ctx["Z"]
        k1, k2 = w.group.power, y.group.power
        factors = [ctx[name] for name in factor_names]

        lhs = len(w) * len(x) * len(tuple_difference(y, TupleSpec(blocks=[k2]), z))
        rhs = len(tuple_difference(cartesian_product(w, y, z), TupleSpec(blocks=[k1 + k2 + 1]), x))
        pair_spec = TupleSpec(blocks=[k1 + 1])
        swapped_x = len(tuple_difference(cartesian_product(w, z), pair_spec, x))
        swapped_z = len(tuple_difference(cartesian_product(w, x), pair_spec, z))
        full = GroupSet.full(ctx.group)
        return [
            compare("|W||X||Y - Delta(Z)| <= |W x Y x Z - Delta(X)|", lhs, rhs, Relation.LE),
            compare("|W x Z - Delta(X)| = |W x X - Delta(Z)|", swapped_x, swapped_z, Relation.EQ),
            compare(
                "|A_1 x ... x A_k - Delta(G)| = N |A_1 x ... x A_{k-1} - Delta(A_k)|",
                product_diff_size(factors, full),
                ctx.order * product_diff_size(factors[:-1], factors[-1]),
                Relation.EQ,
            ),
        ]

    def exhaustive(self, group: Group) -> Iterator[CheckInstance]:
        for a in all_subsets(group):
            shifted = translate(a, 1 % group.order)
            yield build(
                group,
                {"W": a, "X": a, "Y": a, "Z": shifted, "A1": a, "A2": shifted},
                {"k1": 1, "k2": 1, "k": 2},
            )


@register
class InterleavedTriangle(Check):
    check_id = "V24"
    anchor = "|C| |A -+ Delta(B)| <= |A x B - Delta(C)| and |C| |A -+ Delta(B)| <= |A -+ Delta(C)| |B -+ C|"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, TINY_GROUPS)
        n = int(rng.integers(1, 3))
        blocks = _blocks(rng, n, 3)
        sets = {
            "A": random_tuple_set(rng, group, sum(blocks), lo=0.1, hi=0.5),
            "B": random_tuple_set(rng, group, n, lo=0.2, hi=0.7),
            "C": random_tuple_set(rng, group, n, lo=0.2, hi=0.7),
        }
        return build(group, sets, {"blocks": blocks})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A", "B", "C")
        a, b, c = ctx["A"], ctx["B"], ctx["C"]
        spec = TupleSpec(blocks=ctx.param("blocks"))
        ctx.require(
            a.group.power == spec.total and b.group.power == spec.n == c.group.power,
            f"Set arities do not match blocks {spec.blocks}",
        )
        minus_b = len(tuple_difference(a, spec, b))
        plus_b = len(tuple_difference(a, spec, b, sign=1))
        interleaved = gen_product_diff_size(a, b, c, spec)
        return [
            compare("|C||A - Delta(B)| <= |A x B - Delta(C)|", len(c) * minus_b, interleaved, Relation.LE),
            compare(
                "|A x B - Delta(C)| = |A x C - Delta(B)|",
                interleaved,
                gen_product_diff_size(a, c, b, spec),
                Relation.EQ,
            ),
            compare(
                "|C||A - Delta(B)| <= |A - Delta(C)||B - C|",
                len(c) * minus_b,
                len(tuple_difference(a, spec, c)) * len(difference_set(b, c)),
                Relation.LE,
            ),
            compare(
                "|C||A + Delta(B)| <= |A + Delta(C)||B + C|",
                len(c) * plus_b,
                len(tuple_difference(a, spec, c, sign=1)) * len(sumset(b, c)),
                Relation.LE,
            ),
        ]


@register
class EnergyTriangle(Check):
    check_id = "V25"
    anchor = "|Q|^(2m) |B|^2 <= |Q^m - Delta(B)| sum_(b, b') prod_i (Q o Q)(b_i - b'_i)^(m_i)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, TINY_GROUPS)
        n = int(rng.integers(1, 3))
        blocks = _blocks(rng, n, 3)
        sets = {
            "Q": random_subset(rng, group, lo=0.3, hi=0.8),
            "B": random_tuple_set(rng, group, n, lo=0.2, hi=0.7),
        }
        return build(group, sets, {"blocks": blocks})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("Q", "B")
        q, b = ctx["Q"], ctx["B"]
        spec = TupleSpec(blocks=ctx.param("blocks"))
        ctx.require(b.group.power == spec.n, f"B must live in G^{spec.n}")
        indicator = DensityFunction.indicator(q.group, q.bits)
        counts = correlate(indicator, indicator).values
        tuples = [b.group.split(int(t)) for t in b.elements]
        energy = 0
        for s, t in product(tuples, repeat=2):
            term = 1
            for s_i, t_i, m_i in zip(s, t, spec.blocks, strict=True):
                term *= int(counts[ctx.group.sub(s_i, t_i)]) ** m_i
            energy += term
        ctx.measure("energy", energy)
        return [
            compare(
                "|Q|^{2m}|B|^2 <= |Q^m - Delta(B)| * energy",
                len(q) ** (2 * spec.total) * len(b) ** 2,
                gen_diff_size(q, spec, b) * energy,
                Relation.LE,
            )
        ]
