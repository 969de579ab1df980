"""
Report-only measurements.

These compare a computed covering number against a growth rate that only
holds asymptotically, so the comparison is recorded and never fails a run.
"""

import math

import numpy as np

from unicov.constructions.families import quadratic_residues
from unicov.core.config import settings
from unicov.core.enums.check import CheckKind, Relation
from unicov.dto.check import Comparison
from unicov.fourier.density import DensityFunction
from unicov.fourier.transforms import wiener_norm
from unicov.group.group import make_group
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.group_set import GroupSet
from unicov.sets.multiplicative import inverse_set
from unicov.sets.operations import complement, translate
from unicov.verify.checks.multiplicative import field_prime
from unicov.verify.compare import compare
from unicov.verify.context import CheckContext, cov, cov_times
from unicov.verify.generators import MEDIUM_GROUPS, SMALL_PRIMES, build, pick, random_subset
from unicov.verify.registry import Check, register

RESIDUE_PRIMES = (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)


@register
class QuadraticResidueCover(Check):
    check_id = "V29"
    anchor = "cov(R) >= (1/2) log2 p for the quadratic residues R"
    kind = CheckKind.REPORT_ONLY

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        p = RESIDUE_PRIMES[int(rng.integers(len(RESIDUE_PRIMES)))]
        residues = quadratic_residues(p)
        return build(residues.group, {"R": residues})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("R")
        p = field_prime(ctx)
        value = cov(ctx["R"])
        reference = 0.5 * math.log2(p)
        ctx.measure("ratio", value / reference)
        return [compare("cov(R) >= log2(p)/2", value, reference, Relation.GE)]


@register
class RandomSetCoverGrowth(Check):
    check_id = "V34"
    anchor = "cov(A) ~ delta^-1 log N for random A"
    kind = CheckKind.REPORT_ONLY

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, MEDIUM_GROUPS)
        return build(group, {"A": random_subset(rng, group, lo=0.1, hi=0.5)})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        a = ctx["A"]
        value = cov(a)
        reference = ctx.order / len(a) * math.log(ctx.order)
        ctx.measure("ratio", value / reference)
        return [compare("cov(A) <= log(N)/delta", value, reference, Relation.LE)]


@register
class InverseSetCover(Check):
    check_id = "V35"
    anchor = "cov((A^-1)^c) and cov^x((A^-1 + s)^c) against log p / (2 log(K/alpha)), K = ||A||_W"
    kind = CheckKind.REPORT_ONLY

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        p = SMALL_PRIMES[int(rng.integers(len(SMALL_PRIMES)))]
        group = make_group([p])
        a = random_subset(rng, group, lo=0.3, hi=0.6) - GroupSet.from_elements(group, [0])
        if a.is_empty():
            a = GroupSet.from_elements(group, [1])
        return build(group, {"A": a}, {"shift": int(rng.integers(1, p))})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        p = field_prime(ctx)
        a = ctx["A"]
        ctx.require(0 not in a, "0 has no inverse")
        wiener = wiener_norm(DensityFunction.indicator(a.group, a.bits))
        alpha = len(a) / p
        ctx.require(wiener / alpha > 1 + settings.FLOAT_TOLERANCE, "||A||_W = alpha")
        reference = math.log(p) / (2 * math.log(wiener / alpha))
        ctx.measure("wiener_norm", wiener)

        omega = complement(inverse_set(a))
        comparisons = [compare("cov((A^-1)^c) >= log p / (2 log(K/alpha))", cov(omega), reference, Relation.GE)]
        shifted = complement(translate(inverse_set(a), int(ctx.param("shift", 1))))
        if len(shifted) > int(0 in shifted):
            comparisons.append(
                compare("cov^x((A^-1 + s)^c) >= log p / (2 log(K/alpha))", cov_times(shifted), reference, Relation.GE)
            )
        return comparisons
