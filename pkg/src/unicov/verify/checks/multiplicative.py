"""Multiplicative covering of additively structured sets in prime fields."""

import math
from fractions import Fraction

import numpy as np

from unicov.core.enums.check import Relation
from unicov.dto.check import Comparison
from unicov.group.group import make_group
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.exceptions import PrimeFieldError
from unicov.sets.multiplicative import prime_modulus
from unicov.sets.operations import complement, difference_set
from unicov.utils.number_theory import least_prime_factor
from unicov.verify.compare import compare
from unicov.verify.context import CheckContext, cov_times
from unicov.verify.exceptions import PremiseNotMetError
from unicov.verify.generators import SMALL_PRIMES, build, random_sized, random_subset
from unicov.verify.registry import Check, register

FIELD_PRIMES = (*SMALL_PRIMES, 37, 41, 43)


def field_prime(ctx: CheckContext) -> int:
    try:
        return prime_modulus(ctx.group)
    except PrimeFieldError as e:
        raise PremiseNotMetError(str(e)) from e


@register
class DifferenceSetMultiplicativeCover(Check):
    check_id = "V28"
    premise_gated = True
    anchor = "cov^x(A - A) <= alpha^-1 + 1 when the least prime factor of q exceeds 2/alpha + 3"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = make_group([SMALL_PRIMES[int(rng.integers(len(SMALL_PRIMES)))]])
        return build(group, {"A": random_subset(rng, group, lo=0.3, hi=0.7)})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        q = field_prime(ctx)
        a = ctx["A"]
        inverse_density = Fraction(q, len(a))
        ctx.require(
            least_prime_factor(q) > 2 * inverse_density + 3,
            f"Least prime factor of {q} is at most 2/alpha + 3 = {float(2 * inverse_density + 3):.3f}",
        )
        return [compare("cov^x(A - A) <= 1/alpha + 1", cov_times(difference_set(a, a)), inverse_density + 1, Relation.LE)]


@register
class SparseDifferenceComplement(Check):
    check_id = "V30"
    anchor = "cov^x((A - A)^c) >= log(p - 1)/log(1/alpha)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        p = FIELD_PRIMES[int(rng.integers(len(FIELD_PRIMES)))]
        group = make_group([p])
        size = int(rng.integers(2, math.isqrt(p) + 1))
        return build(group, {"A": random_sized(rng, group, size)})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        p = field_prime(ctx)
        a = ctx["A"]
        ctx.require(len(a) < p, "A = F_p")
        differences = difference_set(a, a)
        ctx.require(not differences.is_full(), "A - A = F_p")
        bound = math.log(p - 1) / math.log(p / len(a))
        return [compare("cov^x((A-A)^c) >= log(p-1)/log(1/alpha)", cov_times(complement(differences)), bound, Relation.GE)]
