"""Solution-free sets and higher-energy bounds on universality."""

import math
from fractions import Fraction

import numpy as np

from unicov.constructions.solution_free import solution_free_greedy
from unicov.core.enums.check import Relation
from unicov.dto.check import Comparison
from unicov.fourier.transforms import balanced_function, ek_norm
from unicov.group.group import Group
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.equations import is_solution_free
from unicov.sets.group_set import GroupSet
from unicov.solver.universality import u_n
from unicov.verify.compare import compare
from unicov.verify.context import CheckContext, un
from unicov.verify.generators import build, pick, random_subset
from unicov.verify.registry import Check, register

EQUATION_GROUPS = ("z7", "z8", "z9", "z10", "z11", "z12", "z13", "z14", "z15", "z16", "z4^2", "z2^4")
ENERGY_GROUPS = ("z16", "z20", "z24", "z25", "z27", "z32", "z2^4", "z4xz8", "z6xz8")
ENERGY_EPS = Fraction(1, 8)


def _solution_free_instance(rng: np.random.Generator, arities: tuple[int, ...]) -> CheckInstance:
    group = pick(rng, EQUATION_GROUPS)
    n = arities[int(rng.integers(len(arities)))]
    units = [lam for lam in range(1, group.exponent) if group.is_unit(lam)]
    coeffs = [int(c) for c in rng.choice(units, size=n)]
    beta = int(rng.integers(group.order))
    a = solution_free_greedy(group, coeffs, beta, seed=int(rng.integers(2**31)))
    return build(group, {"A": a}, {"coeffs": coeffs, "beta": beta})


def _solution_free_premise(ctx: CheckContext) -> tuple[GroupSet, list[int]]:
    ctx.nonempty("A")
    a = ctx["A"]
    coeffs = [int(c) for c in ctx.param("coeffs")]
    group: Group = ctx.group
    ctx.require(all(group.is_unit(c) for c in coeffs), f"Coefficients {coeffs} are not all units")
    ctx.require(is_solution_free(a, coeffs, int(ctx.param("beta", 0))), "A has a solution")
    return a, coeffs


def energy_ratio(a: GroupSet, l: int) -> Fraction:
    """||f_A||_{E_l}^{2l} / (delta^{2l} N^{l+1}), exact."""
    size, order = len(a), a.group.order
    return Fraction(ek_norm(balanced_function(a), l)) / (Fraction(size) ** (2 * l) * Fraction(order) ** (1 - l))


@register
class SolutionFreeUniversality(Check):
    check_id = "V14"
    premise_gated = True
    anchor = "un(A) <= delta^-1 log(1/delta) (n = 3), (2 log(1/delta))^(1/(floor(n/2) - 1)) (n > 3)"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        return _solution_free_instance(rng, (3, 4, 5))

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        a, coeffs = _solution_free_premise(ctx)
        n = len(coeffs)
        ctx.require(n >= 3, f"Need at least 3 variables, got {n}")
        delta = len(a) / ctx.order
        log_inv = math.log(1 / delta)
        if n == 3:
            bound, label = log_inv / delta, "un(A) <= log(1/delta)/delta"
        else:
            bound, label = (2 * log_inv) ** (1 / (n // 2 - 1)), "un(A) <= (2 log(1/delta))^(1/(n/2 - 1))"
        return [compare(label, un(a), bound, Relation.LE)]


@register
class EnergyUniversality(Check):
    check_id = "V15"
    premise_gated = True
    anchor = "U_k(A) > (1 + eps^2)^-k when ||f_A||_{E_l}^{2l} <= eps^{2l} delta^{2l} N^{l+1} for 2 <= l <= k"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        group = pick(rng, ENERGY_GROUPS)
        a = random_subset(rng, group, lo=0.35, hi=0.65, proper=True)
        return build(group, {"A": a}, {"k": int(rng.integers(2, 4))})

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        ctx.nonempty("A")
        a = ctx["A"]
        ctx.require(not a.is_full(), "A = G")
        k = int(ctx.param("k"))
        eps_sq = max(float(energy_ratio(a, l)) ** (1 / l) for l in range(1, k + 1))
        ctx.require(0 < eps_sq < 1, f"Smallest admissible eps^2 = {eps_sq:.4g} outside (0, 1)")
        ctx.measure("eps", math.sqrt(eps_sq))
        return [compare("U_k(A) > (1 + eps^2)^-k", u_n(a, k), (1 + eps_sq) ** (-k), Relation.GT)]


@register
class SolutionFreeEnergy(Check):
    check_id = "V16"
    premise_gated = True
    anchor = "solution-free A has ||f_A||_{E_l}^{2l} >= eps^{2l} delta^{2l} N^{l+1} for some 2 <= l <= x + 1"

    def generate(self, rng: np.random.Generator) -> CheckInstance:
        return _solution_free_instance(rng, (4, 5))

    def evaluate(self, ctx: CheckContext) -> list[Comparison]:
        a, coeffs = _solution_free_premise(ctx)
        n = len(coeffs)
        ctx.require(n >= 4, f"Need at least 4 variables, got {n}")
        delta = len(a) / ctx.order
        x = (3 * math.log(1 / delta)) ** (1 / (n // 2 - 1))
        levels = range(2, math.floor(x + 1) + 1)
        ctx.require(len(levels) > 0, f"No energy level in [2, {x + 1:.3f}]")
        best = max(energy_ratio(a, l) / ENERGY_EPS ** (2 * l) for l in levels)
        ctx.measure("levels", list(levels))
        return [compare("max_l E_l ratio / eps^{2l} >= 1", best, 1, Relation.GE)]
