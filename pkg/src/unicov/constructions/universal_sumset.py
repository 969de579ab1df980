"""
A k'-universal sumset U = A + B in Z/N with |A|, |B| and |U^c| all of order N.

Recipe: pick a prime d in [ceil(sqrt N), 2 ceil(sqrt N)] with d not dividing
N and a k'-universal S_0 in Z/d. Every x in [0, N) is y + d z with y, z < d,
so S + d S is k'-universal in Z/N for S = S_0 | (S_0 + d). With P = [0, c* N)
and Q = d^{-1}(P + s) & P one takes A = S | d Q and B = d S | Q.
"""

import math
from fractions import Fraction
from typing import Final

import numpy as np
from loguru import logger
from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt

from unicov.constructions.exceptions import CertificationError, FamilyParameterError
from unicov.core.config import settings
from unicov.dto.construction import SumsetCertificate, UniversalSumset
from unicov.group.group import Group, make_group
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import dilate, sumset, translate
from unicov.solver.exceptions import IndeterminateCoverError
from unicov.solver.universality import un_exact
from unicov.utils.number_theory import admissible_modulus

MAX_U_FRACTION: Final[float] = 0.75


def _certified_un(s: GroupSet, node_budget: int | None) -> int:
    report = un_exact(s, node_budget=node_budget)
    if not report.optimal:
        raise IndeterminateCoverError("un(S_0) not certified within the node budget")
    return int(report.value) if not report.is_infinite else s.group.order


def find_seed_set(
    d: int, k: int, seed: int, *, node_budget: int | None = None
) -> tuple[GroupSet, int, int]:
    """
    A random ceil(c d)-subset of Z/d certified k'-universal, for the largest
    k' <= k reachable within the retry budget. Returns (S_0, k', attempts).
    """
    group = make_group([d])
    size = max(1, math.ceil(settings.UNIVERSAL_SUMSET_C * d))
    attempts = 0

    for target in range(k, 0, -1):
        found: GroupSet | None = None
        try:
            for attempt in Retrying(
                stop=stop_after_attempt(settings.CONSTRUCTION_RETRIES),
                retry=retry_if_exception_type(CertificationError),
            ):
                with attempt:
                    attempts += 1
                    number = attempt.retry_state.attempt_number
                    rng = np.random.default_rng([seed, target, number])
                    candidate = GroupSet.from_elements(group, rng.choice(d, size=size, replace=False))
                    if _certified_un(candidate, node_budget) < target:
                        raise CertificationError(f"Sample {number} is not {target}-universal")
                    found = candidate
        except RetryError:
            logger.warning(
                f"No {target}-universal {size}-subset of Z/{d} in "
                f"{settings.CONSTRUCTION_RETRIES} samples; lowering k'"
            )
            continue
        if found is not None:
            return found, target, attempts
    raise CertificationError(f"Could not certify any seed set in Z/{d}")


def _interval(group: Group, length: int) -> GroupSet:
    return GroupSet.from_elements(group, range(length))


def _preimage(group: Group, s: GroupSet, d: int) -> GroupSet:
    """d^{-1} S = {x : d x in S}."""
    return GroupSet(group, s.bits[group.scalar_table(d)])


def universal_sumset(
    order: int, k: int, seed: int, *, symmetric: bool = False, node_budget: int | None = None
) -> UniversalSumset:
    if k < 1 or k > math.log2(order) / 2:
        raise FamilyParameterError(f"Need 1 <= k <= log2(N)/2 = {math.log2(order) / 2:.2f}, got {k}")
    d = admissible_modulus(order)
    if d is None:
        raise FamilyParameterError(f"No prime d in [sqrt N, 2 sqrt N] avoiding the divisors of {order}")

    group = make_group([order])
    s0, k_certified, attempts = find_seed_set(d, k, seed, node_budget=node_budget)
    if k_certified < k:
        logger.warning(f"Seed set certified only {k_certified}-universal (requested {k})")
    s = GroupSet.from_elements(group, [(x + shift) % order for x in s0.elements for shift in (0, d)])
    ds = dilate(d, s).image
    p_set = _interval(group, math.ceil(settings.UNIVERSAL_SUMSET_C_STAR * order))
    q_floor = settings.UNIVERSAL_SUMSET_C_Q * order
    if symmetric:
        q_floor *= settings.UNIVERSAL_SUMSET_C_STAR
    # A and B both hold a copy of Q, so the floor on |Q| is also theirs.
    density_size = math.ceil(q_floor)

    result: UniversalSumset | None = None
    for attempt in Retrying(
        stop=stop_after_attempt(settings.Q_RETRIES),
        retry=retry_if_exception_type(CertificationError),
        reraise=True,
    ):
        with attempt:
            number = attempt.retry_state.attempt_number
            rng = np.random.default_rng([seed, order, number])
            shift = int(rng.integers(order))
            q = _preimage(group, translate(p_set, shift), d) & p_set
            if symmetric:
                t = int(rng.integers(order))
                q = q & dilate(d, translate(p_set, t)).image
            if len(q) < q_floor:
                raise CertificationError(f"|Q| = {len(q)} below {q_floor:.1f} (attempt {number})")

            dq = dilate(d, q).image
            if symmetric:
                a = s | dq | ds | q
                b = a
            else:
                a, b = s | dq, ds | q
            if min(len(a), len(b)) < density_size:
                raise CertificationError(
                    f"|A| = {len(a)}, |B| = {len(b)} below {density_size} (attempt {number})"
                )
            u = sumset(a, b)
            if len(u) > MAX_U_FRACTION * order:
                raise CertificationError(f"|U| = {len(u)} exceeds 3N/4 (attempt {number})")

            lifting = order <= d * d and sumset(s, ds) <= u
            if not lifting:
                raise CertificationError("S + dS is not contained in U")
            direct = None
            if order <= settings.DIRECT_CERTIFY_CAP:
                direct = _certified_un(u, node_budget)
                if direct < k_certified:
                    raise CertificationError(f"Direct check gives un(U) = {direct} < {k_certified}")

            result = UniversalSumset(
                a=a,
                b=b,
                u=u,
                certificate=SumsetCertificate(
                    order=order,
                    modulus=d,
                    k_requested=k,
                    k_certified=k_certified,
                    seed_set=s0.to_list(),
                    shift=shift,
                    q_size=len(q),
                    u_size=len(u),
                    lifting_holds=lifting,
                    a_density=Fraction(len(a), order),
                    b_density=Fraction(len(b), order),
                    density_floor=Fraction(density_size, order),
                    direct_un=direct,
                    symmetric=symmetric,
                    attempts=attempts + number,
                ),
            )

    assert result is not None
    logger.info(
        f"Universal sumset in Z/{order}: |A|={len(result.a)}, |B|={len(result.b)}, "
        f"|U|={len(result.u)}, un(U) >= {k_certified}"
    )
    return result
