import math

import numpy as np
from loguru import logger
from sympy import isprime

from unicov.constructions.exceptions import FamilyParameterError
from unicov.constructions.universal_sumset import universal_sumset
from unicov.core.enums.family import FamilyTag
from unicov.fourier.bohr import bohr_set
from unicov.group.group import Group, make_group, parse_group_spec
from unicov.schemas.bohr import BohrSpec
from unicov.schemas.family import FamilySpec
from unicov.sets.group_set import GroupSet


def ap(group: Group, start: int, length: int) -> GroupSet:
    """{start, ..., start + length - 1} mod N in a cyclic group."""
    if not group.is_cyclic_factor:
        raise FamilyParameterError(f"Arithmetic progressions need a cyclic group, got {group}")
    if not 1 <= length <= group.order:
        raise FamilyParameterError(f"Length {length} outside [1, {group.order}]")
    return GroupSet.from_elements(group, [(start + i) % group.order for i in range(length)])


def random_set(group: Group, density: float, seed: int) -> GroupSet:
    """Each element kept independently with probability ``density``."""
    if not 0 < density <= 1:
        raise FamilyParameterError(f"Density must lie in (0, 1], got {density}")
    rng = np.random.default_rng(seed)
    result = GroupSet(group, rng.random(group.order) < density)
    logger.debug(f"Random set in {group}: target density {density}, realized {float(result.density):.4f}")
    return result


def quadratic_residues(p: int) -> GroupSet:
    if p == 2 or not isprime(p):
        raise FamilyParameterError(f"Quadratic residues need an odd prime, got {p}")
    squares = {x * x % p for x in range(1, (p - 1) // 2 + 1)}
    return GroupSet.from_elements(make_group([p]), squares)


def interval_middle_third(p: int) -> GroupSet:
    """{ceil(p/3), ..., floor(2p/3)} in Z/p."""
    if p < 5:
        raise FamilyParameterError(f"The middle-third interval needs p >= 5, got {p}")
    lo, hi = math.ceil(p / 3), (2 * p) // 3
    return GroupSet.from_elements(make_group([p]), range(lo, hi + 1))


def subspace_blocks(n: int, k: int) -> list[list[int]]:
    """Partition [0, n) into k consecutive near-equal blocks, larger blocks first."""
    if not 1 <= k <= n:
        raise FamilyParameterError(f"Need 1 <= k <= n, got n={n}, k={k}")
    size, extra = divmod(n, k)
    blocks, start = [], 0
    for i in range(k):
        width = size + (1 if i < extra else 0)
        blocks.append(list(range(start, start + width)))
        start += width
    return blocks


def subspace_union_universal(n: int, k: int) -> GroupSet:
    """U = H_1 | ... | H_k in F_2^n, H_i the coordinates vanishing on block i."""
    blocks = subspace_blocks(n, k)
    group = make_group([2] * n)
    coords = group.coord_table
    bits = np.zeros(group.order, dtype=bool)
    for block in blocks:
        bits |= np.all(coords[:, block] == 0, axis=1)
    return GroupSet(group, bits)


def bohr(group: Group, frequencies: list[int], radius: float) -> GroupSet:
    return bohr_set(group, BohrSpec(frequencies=frequencies, radius=radius))


def build_family(spec: FamilySpec) -> GroupSet:
    """Realize a family spec; universal sumsets realize to U = A + B."""
    match spec.family:
        case FamilyTag.AP:
            return ap(parse_group_spec(spec.group), spec.start, spec.length)
        case FamilyTag.RANDOM:
            return random_set(parse_group_spec(spec.group), spec.density, spec.seed)
        case FamilyTag.QR:
            return quadratic_residues(spec.p)
        case FamilyTag.INTERVAL:
            return interval_middle_third(spec.p)
        case FamilyTag.SUBSPACE_UNION:
            return subspace_union_universal(spec.n, spec.k)
        case FamilyTag.UNIVERSAL_SUMSET:
            return universal_sumset(spec.order, spec.k, spec.seed, symmetric=spec.symmetric).u
        case FamilyTag.BOHR:
            return bohr(parse_group_spec(spec.group), spec.frequencies, spec.radius)
    raise FamilyParameterError(f"Unknown family {spec.family}")
