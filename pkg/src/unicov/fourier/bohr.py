import math

import numpy as np

from unicov.core.config import settings
from unicov.fourier.exceptions import ParameterRangeError
from unicov.group.group import Group, character_exponents
from unicov.schemas.bohr import BohrSpec
from unicov.sets.group_set import GroupSet


def bohr_set(group: Group, spec: BohrSpec) -> GroupSet:
    """B(Gamma, eps) = {x : |chi(x) - 1| <= eps for every chi in Gamma}."""
    if not 0 < spec.radius <= 2:
        raise ParameterRangeError(f"Bohr radius must lie in (0, 2], got {spec.radius}")
    bad = [chi for chi in spec.frequencies if chi >= group.order]
    if bad:
        raise ParameterRangeError(f"Characters {bad} are outside the dual of {group}")

    bits = np.ones(group.order, dtype=bool)
    for chi in spec.frequencies:
        exponents = character_exponents(group, chi)
        distance = 2 * np.abs(np.sin(np.pi * exponents / group.exponent))
        bits &= distance <= spec.radius + settings.FLOAT_TOLERANCE
    return GroupSet(group, bits)


def bohr_size_bound(group: Group, spec: BohrSpec) -> float:
    """The guaranteed size (eps / 2 pi)^d N."""
    return (spec.radius / (2 * math.pi)) ** spec.dimension * group.order
