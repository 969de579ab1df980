"""
Randomized search for covers with a Fourier-uniformity side condition:
A + X = G together with |(X*f)^(chi)| <= eps |X| ||f||_1 for every chi != 1.
"""

import math

import numpy as np
from loguru import logger

from unicov.core.config import settings
from unicov.core.enums.cover import CoverStatus
from unicov.dto.cover import CoverWitness
from unicov.fourier.density import DensityFunction
from unicov.fourier.exceptions import ParameterRangeError
from unicov.fourier.transforms import dft, set_transform
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import sumset
from unicov.solver.exceptions import EmptySetError


def size_grid(lo: int, hi: int, ratio: float = math.sqrt(2)) -> list[int]:
    sizes = []
    s = float(max(1, lo))
    while round(s) <= hi:
        if not sizes or round(s) != sizes[-1]:
            sizes.append(round(s))
        s *= ratio
    if not sizes or sizes[-1] != hi:
        sizes.append(hi)
    return sizes


def spectral_violation(x: GroupSet, f_hat: np.ndarray, f_mass: float) -> float:
    """max_{chi != 1} |X^(chi) f^(chi)| / (|X| ||f||_1)."""
    product = np.abs(set_transform(x).values * f_hat)
    product[0] = 0.0
    return float(product.max() / (len(x) * f_mass))


def _spread(trials: int, slots: int) -> list[int]:
    """Split ``trials`` samples over ``slots`` sizes, the smaller sizes taking the remainder."""
    share, extra = divmod(trials, slots)
    return [share + (1 if i < extra else 0) for i in range(slots)]


def cov_fourier_constrained(
    a: GroupSet, f: DensityFunction, eps: float, trials: int, seed: int
) -> CoverWitness:
    """
    Sample at most ``trials`` random X over a geometric grid of sizes, smallest
    sizes first, and keep the smallest X meeting both conditions.
    """
    if trials < 0:
        raise ParameterRangeError(f"trials must be nonnegative, got {trials}")
    if eps <= 0:
        raise ParameterRangeError(f"eps must be positive, got {eps}")
    if a.is_empty():
        raise EmptySetError("Cannot cover with translates of the empty set")
    values = f.as_complex()
    if np.any(np.abs(values.imag) > settings.FLOAT_TOLERANCE) or np.any(values.real < -settings.FLOAT_TOLERANCE):
        raise ParameterRangeError("f must be nonnegative")
    f_mass = f.l1_norm()
    if f_mass == 0:
        raise ParameterRangeError("f must not vanish identically")

    group = a.group
    f_hat = dft(f).values
    rng = np.random.default_rng(seed)
    sizes = size_grid(math.ceil(group.order / len(a)), group.order)
    per_size = _spread(trials, len(sizes))
    reference = eps**-2 * math.log(group.order) ** 2 if group.order > 1 else 0.0

    best: GroupSet | None = None
    best_violation = math.inf
    attempts = 0
    for size, samples in zip(sizes, per_size, strict=True):
        for _ in range(samples):
            attempts += 1
            x = GroupSet.from_elements(group, rng.choice(group.order, size=size, replace=False))
            if not sumset(a, x).is_full():
                continue
            violation = spectral_violation(x, f_hat, f_mass)
            best_violation = min(best_violation, violation)
            if violation <= eps + settings.FLOAT_TOLERANCE and (best is None or len(x) < len(best)):
                best = x
        if best is not None:
            break

    notes = {
        "attempts": attempts,
        "trials": trials,
        "best_violation": None if math.isinf(best_violation) else best_violation,
        "reference_size": reference,
        "seed": seed,
    }
    if best is None:
        logger.warning(f"No X satisfying cover and spectral constraint after {attempts} samples")
        return CoverWitness(status=CoverStatus.NOT_FOUND, notes=notes)
    return CoverWitness(
        status=CoverStatus.FEASIBLE,
        value=len(best),
        witness=best,
        optimal=False,
        lower_bound=math.ceil(group.order / len(a)),
        upper_bound=len(best),
        notes=notes | {"violation": spectral_violation(best, f_hat, f_mass)},
    )
