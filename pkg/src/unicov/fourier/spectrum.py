import numpy as np
from loguru import logger

from unicov.core.config import settings
from unicov.dto.spectrum import SpectrumSet
from unicov.fourier.exceptions import ParameterRangeError, ParsevalBoundError
from unicov.fourier.transforms import set_transform
from unicov.sets.group_set import GroupSet


def spectrum(a: GroupSet, eps: float, *, exclude_principal: bool = False) -> SpectrumSet:
    """Spec_eps(A) = {chi : |A^(chi)| >= eps |A|}; Spec'_eps drops the principal character."""
    if not 0 < eps <= 1:
        raise ParameterRangeError(f"Spectrum threshold must lie in (0, 1], got {eps}")

    magnitudes = np.abs(set_transform(a).values)
    # Relative guard on the threshold; the absolute floor keeps rounding noise of zero coefficients out.
    tol = settings.FLOAT_TOLERANCE
    cutoff = max(eps * len(a) * (1 - tol), tol * max(1, len(a)))
    members = np.flatnonzero(magnitudes >= cutoff)
    nonprincipal = int(np.count_nonzero(members != 0))

    if len(a) > 0:
        cap = a.group.order / len(a) / eps / eps
        if nonprincipal > cap + settings.FLOAT_TOLERANCE:
            raise ParsevalBoundError(
                f"|Spec'_{eps}| = {nonprincipal} exceeds the Parseval cap {cap:.3f}"
            )
    logger.debug(f"Spectrum of a {len(a)}-set at eps={eps}: {len(members)} characters")

    characters = [int(c) for c in members if not (exclude_principal and c == 0)]
    return SpectrumSet(
        threshold=eps, characters=characters, principal_excluded=exclude_principal
    )
