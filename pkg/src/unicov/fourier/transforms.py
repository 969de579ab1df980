from fractions import Fraction

import numpy as np

from unicov.core.config import settings
from unicov.fourier.density import DensityFunction, correlate
from unicov.fourier.exceptions import ComplexInputError, ParameterRangeError
from unicov.group.group import Group
from unicov.sets.group_set import GroupSet


def _factor_matrix(n: int, sign: int) -> np.ndarray:
    idx = np.arange(n)
    return np.exp(sign * 2j * np.pi * np.outer(idx, idx) / n)


def _per_axis(group: Group, values: np.ndarray, sign: int) -> np.ndarray:
    cube = values.reshape(group.shape)
    for axis, n in enumerate(group.factors):
        cube = np.moveaxis(np.tensordot(_factor_matrix(n, sign), cube, axes=([1], [axis])), 0, axis)
    return cube.reshape(-1)


def dft(f: DensityFunction) -> DensityFunction:
    """f^(chi) = sum_g f(g) conj(chi(g)); no normalization on the forward side."""
    return DensityFunction(f.group, _per_axis(f.group, f.as_complex(), -1), dual=True)


def idft(transform: DensityFunction) -> DensityFunction:
    values = _per_axis(transform.group, transform.as_complex(), 1) / transform.group.order
    return DensityFunction(transform.group, values, dual=False)


def set_transform(a: GroupSet) -> DensityFunction:
    return dft(DensityFunction.indicator(a.group, a.bits))


def balanced_function(a: GroupSet) -> DensityFunction:
    """f_A = 1_A - |A|/N, stored as (N 1_A - |A|) / N."""
    group = a.group
    numerators = group.order * a.bits.astype(np.int64) - len(a)
    return DensityFunction(group, numerators, denominator=group.order)


def _require_real(f: DensityFunction) -> None:
    if not f.is_real(settings.FLOAT_TOLERANCE):
        raise ComplexInputError("E_k norms are defined for real-valued functions only")


def ek_norm(f: DensityFunction, k: int) -> Fraction | float:
    """||f||_{E_k}^{2k} = sum_x (f o f)(x)^k; exact for exact inputs."""
    if k < 1:
        raise ParameterRangeError(f"Energy order must be positive, got {k}")
    _require_real(f)
    if f.is_exact:
        corr = correlate(f, f)
        total = sum(int(v) ** k for v in corr.values)
        return Fraction(total, corr.denominator**k)
    real = DensityFunction(f.group, f.as_real())
    corr = correlate(real, real).as_real()
    return float(np.sum(corr**k))


def higher_energy(a: GroupSet, k: int) -> int:
    """E_k(A) = sum_x (A o A)(x)^k."""
    if k < 1:
        raise ParameterRangeError(f"Energy order must be positive, got {k}")
    indicator = DensityFunction.indicator(a.group, a.bits)
    return sum(int(v) ** k for v in correlate(indicator, indicator).values)


def wiener_norm(f: DensityFunction) -> float:
    """||f||_W = N^{-1} sum_rho |f^(rho)|."""
    return float(np.abs(dft(f).values).sum() / f.group.order)


def parseval_gap(f: DensityFunction) -> float:
    """|N sum |f|^2 - sum |f^|^2|, zero up to rounding."""
    spatial = f.group.order * float(np.sum(np.abs(f.as_complex()) ** 2))
    spectral = float(np.sum(np.abs(dft(f).values) ** 2))
    return abs(spatial - spectral)
