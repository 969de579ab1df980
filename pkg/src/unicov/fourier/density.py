from fractions import Fraction
from typing import Any

import numpy as np

from unicov.group.group import Element, Group
from unicov.sets.exceptions import GroupMismatchError


class DensityFunction:
    """
    A function on G, or on its dual when ``dual`` is set.

    Exact functions store integer numerators over a common ``denominator``;
    indicator pipelines (indicators, balanced functions, convolutions of
    those) stay exact. Everything else is a complex array.
    """

    __slots__ = ("group", "values", "denominator", "dual")

    def __init__(
        self,
        group: Group,
        values: np.ndarray,
        *,
        denominator: int | None = None,
        dual: bool = False,
    ) -> None:
        values = np.asarray(values).reshape(-1)
        if values.size != group.order:
            raise GroupMismatchError(
                f"Function of length {values.size} does not fit {group} (N={group.order})"
            )
        if denominator is not None:
            if denominator < 1:
                raise ValueError(f"Denominator must be positive, got {denominator}")
            values = values.astype(np.int64)
        else:
            values = values.astype(np.complex128)
        values.setflags(write=False)
        self.group = group
        self.values = values
        self.denominator = denominator
        self.dual = dual

    @classmethod
    def indicator(cls, group: Group, bits: np.ndarray) -> "DensityFunction":
        return cls(group, np.asarray(bits, dtype=np.int64), denominator=1)

    @classmethod
    def counts(cls, group: Group, counts: np.ndarray) -> "DensityFunction":
        return cls(group, np.asarray(counts, dtype=np.int64), denominator=1)

    @classmethod
    def constant(cls, group: Group, value: int = 1) -> "DensityFunction":
        return cls(group, np.full(group.order, value, dtype=np.int64), denominator=1)

    @property
    def is_exact(self) -> bool:
        return self.denominator is not None

    def is_real(self, tol: float = 1e-12) -> bool:
        return self.is_exact or bool(np.all(np.abs(self.values.imag) <= tol))

    def as_complex(self) -> np.ndarray:
        if self.denominator is None:
            return self.values
        return self.values.astype(np.complex128) / self.denominator

    def as_real(self) -> np.ndarray:
        return self.as_complex().real

    def cube(self) -> np.ndarray:
        return self.values.reshape(self.group.shape)

    def value_at(self, x: Element) -> Fraction | complex:
        v = self.values[self.group.check(x)]
        if self.denominator is None:
            return complex(v)
        return Fraction(int(v), self.denominator)

    def total(self) -> Fraction | complex:
        if self.denominator is None:
            return complex(self.values.sum())
        return Fraction(int(self.values.sum()), self.denominator)

    def l1_norm(self) -> float:
        return float(np.abs(self.as_complex()).sum())

    def to_json(self) -> dict[str, Any]:
        c = self.as_complex()
        return {
            "group": self.group.spec,
            "values": [[float(v.real), float(v.imag)] for v in c],
        }

    def __repr__(self) -> str:
        kind = "exact" if self.is_exact else "float"
        side = "dual" if self.dual else "primal"
        return f"DensityFunction({self.group}, {kind}, {side})"


def _same_group(f: DensityFunction, g: DensityFunction) -> Group:
    if f.group != g.group:
        raise GroupMismatchError(f"Functions live on {f.group} and {g.group}")
    return f.group


def _shifted_sum(f: DensityFunction, g: DensityFunction, sign: int) -> DensityFunction:
    group = _same_group(f, g)
    axes = tuple(range(len(group.factors)))
    exact = f.is_exact and g.is_exact
    g_cube = g.cube() if exact else g.as_complex().reshape(group.shape)
    f_vals = f.values if exact else f.as_complex()
    out = np.zeros(group.shape, dtype=np.int64 if exact else np.complex128)

    for y in np.flatnonzero(f_vals):
        shift = tuple(int(c) for c in sign * group.coord_table[y])
        out += f_vals[y] * np.roll(g_cube, shift, axis=axes)

    if exact:
        return DensityFunction(group, out, denominator=f.denominator * g.denominator)
    return DensityFunction(group, out)


def convolve(f: DensityFunction, g: DensityFunction) -> DensityFunction:
    """(f*g)(x) = sum_y f(y) g(x - y)."""
    return _shifted_sum(f, g, 1)


def correlate(f: DensityFunction, g: DensityFunction) -> DensityFunction:
    """(f o g)(x) = sum_y f(y) g(y + x)."""
    return _shifted_sum(f, g, -1)
