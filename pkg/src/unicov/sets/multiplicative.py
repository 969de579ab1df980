"""Multiplicative set operations inside the prime field Z/p."""

import numpy as np
from sympy import isprime

from unicov.group.group import Group
from unicov.sets.exceptions import PrimeFieldError
from unicov.sets.group_set import GroupSet, same_group


def prime_modulus(group: Group) -> int:
    if not group.is_cyclic_factor or not isprime(group.order):
        raise PrimeFieldError(f"{group} is not a prime field Z/p")
    return group.order


def _inverses(values: np.ndarray, p: int) -> np.ndarray:
    return np.fromiter((pow(int(v), -1, p) for v in values), dtype=np.int64, count=len(values))


def product_set(a: GroupSet, b: GroupSet) -> GroupSet:
    group = same_group(a, b)
    p = prime_modulus(group)
    products = np.multiply.outer(a.elements, b.elements) % p
    return GroupSet.from_elements(group, np.unique(products))


def inverse_set(a: GroupSet) -> GroupSet:
    """A^{-1}; 0 has no inverse and is dropped."""
    p = prime_modulus(a.group)
    nonzero = a.elements[a.elements != 0]
    return GroupSet.from_elements(a.group, _inverses(nonzero, p))


def ratio_set(a: GroupSet, b: GroupSet) -> GroupSet:
    """A / B = {a / b : b != 0}."""
    same_group(a, b)
    return product_set(a, inverse_set(b))
