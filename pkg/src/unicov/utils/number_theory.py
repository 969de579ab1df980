import math
from functools import lru_cache

import numpy as np
from sympy import isprime, nextprime, primefactors, primitive_root


@lru_cache(maxsize=64)
def dlog_table(p: int) -> tuple[int, np.ndarray]:
    """
    Discrete logarithms in F_p^* to the smallest primitive root g.

    Returns (g, table) with table[g^x mod p] = x and table[0] = -1.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    g = 1 if p == 2 else int(primitive_root(p))
    table = np.full(p, -1, dtype=np.int64)
    power = 1
    for x in range(p - 1):
        table[power] = x
        power = power * g % p
    table.setflags(write=False)
    return g, table


def exp_table(p: int) -> np.ndarray:
    """Entry x is g^x mod p for the generator used by ``dlog_table``."""
    g, _ = dlog_table(p)
    return np.array([pow(g, x, p) for x in range(p - 1)], dtype=np.int64)


def admissible_modulus(order: int) -> int | None:
    """Smallest prime d in [ceil(sqrt N), 2 ceil(sqrt N)] that does not divide N."""
    lo = math.isqrt(order - 1) + 1 if order > 1 else 1
    d = int(nextprime(lo - 1))
    while d <= 2 * lo:
        if order % d:
            return d
        d = int(nextprime(d))
    return None


def least_prime_factor(q: int) -> int:
    factors = primefactors(q)
    return int(min(factors)) if factors else q
