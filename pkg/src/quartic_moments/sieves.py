"""Rational-integer sieves shared across the package.

Plain numpy implementations of the classics: smallest prime factor, prime
lists, Mobius, squarefree masks, and the mask of valid conductors (odd,
squarefree, all prime factors = 1 mod 4).  Tables are cached and grown in
powers of two so repeated callers never rebuild.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "smallest_prime_factor",
    "primes_upto",
    "mobius_upto",
    "squarefree_mask",
    "valid_conductor_mask",
    "factorize_small",
    "primitive_root",
    "primitive_root_prime_power",
    "invmod",
]


def _rounded(limit: int) -> int:
    n = 1 << max(10, (limit - 1).bit_length())
    return n


@lru_cache(maxsize=4)
def _spf_table(size: int) -> np.ndarray:
    spf = np.zeros(size + 1, dtype=np.int64)
    spf[1] = 1
    i = np.arange(size + 1)
    spf[2::2] = 2
    p = 3
    while p * p <= size:
        if spf[p] == 0:
            spf[p * p :: p] = np.where(spf[p * p :: p] == 0, p, spf[p * p :: p])
        p += 2
    rest = spf == 0
    spf[rest] = i[rest]  # remaining entries are prime
    spf[0] = 0
    return spf


def smallest_prime_factor(limit: int) -> np.ndarray:
    """Array spf with spf[m] = smallest prime factor of m, spf[1] = 1."""
    return _spf_table(_rounded(limit))


@lru_cache(maxsize=8)
def _primes(size: int) -> np.ndarray:
    sieve = np.ones(size + 1, dtype=bool)
    sieve[:2] = False
    p = 2
    while p * p <= size:
        if sieve[p]:
            sieve[p * p :: p] = False
        p += 1
    return np.flatnonzero(sieve).astype(np.int64)


def primes_upto(limit: int) -> np.ndarray:
    ps = _primes(_rounded(limit))
    return ps[ps <= limit]


@lru_cache(maxsize=4)
def _mobius(size: int) -> np.ndarray:
    mu = np.ones(size + 1, dtype=np.int64)
    for p in _primes(size):
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    mu[0] = 0
    return mu


def mobius_upto(limit: int) -> np.ndarray:
    return _mobius(_rounded(limit))


@lru_cache(maxsize=4)
def _squarefree(size: int) -> np.ndarray:
    mask = np.ones(size + 1, dtype=bool)
    mask[0] = False
    p = 2
    while p * p <= size:
        mask[p * p :: p * p] = False
        p += 1
    return mask


def squarefree_mask(limit: int) -> np.ndarray:
    """mask[m] true iff m is squarefree (mask[0] false)."""
    return _squarefree(_rounded(limit))


@lru_cache(maxsize=4)
def _valid_conductors(size: int) -> np.ndarray:
    mask = _squarefree(size).copy()
    mask[: 2] = False
    mask[::2] = False
    for p in _primes(size):
        if p % 4 == 3:
            mask[p::p] = False
    return mask


def valid_conductor_mask(limit: int) -> np.ndarray:
    """mask[q] true iff q > 1 is odd, squarefree, with all p | q split (p = 1 mod 4)."""
    return _valid_conductors(_rounded(limit))


def factorize_small(m: int) -> dict[int, int]:
    """Factor m >= 1 using the SPF table (intended for small m)."""
    spf = smallest_prime_factor(m)
    out: dict[int, int] = {}
    while m > 1:
        p = int(spf[m])
        out[p] = out.get(p, 0) + 1
        m //= p
    return out


def invmod(a: int, m: int) -> int:
    return pow(a, -1, m)


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest primitive root mod an odd prime p."""
    fac = factorize_small(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")


@lru_cache(maxsize=None)
def primitive_root_prime_power(p: int, e: int) -> int:
    """A primitive root mod p^e for odd prime p."""
    g = primitive_root(p)
    if e == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g
