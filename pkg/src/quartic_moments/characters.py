"""Primitive quartic Dirichlet characters with primitive square.

The characters mod odd q of order 4 that are primitive and whose square is
still primitive are exactly the maps

    chi_n : m -> (m/n)_4

for primary squarefree n in Z[i] without rational prime divisors and
N(n) = q.  Such n exist iff q > 1 is odd, squarefree, and every prime factor
of q splits (p = 1 mod 4); there are then 2^omega(q) of them, one for each
choice of a prime above each p | q.  `verify_correspondence` re-derives the
Dirichlet side by brute force (CRT on cyclic prime-power components) and
certifies, per q, an exact value-table bijection against the enumerated
family.

The Hecke characters psi_m : n -> (m/n)_4 on primary n (modulus 16m, trivial
infinite type) live here too.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .gaussint import GaussInt, factor, norm, prime_above
from .sieves import (
    factorize_small,
    invmod,
    primes_upto,
    primitive_root_prime_power,
    valid_conductor_mask,
)
from .symbols import QuarticValue, quartic_exponent_fast

__all__ = [
    "QuarticCharacter",
    "HeckeCharacter",
    "enumerate_generators",
    "enumerate_range",
    "characters_upto",
    "char_eval",
    "character_exponents",
    "exponents_to_complex",
    "verify_correspondence",
    "CorrespondenceReport",
    "hecke_eval",
    "clear_character_caches",
]

_I_POW = np.array([1, 1j, -1, -1j], dtype=np.complex128)

# per-generator cache of chi(p) exponents at rational primes
_PRIME_EXP_CACHE: dict[tuple[int, int], dict[int, int]] = {}


class QuarticCharacter:
    """chi_n(m) = (m/n)_4 on rational integers, of conductor q = N(n)."""

    __slots__ = ("q", "n")

    def __init__(self, n: GaussInt, q: int | None = None):
        self.n = n
        self.q = norm(n) if q is None else q

    @classmethod
    def from_generator(cls, n: GaussInt) -> "QuarticCharacter":
        """Validated constructor: n must be primary, squarefree, norm odd,
        with no rational prime divisor."""
        fact = factor(n)
        from .gaussint import is_primary

        if norm(n) % 2 == 0 or norm(n) == 1:
            raise ValueError(f"{n} has invalid norm for a conductor")
        if not is_primary(n):
            raise ValueError(f"{n} is not primary")
        if not fact.is_squarefree() or fact.has_rational_prime_divisor():
            raise ValueError(f"{n} is not squarefree free of rational primes")
        return cls(n)

    def parity(self) -> int:
        """chi(-1) = (-1)^((q-1)/4)."""
        return 1 if ((self.q - 1) // 4) % 2 == 0 else -1

    def conjugate(self) -> "QuarticCharacter":
        return QuarticCharacter(self.n.conj(), self.q)

    def prime_exponent(self, p: int) -> int:
        """Exponent of chi(p) at a rational prime p (or -1 when p | q)."""
        key = (self.n.a, self.n.b)
        cache = _PRIME_EXP_CACHE.get(key)
        if cache is None:
            cache = _PRIME_EXP_CACHE[key] = {}
        e = cache.get(p)
        if e is None:
            e = quartic_exponent_fast(p % self.q, 0, self.n.a, self.n.b)
            cache[p] = e
        return e

    def __call__(self, m: int) -> QuarticValue:
        k = quartic_exponent_fast(m % self.q, 0, self.n.a, self.n.b)
        return QuarticValue.zero() if k < 0 else QuarticValue.unit(k)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, QuarticCharacter)
            and self.q == other.q
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return hash((self.q, self.n.a, self.n.b))

    def __repr__(self) -> str:
        return f"QuarticCharacter(q={self.q}, n={self.n})"


def char_eval(chi: QuarticCharacter, m: int) -> QuarticValue:
    """chi(m), reducing m mod q first; multiplicative and q-periodic."""
    return chi(m)


def character_exponents(chi: QuarticCharacter, limit: int) -> np.ndarray:
    """int8 array e of length limit+1: chi(m) = i^e[m], with -1 marking 0.

    Built multiplicatively: chi at primes via the reciprocity descent, then
    one additive sieve pass over prime-power progressions.
    """
    e = np.zeros(limit + 1, dtype=np.int64)
    zero = np.zeros(limit + 1, dtype=bool)
    zero[0] = True
    for p in primes_upto(limit):
        p = int(p)
        if chi.q % p == 0:
            zero[p::p] = True
            continue
        ep = chi.prime_exponent(p)
        if ep:
            pk = p
            while pk <= limit:
                e[pk::pk] += ep
                pk *= p
    out = (e & 3).astype(np.int8)
    out[zero] = -1
    return out


def exponents_to_complex(e: np.ndarray) -> np.ndarray:
    """Map an exponent array (with -1 for zero) to complex character values."""
    vals = _I_POW[np.clip(e, 0, 3)]
    return np.where(e < 0, 0, vals)


def clear_character_caches() -> None:
    _PRIME_EXP_CACHE.clear()
    _generators_by_conductor.cache_clear()
    _lattice_generators.cache_clear()


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------


def _is_valid_conductor(q: int) -> bool:
    if q <= 1:
        return False
    fac = factorize_small(q)
    return all(e == 1 and p % 4 == 1 for p, e in fac.items())


@lru_cache(maxsize=256)
def _generators_by_conductor(q: int) -> tuple[GaussInt, ...]:
    if not _is_valid_conductor(q):
        return ()
    primes = sorted(factorize_small(q))
    pairs = []
    for p in primes:
        pi = prime_above(p)
        from .gaussint import primary_associate

        pairs.append((pi, primary_associate(pi.conj())))
    gens = []
    for choice in itertools.product(*pairs):
        n = GaussInt(1, 0)
        for pi in choice:
            n = n * pi
        gens.append(n)
    gens.sort(key=lambda g: (g.a, g.b))
    return tuple(gens)


def enumerate_generators(q: int) -> list[GaussInt]:
    """All primary squarefree n of norm q without rational prime divisors,
    sorted by (a, b).  Empty unless q > 1 is odd squarefree with every prime
    factor = 1 mod 4."""
    if q % 2 == 0:
        raise ValueError(f"conductor {q} is even")
    if q < 1:
        raise ValueError(f"conductor {q} is not positive")
    return list(_generators_by_conductor(q))


@lru_cache(maxsize=16)
def _lattice_generators(Q: int) -> tuple[tuple[int, int, int], ...]:
    """Primary lattice points with valid conductor norm <= Q, as (q, a, b),
    sorted by (q, a, b).  Sieve-then-filter, no per-q search."""
    r = math.isqrt(Q)
    a = np.arange(-r - 1, r + 2)
    b = np.arange(-r - 1, r + 2)
    A, B = np.meshgrid(a, b, indexing="ij")
    ra, rb = A & 3, B & 3
    primary = ((ra == 1) & (rb == 0)) | ((ra == 3) & (rb == 2))
    N = A * A + B * B
    keep = primary & (N <= Q) & (N > 1)
    qs, As, Bs = N[keep], A[keep], B[keep]
    valid = valid_conductor_mask(Q)[qs]
    qs, As, Bs = qs[valid], As[valid], Bs[valid]
    order = np.lexsort((Bs, As, qs))
    return tuple(
        (int(qs[i]), int(As[i]), int(Bs[i])) for i in order
    )


def enumerate_range(Q: int) -> Iterator[QuarticCharacter]:
    """All characters of odd conductor q <= Q, grouped by q ascending and
    (a, b) ascending within a conductor."""
    if Q < 3:
        raise ValueError("Q must be at least 3")
    for q, a, b in _lattice_generators(Q):
        yield QuarticCharacter(GaussInt(a, b), q)


def characters_upto(Q: int) -> list[QuarticCharacter]:
    return list(enumerate_range(Q))


# ----------------------------------------------------------------------
# brute-force Dirichlet-side correspondence
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CorrespondenceReport:
    q: int
    enumerated: int
    brute_force: int
    bijection: bool

    @property
    def ok(self) -> bool:
        return self.enumerated == self.brute_force and self.bijection


def _component_survivors(p: int, e: int) -> tuple[int, list[int]]:
    """Indices k of characters chi_k on the cyclic group (Z/p^e)* such that
    chi_k and chi_k^2 are primitive mod p^e and ord(chi_k) | 4.

    chi_k(g) = e(k/phi) on a fixed primitive root g.  Returns (phi, ks).
    """
    phi = p ** (e - 1) * (p - 1)
    ks = []
    for k in range(phi):
        if (4 * k) % phi != 0:
            continue  # order does not divide 4
        k2 = (2 * k) % phi
        if e == 1:
            if k == 0 or k2 == 0:
                continue
        else:
            if k % p == 0 or k2 % p == 0:
                continue
        ks.append(k)
    return phi, ks


def verify_correspondence(q: int, bound: int = 2000) -> CorrespondenceReport:
    """Count primitive order-4 characters mod q with primitive square by CRT
    brute force and certify a value-table bijection with the (m/n)_4 family.
    """
    if q % 2 == 0:
        raise ValueError(f"conductor {q} is even")
    if q > bound:
        raise ValueError(f"{q} exceeds the brute-force bound {bound}")
    fac = sorted(factorize_small(q).items())
    comp = [_component_survivors(p, e) for p, e in fac]

    # CRT-lifted generators: g_i = root mod p_i^{e_i}, = 1 mod the rest
    lifts = []
    for (p, e), _ in zip(fac, comp):
        pe = p**e
        rest = q // pe
        g = primitive_root_prime_power(p, e)
        lift = (g * rest * invmod(rest, pe) + 1 * pe * invmod(pe, rest)) % q if rest > 1 else g % q
        lifts.append(lift)

    # Dirichlet side: signatures (i-exponent at each lifted generator)
    brute: list[tuple[int, ...]] = []
    for ks in itertools.product(*[ks for _, ks in comp]):
        orders = [phi // math.gcd(k, phi) if k else 1 for (phi, _), k in zip(comp, ks)]
        if not orders or math.lcm(*orders) != 4:
            continue
        sig = tuple((4 * k // phi) % 4 for (phi, _), k in zip(comp, ks))
        brute.append(sig)

    # symbol side
    gens = enumerate_generators(q)
    sigs = []
    for n in gens:
        sig = tuple(quartic_exponent_fast(g, 0, n.a, n.b) for g in lifts)
        sigs.append(sig)

    bijection = sorted(brute) == sorted(sigs) and len(set(sigs)) == len(sigs)
    return CorrespondenceReport(
        q=q, enumerated=len(gens), brute_force=len(brute), bijection=bijection
    )


# ----------------------------------------------------------------------
# Hecke characters psi_m
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class HeckeCharacter:
    """psi_m(n) = (m/n)_4 on primary n; modulus 16|m|, trivial infinite type."""

    twist: int

    @property
    def modulus(self) -> int:
        return 16 * abs(self.twist)


def hecke_eval(psi: HeckeCharacter, n: GaussInt) -> QuarticValue:
    from .gaussint import is_primary

    if not is_primary(n):
        raise ValueError(f"{n} is not primary")
    k = quartic_exponent_fast(psi.twist, 0, n.a, n.b)
    return QuarticValue.zero() if k < 0 else QuarticValue.unit(k)
