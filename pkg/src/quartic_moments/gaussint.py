"""Exact arithmetic in Z[i], the ring of Gaussian integers.

Everything downstream (residue symbols, Gauss sums, character enumeration)
reduces to a handful of primitives over Z[i]:

* exact ring arithmetic on pairs of Python ints -- no overflow, no rounding
  anywhere in this module;
* the *primary* normal form: every element of odd norm has exactly one unit
  multiple u*n, u in {1, i, -1, -i}, congruent to 1 mod (1+i)^3.  Concretely
  a+bi is primary iff (a mod 4, b mod 4) is (1, 0) or (3, 2);
* nearest-rounding Euclidean division, with N(r) <= N(n)/2, which powers the
  gcd and the reciprocity descent in `symbols`;
* factorization into primary Gaussian primes: factor the rational norm, then
  split each rational prime (split p = 1 mod 4, inert p = 3 mod 4, ramified 2);
* a canonical complete residue system mod n: the Hermite-normal-form box
  {x + yi : 0 <= x < N(n)/g, 0 <= y < g} with g = gcd(a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "GaussInt",
    "GaussFactorization",
    "FactorBoundError",
    "FACTOR_NORM_BOUND",
    "ZERO",
    "ONE",
    "I_UNIT",
    "UNITS",
    "norm",
    "is_primary",
    "primary_associate",
    "divmod_nearest",
    "mod_nearest",
    "divides",
    "exact_div",
    "gcd",
    "factor",
    "prime_above",
    "residues_mod",
    "hnf_box",
    "mod_canonical",
]

FACTOR_NORM_BOUND = 10**12

# Deterministic Miller-Rabin witness set, valid far beyond 10^12.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FactorBoundError(ValueError):
    """Raised when a norm exceeds the configured factoring bound."""


@dataclass(frozen=True, slots=True)
class GaussInt:
    """A Gaussian integer a + bi with exact integer components."""

    a: int
    b: int

    def __add__(self, other: "GaussInt | int") -> "GaussInt":
        if isinstance(other, GaussInt):
            return GaussInt(self.a + other.a, self.b + other.b)
        return GaussInt(self.a + other, self.b)

    __radd__ = __add__

    def __sub__(self, other: "GaussInt | int") -> "GaussInt":
        if isinstance(other, GaussInt):
            return GaussInt(self.a - other.a, self.b - other.b)
        return GaussInt(self.a - other, self.b)

    def __rsub__(self, other: int) -> "GaussInt":
        return GaussInt(other - self.a, -self.b)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.a, -self.b)

    def __mul__(self, other: "GaussInt | int") -> "GaussInt":
        if isinstance(other, GaussInt):
            return GaussInt(
                self.a * other.a - self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        return GaussInt(self.a * other, self.b * other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GaussInt":
        if e < 0:
            raise ValueError("negative powers leave Z[i]")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conj(self) -> "GaussInt":
        return GaussInt(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_complex(self) -> complex:
        return complex(self.a, self.b)

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        if b == 1:
            imag = "i"
        elif b == -1:
            imag = "-i"
        else:
            imag = f"{b}i"
        if a == 0:
            return imag
        return f"{a}+{imag}" if b > 0 else f"{a}{imag}"

    @classmethod
    def parse(cls, text: str) -> "GaussInt":
        """Parse strings like '3+2i', '-1-2i', '5', 'i', '-i', '2i'."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian integer literal")
        # split into signed terms
        terms, cur = [], ""
        for ch in s:
            if ch in "+-" and cur:
                terms.append(cur)
                cur = ch
            else:
                cur += ch
        terms.append(cur)
        a = b = 0
        seen_re = seen_im = False
        for t in terms:
            if t.endswith("i"):
                if seen_im:
                    raise ValueError(f"bad Gaussian integer literal: {text!r}")
                body = t[:-1]
                if body in ("", "+"):
                    b = 1
                elif body == "-":
                    b = -1
                else:
                    b = int(body)
                seen_im = True
            else:
                if seen_re:
                    raise ValueError(f"bad Gaussian integer literal: {text!r}")
                a = int(t)
                seen_re = True
        return cls(a, b)


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I_UNIT = GaussInt(0, 1)
UNITS = (ONE, I_UNIT, GaussInt(-1, 0), GaussInt(0, -1))


def norm(n: GaussInt) -> int:
    return n.a * n.a + n.b * n.b


def is_primary(n: GaussInt) -> bool:
    """True iff n = 1 mod (1+i)^3, i.e. (a, b) = (1, 0) or (3, 2) mod 4."""
    ra, rb = n.a & 3, n.b & 3
    return (ra == 1 and rb == 0) or (ra == 3 and rb == 2)


def primary_associate(n: GaussInt) -> GaussInt:
    """The unique primary element among the four associates of n.

    Requires odd positive norm; exactly one of n, in, -n, -in is primary.
    """
    if norm(n) % 2 == 0 or not n:
        raise ValueError(f"no primary associate: norm of {n} is even or zero")
    for _ in range(4):
        if is_primary(n):
            return n
        n = GaussInt(-n.b, n.a)  # multiply by i
    raise AssertionError("unreachable: one associate of an odd-norm element is primary")


def _round_div(x: int, n: int) -> int:
    # nearest integer to x/n for n > 0, ties toward +infinity
    return (2 * x + n) // (2 * n)


def divmod_nearest(m: GaussInt, n: GaussInt) -> tuple[GaussInt, GaussInt]:
    """Euclidean division m = q*n + r with N(r) <= N(n)/2."""
    nn = norm(n)
    if nn == 0:
        raise ZeroDivisionError("division by zero in Z[i]")
    t = m * n.conj()
    q = GaussInt(_round_div(t.a, nn), _round_div(t.b, nn))
    return q, m - q * n


def mod_nearest(m: GaussInt, n: GaussInt) -> GaussInt:
    return divmod_nearest(m, n)[1]


def divides(d: GaussInt, z: GaussInt) -> bool:
    nd = norm(d)
    if nd == 0:
        return not z
    t = z * d.conj()
    return t.a % nd == 0 and t.b % nd == 0


def exact_div(z: GaussInt, d: GaussInt) -> GaussInt:
    nd = norm(d)
    t = z * d.conj()
    if t.a % nd or t.b % nd:
        raise ValueError(f"{d} does not divide {z}")
    return GaussInt(t.a // nd, t.b // nd)


def _canonical_even(n: GaussInt) -> GaussInt:
    # unique associate with a > 0, b >= 0 (used only for even-norm gcds)
    for _ in range(4):
        if n.a > 0 and n.b >= 0:
            return n
        n = GaussInt(-n.b, n.a)
    raise AssertionError("unreachable")


def gcd(m: GaussInt, n: GaussInt) -> GaussInt:
    """Greatest common divisor, normalized primary when the norm is odd.

    Even-norm gcds (only possible when both inputs are even) are normalized
    to the associate in the closed first quadrant.
    """
    if not m and not n:
        raise ValueError("gcd(0, 0) is undefined")
    while n:
        m, n = n, mod_nearest(m, n)
    if norm(m) % 2 == 1:
        return primary_associate(m)
    return _canonical_even(m)


# ----------------------------------------------------------------------
# rational integer factorization (trial division + Brent's rho)
# ----------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    # returns a nontrivial factor of composite odd n
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        y, c, m = seed % n, (seed + 1) % n or 1, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        seed += 1


def _factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = 17
        found = False
        while d * d <= m and d < 10_000:
            if m % d == 0:
                stack.extend([d, m // d])
                found = True
                break
            d += 2
        if not found:
            g = _brent_rho(m)
            stack.extend([g, m // g])
    return out


def _sqrt_minus_one(p: int) -> int:
    """A square root of -1 mod p for a prime p = 1 mod 4."""
    for d in range(2, p):
        if pow(d, (p - 1) // 2, p) == p - 1:
            s = pow(d, (p - 1) // 4, p)
            if s * s % p != p - 1:
                raise ArithmeticError(f"{p} is not prime")
            return s
    raise ArithmeticError(f"no quadratic non-residue mod {p}")


@lru_cache(maxsize=None)
def prime_above(p: int) -> GaussInt:
    """A primary Gaussian prime of norm p, for a rational prime p = 1 mod 4."""
    if p % 4 != 1:
        raise ValueError(f"{p} does not split in Z[i]")
    s = _sqrt_minus_one(p)
    pi = gcd(GaussInt(p, 0), GaussInt(s, 1))
    if norm(pi) != p:
        raise ArithmeticError(f"splitting {p} failed")
    return pi


@dataclass(frozen=True)
class GaussFactorization:
    """unit * prod(prime^exponent), primes primary (1+i for the ramified one)."""

    unit: GaussInt
    factors: tuple[tuple[GaussInt, int], ...]

    def value(self) -> GaussInt:
        out = self.unit
        for prime, e in self.factors:
            out = out * prime**e
        return out

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def has_rational_prime_divisor(self) -> bool:
        seen_over: dict[int, int] = {}
        for prime, e in self.factors:
            np_ = norm(prime)
            if np_ == 2:
                if e >= 2:
                    return True
            elif prime.b == 0:  # inert rational prime
                return True
            else:
                seen_over[np_] = seen_over.get(np_, 0) + 1
        return any(c >= 2 for c in seen_over.values())


def factor(n: GaussInt, norm_bound: int = FACTOR_NORM_BOUND) -> GaussFactorization:
    """Factor n into a unit and primary Gaussian primes.

    The rational norm is factored first; each rational prime is then split,
    kept inert, or ramified.  Rejects zero and norms above `norm_bound`.
    """
    if not n:
        raise ValueError("cannot factor 0")
    nn = norm(n)
    if nn > norm_bound:
        raise FactorBoundError(f"norm {nn} exceeds factoring bound {norm_bound}")
    rem = n
    factors: list[tuple[GaussInt, int]] = []
    rational = _factor_int(nn)
    for p in sorted(rational):
        a = rational[p]
        if p == 2:
            pi = GaussInt(1, 1)
            for _ in range(a):
                rem = exact_div(rem, pi)
            factors.append((pi, a))
        elif p % 4 == 3:
            pi = GaussInt(-p, 0)  # primary associate of p
            e = a // 2
            for _ in range(e):
                rem = exact_div(rem, pi)
            factors.append((pi, e))
        else:
            pi = prime_above(p)
            e1 = 0
            while divides(pi, rem):
                rem = exact_div(rem, pi)
                e1 += 1
            pib = primary_associate(pi.conj())
            e2 = a - e1
            for _ in range(e2):
                rem = exact_div(rem, pib)
            if e1:
                factors.append((pi, e1))
            if e2:
                factors.append((pib, e2))
    if not rem.is_unit():
        raise ArithmeticError(f"factorization of {n} left non-unit {rem}")
    factors.sort(key=lambda t: (norm(t[0]), t[0].a, t[0].b))
    return GaussFactorization(unit=rem, factors=tuple(factors))


# ----------------------------------------------------------------------
# canonical residue system mod n
# ----------------------------------------------------------------------


def hnf_box(n: GaussInt) -> tuple[int, int, int]:
    """Hermite-normal-form data (d, e, g) for the lattice (n).

    The lattice generated by n and i*n has basis {(d, 0), (e, g)} with
    g = gcd(a, b), d = N(n)/g, 0 <= e < d; the box {x + yi : 0 <= x < d,
    0 <= y < g} is a complete residue system mod n.
    """
    if not n:
        raise ValueError("zero modulus")
    a, b = n.a, n.b
    g = math.gcd(a, b)
    d = (a * a + b * b) // g
    # lattice vector with imaginary part g: x0*(a,b) + y0*(-b,a), x0*b + y0*a = g
    g2, x0, y0 = _ext_gcd(b, a)
    assert g2 == g
    e = (x0 * a - y0 * b) % d
    return d, e, g


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    # returns (g, u, v) with u*x + v*y = g >= 0
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_canonical(z: GaussInt, n: GaussInt) -> GaussInt:
    """Reduce z into the canonical residue box of `hnf_box(n)`."""
    d, e, g = hnf_box(n)
    k = z.b // g
    x = (z.a - k * e) % d
    y = z.b - k * g
    return GaussInt(x, y)


def residues_mod(n: GaussInt) -> list[GaussInt]:
    """A complete residue system mod n of size exactly N(n)."""
    if not n:
        raise ValueError("zero modulus")
    nn = norm(n)
    if nn > 10**7:
        raise ValueError(f"residue system of size {nn} is unreasonably large")
    d, _, g = hnf_box(n)
    return [GaussInt(x, y) for y in range(g) for x in range(d)]
