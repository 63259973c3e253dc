"""Central values of quartic Dirichlet L-functions.

Two independent evaluation routes:

* `lvalue_afe` -- the approximate functional equation.  For a primitive chi
  mod q, any G even, holomorphic, bounded on |Re s| < 4 with G(0) = 1, and
  any split A*B = q,

      L(1/2+a, chi) = sum_m chi(m) m^{-1/2-a} V_{a,j}(m/A)
                      + eps(chi) X_{a,j} sum_m conj(chi)(m) m^{-1/2+a} V_{-a,j}(m/B),

  with j = chi(-1),

      V_{a,j}(x)   = (1/2 pi i) int_(2) (G(s)/s) gamma_{a,j}(s) x^{-s} ds,
      gamma_{a,j}(s) = pi^{-s/2} Gamma((1/2+a_j+a+s)/2) / Gamma((1/2+a_j+a)/2),
      a_j = (1-j)/2,    eps(chi) = i^{-a_j} q^{-1/2} tau(chi),
      X_{a,j} = (q/pi)^{-a} Gamma((1/2+a_j-a)/2) / Gamma((1/2+a_j+a)/2).

  V is evaluated by vectorized trapezoidal quadrature on a vertical line
  (shifted left of 0, plus the residue 1, when x < 1, so small x never
  suffers cancellation).  For G = 1, a = 0 the closed form
  V_j(xi) = Gamma(c_j, pi xi^2)/Gamma(c_j), c_j = 1/4 + a_j/2, is used once
  the test suite has pinned it against the quadrature.  Both m-sums carry
  certified truncation tails.

* `lvalue_direct` -- the independent oracle
  L(s, chi) = q^{-s} sum_{r=1}^{q} chi(r) zeta(s, r/q) with the Hurwitz zeta
  evaluated by Euler-Maclaurin (shift to x+K >= 30, eight Bernoulli
  corrections, certified remainder).

The main-term constant of the first-moment experiment,

    C = C0 * C1 * Z(2) / zeta_{Q(i)}(2),      C0 = pi/4,

is assembled in `constants` from rapidly convergent peeled Euler products;
the defining Mobius/Dirichlet sums survive as independent test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import gamma as _cgamma
from scipy.special import gammaincc, loggamma

from .characters import (
    QuarticCharacter,
    character_exponents,
    exponents_to_complex,
)
from .gauss_sums import dirichlet_gauss_sum, tau_closed_form
from .sieves import primes_upto
from .symbols import quartic_exponent_fast

__all__ = [
    "AFEConfig",
    "DEFAULT_AFE",
    "LValueRecord",
    "TruncationError",
    "gamma_factor",
    "v_function",
    "v_values",
    "epsilon_factor",
    "x_factor",
    "lvalue_afe",
    "lvalue_direct",
    "hurwitz_zeta",
    "hecke_l_series",
    "HeckeSeriesValue",
    "MainTermConstants",
    "constants",
    "dirichlet_beta_2",
    "zeta_qi2_euler_product",
    "c1_mobius_sum",
    "z2_dirichlet_sum",
    "clear_lfunction_caches",
]

_I_POW = np.array([1, 1j, -1, -1j], dtype=np.complex128)


class TruncationError(RuntimeError):
    """Certified truncation target unreachable within the term budget."""


@dataclass(frozen=True)
class AFEConfig:
    """Knobs of the approximate-functional-equation evaluation.

    g_choice: 'constant_one' (G = 1) or 'gaussian' (G = e^{s^2}).
    split_a:  the A in A*B = q; None means A = sqrt(q).
    truncation_eps: certified bound for each of the two m-sum tails.
    t_step / t_max: trapezoid step and cut for the contour quadrature.
    use_closed_form: allow the incomplete-gamma form of V at G = 1, a = 0.
    """

    g_choice: str = "constant_one"
    split_a: float | None = None
    truncation_eps: float = 1e-9
    t_step: float = 0.04
    t_max: float = 60.0
    use_closed_form: bool = True
    term_budget: int = 2_000_000

    def __post_init__(self):
        if self.g_choice not in ("constant_one", "gaussian"):
            raise ValueError(f"unknown G choice {self.g_choice!r}")

    def key(self) -> tuple:
        return (
            self.g_choice,
            self.split_a,
            self.truncation_eps,
            self.t_step,
            self.t_max,
            self.use_closed_form,
        )


DEFAULT_AFE = AFEConfig()


@dataclass(frozen=True)
class LValueRecord:
    """One computed L-value: conductor, generator, value, route, and a bound
    on the certified numerical error."""

    q: int
    a: int
    b: int
    value: complex
    method: str
    err_estimate: float


# ----------------------------------------------------------------------
# gamma factors and V functions
# ----------------------------------------------------------------------


def _a_j(j: int) -> int:
    if j not in (1, -1):
        raise ValueError("j must be +1 or -1")
    return (1 - j) // 2


def gamma_factor(alpha: complex, j: int, s: complex) -> complex:
    """pi^{-s/2} Gamma((1/2+a_j+alpha+s)/2) / Gamma((1/2+a_j+alpha)/2)."""
    aj = _a_j(j)
    alpha, s = complex(alpha), complex(s)
    znum = (0.5 + aj + alpha + s) / 2
    zden = (0.5 + aj + alpha) / 2
    for z in (znum, zden):
        nearest = round(z.real)
        if nearest <= 0 and abs(z - nearest) < 1e-8:
            raise ValueError(f"gamma argument {z} within 1e-8 of a pole")
    return np.pi ** (-s / 2) * _cgamma(znum) / _cgamma(zden)


@lru_cache(maxsize=64)
def _contour_nodes(c: float, t_step: float, t_max: float):
    t = np.arange(-t_max, t_max + t_step / 2, t_step)
    return c + 1j * t


@lru_cache(maxsize=256)
def _contour_weights(c: float, alpha_key: tuple, j: int, g_choice: str,
                     t_step: float, t_max: float) -> np.ndarray:
    """G(s)/s * gamma_{alpha,j}(s) * dt/(2 pi) along Re(s) = c."""
    alpha = complex(*alpha_key)
    aj = _a_j(j)
    s = _contour_nodes(c, t_step, t_max)
    G = np.exp(s * s) if g_choice == "gaussian" else 1.0
    gam = (
        np.exp(-(s / 2) * math.log(math.pi))
        * _cgamma((0.5 + aj + alpha + s) / 2)
        / _cgamma((0.5 + aj + alpha) / 2)
    )
    return G * gam / s * (t_step / (2 * math.pi))


def _v_quadrature(alpha: complex, j: int, xs: np.ndarray, g_choice: str,
                  t_step: float, t_max: float) -> np.ndarray:
    """V_{alpha,j} on an array of positive x by contour quadrature.

    For x < 1 the line is moved just left of 0 (crossing only the pole at
    s = 0, residue G(0) gamma(0) = 1), which kills the x^{-2} cancellation
    the Re(s) = 2 line would suffer.
    """
    alpha = complex(alpha)
    aj = _a_j(j)
    out = np.empty(len(xs), dtype=np.complex128)
    pole_re = -0.5 - aj - alpha.real
    c_left = max(-0.25, pole_re / 2)
    alpha_key = (alpha.real, alpha.imag)
    for left in (True, False):
        sel = xs < 1.0 if left else xs >= 1.0
        if not np.any(sel):
            continue
        c = c_left if left else 2.0
        s = _contour_nodes(c, t_step, t_max)
        w = _contour_weights(c, alpha_key, j, g_choice, t_step, t_max)
        lx = np.log(xs[sel])
        vals = np.empty(sel.sum(), dtype=np.complex128)
        chunk = 512
        for i in range(0, len(lx), chunk):
            block = np.exp(-np.outer(lx[i : i + chunk], s))
            vals[i : i + chunk] = block @ w
        if left:
            vals += 1.0
        out[sel] = vals
    return out


_V_SPLINE_CACHE: dict[tuple, tuple[CubicSpline, float, float, float]] = {}


def _v_spline(j: int, g_choice: str, t_step: float, t_max: float):
    """Dense log-x spline of V_{0,j} for G = e^{s^2}, with a validated error.

    The gaussian G makes V decay only like exp(-(log x)^2/4), so AFE sums
    need ~1e5 V values; a one-time spline over u = log x in [-16, 13] at
    du = 0.004 makes those evaluations cheap.  The spline is checked against
    direct quadrature on an offset grid and the observed max error is
    reported alongside every value.
    """
    key = (j, g_choice, t_step, t_max)
    hit = _V_SPLINE_CACHE.get(key)
    if hit is not None:
        return hit
    u = np.arange(-16.0, 13.0, 0.004)
    vals = _v_quadrature(0j, j, np.exp(u), g_choice, t_step, t_max).real
    spline = CubicSpline(u, vals)
    probe = u[500:-500:937] + 0.002
    direct = _v_quadrature(0j, j, np.exp(probe), g_choice, t_step, t_max).real
    err = float(np.max(np.abs(spline(probe) - direct)))
    entry = (spline, err, float(u[0]), float(u[-1]))
    _V_SPLINE_CACHE[key] = entry
    return entry


def v_values(alpha: complex, j: int, xs, config: AFEConfig = DEFAULT_AFE):
    """Vectorized V_{alpha,j}; returns (values, per_value_error_bound)."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs <= 0):
        raise ValueError("V is only defined for x > 0")
    alpha = complex(alpha)
    if alpha == 0 and config.g_choice == "constant_one" and config.use_closed_form:
        c = 0.25 + _a_j(j) / 2
        return gammaincc(c, math.pi * xs * xs).astype(np.complex128), 1e-13
    if alpha == 0 and config.g_choice == "gaussian" and len(xs) > 64:
        spline, err, lo, hi = _v_spline(j, config.g_choice, config.t_step, config.t_max)
        u = np.log(xs)
        if u.min() >= lo and u.max() <= hi:
            return spline(u).astype(np.complex128), max(err, 1e-13)
    return (
        _v_quadrature(alpha, j, xs, config.g_choice, config.t_step, config.t_max),
        1e-12,
    )


def v_function(alpha: complex, j: int, x: float, config: AFEConfig = DEFAULT_AFE) -> complex:
    """V_{alpha,j}(x) for a single x."""
    vals, _ = v_values(alpha, j, np.array([float(x)]), config)
    return complex(vals[0])


# ----------------------------------------------------------------------
# truncation of the AFE sums
# ----------------------------------------------------------------------

_C_GRID = (1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0, 8.0, 10.0, 14.0, 20.0, 28.0)


@lru_cache(maxsize=512)
def _ln_contour_mass(c: float, alpha_key: tuple, j: int, g_choice: str) -> float:
    """log of (1/2 pi) int |G(c+it) gamma_{alpha,j}(c+it) / (c+it)| dt."""
    alpha = complex(*alpha_key)
    aj = _a_j(j)
    h = 0.05
    t = np.arange(-80.0, 80.0 + h / 2, h)
    s = c + 1j * t
    ln = (
        np.real(loggamma((0.5 + aj + alpha + s) / 2))
        - np.real(loggamma((0.5 + aj + alpha) / 2))
        - (c / 2) * math.log(math.pi)
        - 0.5 * np.log(c * c + t * t)
    )
    if g_choice == "gaussian":
        ln = ln + (c * c - t * t)
    m = float(np.max(ln))
    return m + math.log(float(np.sum(np.exp(ln - m)))) + math.log(h) - math.log(2 * math.pi)


def _cutoff_closed_form(A: float, eps: float, j: int) -> tuple[int, float]:
    # G = 1, alpha = 0: V_j(xi) <= (pi xi^2)^{c-1} e^{-pi xi^2} / Gamma(c), c <= 3/4
    c = 0.25 + _a_j(j) / 2
    gc = math.gamma(c)
    M = max(int(A * math.sqrt(math.log(1 / eps) / math.pi)), 8)
    while True:
        xi2 = math.pi * ((M + 1) / A) ** 2
        f = (M + 1) ** -0.5 * xi2 ** (c - 1) * math.exp(-xi2) / gc
        rho = math.exp(-math.pi * (2 * M + 1) / (A * A))
        tail = f / (1 - rho) if rho < 1 else math.inf
        if tail <= eps:
            return M, tail
        M = int(M * 1.1) + 1


def _cutoff_contour(A: float, sigma: float, alpha: complex, j: int,
                    g_choice: str, eps: float) -> tuple[int, float]:
    # tail(M) <= K_c A^c M^{1-sigma-c} / (sigma+c-1), minimized over c
    alpha_key = (alpha.real, alpha.imag)
    ln_eps, lnA = math.log(eps), math.log(A)
    best_M, best = None, None
    for c in _C_GRID:
        lnK = _ln_contour_mass(c, alpha_key, j, g_choice)
        denom = sigma + c - 1
        if denom <= 0.05:
            continue
        lnM = (lnK + c * lnA - math.log(denom) - ln_eps) / denom
        M = max(8, int(math.exp(min(lnM, 50.0))) + 1)
        if best_M is None or M < best_M:
            tail = math.exp(lnK + c * lnA + (1 - sigma - c) * math.log(M) - math.log(denom))
            best_M, best = M, tail
    if best_M is None:
        raise TruncationError("no admissible contour for the tail bound")
    return best_M, best


def _afe_cutoff(A: float, sigma: float, alpha: complex, j: int,
                config: AFEConfig) -> tuple[int, float]:
    eps = config.truncation_eps
    if alpha == 0 and config.g_choice == "constant_one":
        M, tail = _cutoff_closed_form(A, eps, j)
    else:
        M, tail = _cutoff_contour(A, sigma, alpha, j, config.g_choice, eps)
    if M > config.term_budget:
        raise TruncationError(
            f"certified tail {eps:g} needs {M} terms (budget {config.term_budget})"
        )
    return M, tail


# ----------------------------------------------------------------------
# epsilon and X factors, AFE assembly
# ----------------------------------------------------------------------


def epsilon_factor(chi: QuarticCharacter, route: str = "closed_form") -> complex:
    """eps(chi) = i^{-a_{chi(-1)}} q^{-1/2} tau(chi)."""
    if route == "closed_form":
        tau = tau_closed_form(chi.n)
    elif route == "direct":
        tau = dirichlet_gauss_sum(chi)
    else:
        raise ValueError(f"unknown route {route!r}")
    a = (1 - chi.parity()) // 2
    return (-1j) ** a * tau / math.sqrt(chi.q)


def x_factor(alpha: complex, j: int, q: int) -> complex:
    """(q/pi)^{-alpha} Gamma((1/2+a_j-alpha)/2) / Gamma((1/2+a_j+alpha)/2);
    exactly 1 at alpha = 0."""
    alpha = complex(alpha)
    if alpha == 0:
        return 1 + 0j
    aj = _a_j(j)
    ratio = _cgamma((0.5 + aj - alpha) / 2) / _cgamma((0.5 + aj + alpha) / 2)
    return complex(np.exp(-alpha * math.log(q / math.pi)) * ratio)


def lvalue_afe(chi: QuarticCharacter, alpha: complex = 0j,
               config: AFEConfig = DEFAULT_AFE) -> LValueRecord:
    """L(1/2 + alpha, chi) by the approximate functional equation."""
    alpha = complex(alpha)
    if abs(alpha.real) >= 0.5:
        raise ValueError("the AFE requires |Re(alpha)| < 1/2")
    q, j = chi.q, chi.parity()
    A = float(config.split_a) if config.split_a else math.sqrt(q)
    B = q / A
    s1, s2 = 0.5 + alpha.real, 0.5 - alpha.real
    M1, tail1 = _afe_cutoff(A, s1, alpha, j, config)
    M2, tail2 = _afe_cutoff(B, s2, -alpha, j, config)
    e = character_exponents(chi, max(M1, M2))

    m1 = np.arange(1, M1 + 1, dtype=float)
    V1, verr1 = v_values(alpha, j, m1 / A, config)
    coeff1 = m1 ** -0.5 if alpha == 0 else np.exp(-(0.5 + alpha) * np.log(m1))
    S1 = complex(np.sum(exponents_to_complex(e[1 : M1 + 1]) * coeff1 * V1))

    m2 = np.arange(1, M2 + 1, dtype=float)
    V2, verr2 = v_values(-alpha, j, m2 / B, config)
    coeff2 = m2 ** -0.5 if alpha == 0 else np.exp(-(0.5 - alpha) * np.log(m2))
    e2 = e[1 : M2 + 1]
    conj_vals = np.where(e2 < 0, 0, _I_POW[(-e2) & 3])
    S2 = complex(np.sum(conj_vals * coeff2 * V2))

    L = S1 + epsilon_factor(chi) * x_factor(alpha, j, q) * S2
    err = tail1 + tail2 + 2.0 * (verr1 * math.sqrt(M1) + verr2 * math.sqrt(M2)) + 1e-12
    return LValueRecord(q=q, a=chi.n.a, b=chi.n.b, value=L, method="afe",
                        err_estimate=err)


# ----------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin, and the direct oracle
# ----------------------------------------------------------------------

_B2J_OVER_FACT = tuple(
    b / math.factorial(2 * j)
    for j, b in enumerate(
        (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510),
        start=1,
    )
)
_B18_OVER_18F = (43867 / 798) / math.factorial(18)


def hurwitz_zeta(s: complex, x, shift: float = 30.0):
    """zeta(s, x) on an array of x in (0, 1], with a certified remainder.

    Euler-Maclaurin: shift until the argument exceeds `shift`, keep eight
    Bernoulli corrections, and bound the remainder by the first omitted
    term times (|s| + 17)/(Re s + 17).
    Returns (values, remainder_bound).
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x <= 0):
        raise ValueError("hurwitz_zeta requires x > 0")
    s = complex(s)
    if abs(s - 1) < 1e-8:
        raise ValueError("pole at s = 1")
    if s.real <= -16:
        raise ValueError("Re(s) too small for the certified remainder")
    K = max(0, int(math.ceil(shift - float(x.min()))))
    base = x[None, :] + np.arange(K)[:, None]
    head = np.sum(base ** (-s), axis=0)
    X = x + K
    out = head + X ** (1 - s) / (s - 1) + 0.5 * X ** (-s)
    rf = s
    Xp = X ** (-s - 1)
    for jj, coef in enumerate(_B2J_OVER_FACT, start=1):
        out = out + coef * rf * Xp
        rf = rf * (s + 2 * jj - 1) * (s + 2 * jj)
        Xp = Xp / (X * X)
    # rf is now (s)_17
    Xmin = float(X.min())
    remainder = (
        _B18_OVER_18F
        * abs(rf)
        * Xmin ** (-s.real - 17)
        * (abs(s) + 17)
        / (s.real + 17)
    )
    return out, float(remainder)


def lvalue_direct(chi: QuarticCharacter, s: complex = 0.5) -> LValueRecord:
    """L(s, chi) = q^{-s} sum_r chi(r) zeta(s, r/q): the independent oracle."""
    s = complex(s)
    q = chi.q
    e = character_exponents(chi, q)[1:]
    mask = e >= 0
    xs = (np.arange(1, q + 1, dtype=float) / q)[mask]
    zvals, rem = hurwitz_zeta(s, xs)
    vals = _I_POW[e[mask]]
    scale = q ** (-s)
    L = complex(scale * np.sum(vals * zvals))
    err = abs(scale) * len(xs) * (rem + 1e-13 * float(np.max(np.abs(zvals))))
    return LValueRecord(q=q, a=chi.n.a, b=chi.n.b, value=L, method="direct",
                        err_estimate=err)


# ----------------------------------------------------------------------
# Hecke L-series in the region of absolute convergence
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class HeckeSeriesValue:
    value: complex
    tail_bound: float
    cutoff: int
    terms: int


def hecke_l_series(m: int, s: complex, cutoff: int = 100_000) -> HeckeSeriesValue:
    """Truncated L(s, psi_m) = sum_{n primary} (m/n)_4 N(n)^{-s}, Re(s) > 1.1."""
    from .gauss_sums import _primary_points_arrays, primary_count_bound_constant

    s = complex(s)
    if s.real < 1.1:
        raise ValueError("hecke_l_series needs Re(s) >= 1.1 (continuation out of scope)")
    if cutoff < 1000:
        raise ValueError("cutoff must be at least 10^3 (tail-bound validity)")
    qs, As, Bs = _primary_points_arrays(cutoff)
    exps = np.empty(len(qs), dtype=np.int64)
    for i in range(len(qs)):
        exps[i] = quartic_exponent_fast(m, 0, int(As[i]), int(Bs[i]))
    vals = np.where(exps < 0, 0, _I_POW[exps & 3])
    terms = vals * qs.astype(float) ** (-s)
    total = complex(math.fsum(terms.real), math.fsum(terms.imag))
    sigma = s.real
    c = primary_count_bound_constant()
    tail = c * sigma / (sigma - 1) * cutoff ** (1 - sigma)
    return HeckeSeriesValue(value=total, tail_bound=tail, cutoff=cutoff,
                            terms=int(np.sum(exps >= 0)))


# ----------------------------------------------------------------------
# the main-term constant
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class MainTermConstants:
    c0: float
    c1: float
    zeta_qi_2: float
    z2: float
    c: float
    c1_tail: float
    z2_tail: float
    prime_bound: int

    def as_dict(self) -> dict:
        return {
            "C0": self.c0,
            "C1": self.c1,
            "zeta_Qi_2": self.zeta_qi_2,
            "Z2": self.z2,
            "C": self.c,
            "C1_tail": self.c1_tail,
            "Z2_tail": self.z2_tail,
            "prime_bound": self.prime_bound,
        }


def dirichlet_beta_2() -> float:
    """L(2, chi_{-4}) = (zeta(2, 1/4) - zeta(2, 3/4)) / 16 (Catalan)."""
    vals, _ = hurwitz_zeta(2.0, np.array([0.25, 0.75]))
    return float((vals[0] - vals[1]).real) / 16.0


@lru_cache(maxsize=8)
def constants(prime_bound: int = 300_000) -> MainTermConstants:
    """C0, C1, zeta_{Q(i)}(2), Z(2) and C = C0 C1 Z(2) / zeta_{Q(i)}(2).

    C1 = sum over d in Z, d = 1 mod 4, of mu(|d|) d^{-2}
    prod_{pi | d} (1 + N(pi)^{-1})^{-1}.  Both signs of d are essential: the
    Mobius indicator sum_{d | n, d = 1 mod 4} mu(|d|) detects 'no rational
    prime divisor' only because an inert prime p = 3 mod 4 enters through
    d = -p = 1 mod 4.  Exactly one sign of each odd squarefree |d| = m meets
    the congruence, so C1 collapses to the single Euler product
    prod_{p odd} (1 - u_p p^{-2}) with u_p = prod_{pi | p}(1 + N(pi)^{-1})^{-1},
    peeled against zeta(2) so the truncated correction converges like
    sum p^{-3}.  Z(2) collapses to
    (pi^2/9) prod_{p = 1 mod 4} (1 - 2/(p^2(p+2))).

    With these readings C agrees to ~1e-8 with the independently derived
    density constant of the k^4-diagonal,
    zeta(2) (pi/8) prod_{p=3(4)} (1-p^-2) prod_{p=1(4)} (1+(2/p)(1-p^-2))(1-1/p)^2,
    and with the lattice-count density measured by brute force.
    """
    c0 = math.pi / 4
    beta2 = dirichlet_beta_2()
    zeta_qi_2 = (math.pi**2 / 6) * beta2

    p = primes_upto(prime_bound).astype(float)
    p = p[p > 2]
    split = (p % 4) == 1
    u = np.where(split, (p / (p + 1)) ** 2, p * p / (p * p + 1))

    g_hat = (1 - u / p**2) / (1 - 1 / p**2)
    c1 = (8 / math.pi**2) * math.exp(float(np.sum(np.log(g_hat))))
    c1_tail = 3.0 * 1.05 / prime_bound**2

    w_split = 1 - 2 / (p[split] ** 2 * (p[split] + 2))
    z2 = (math.pi**2 / 9) * math.exp(float(np.sum(np.log(w_split))))
    z2_tail = 2.0 * 1.05 / prime_bound**2

    c = c0 * c1 * z2 / zeta_qi_2
    return MainTermConstants(
        c0=c0, c1=c1, zeta_qi_2=zeta_qi_2, z2=z2, c=c,
        c1_tail=c1_tail, z2_tail=z2_tail, prime_bound=prime_bound,
    )


def zeta_qi2_euler_product(prime_bound: int = 30_000_000) -> tuple[float, float]:
    """zeta_{Q(i)}(2) by its Euler product over Gaussian primes: the
    independent route (4/3) prod_split (1-p^{-2})^{-2} prod_inert (1-p^{-4})^{-1}.

    Returns (value, relative_tail_bound); the tail uses
    sum_{p > P} p^{-2} < 1.3 / (P log P).
    """
    # sieve without the cached power-of-two rounding (memory)
    size = prime_bound
    sieve = np.ones(size // 2 + 1, dtype=bool)  # odd numbers 1, 3, 5, ...
    sieve[0] = False
    i = 1
    while (2 * i + 1) ** 2 <= size:
        p = 2 * i + 1
        if sieve[i]:
            start = (p * p - 1) // 2
            sieve[start::p] = False
        i += 1
    odds = 2 * np.flatnonzero(sieve).astype(np.int64) + 1
    pf = odds.astype(float)
    split = (odds & 3) == 1
    ln = np.where(split, -2 * np.log1p(-pf**-2), -np.log1p(-pf**-4))
    value = (4.0 / 3.0) * math.exp(float(np.sum(ln)))
    tail = 3.0 * 1.3 / (prime_bound * math.log(prime_bound))
    return value, tail


def c1_mobius_sum(bound: int = 300_000, signed: bool = True) -> tuple[float, float]:
    """The defining truncated Mobius sum for C1 (coarse oracle, tail ~ 1/bound).

    With signed=True, d runs over all d = 1 mod 4 with |d| <= bound
    (exactly one sign of each odd |d| qualifies); signed=False keeps only
    positive d, for comparison with the positive-only misreading.
    """
    from .sieves import mobius_upto

    mu = mobius_upto(bound)[: bound + 1].astype(float)
    G = np.ones(bound + 1)
    for p in primes_upto(bound):
        p = int(p)
        if p == 2:
            continue
        up = (p / (p + 1)) ** 2 if p % 4 == 1 else p * p / (p * p + 1.0)
        G[p::p] *= up
    if signed:
        m = np.arange(1, bound + 1, 2)
        val = float(np.sum(mu[m] * G[m] / m.astype(float) ** 2))
    else:
        d = np.arange(1, bound + 1, 4)
        val = float(np.sum(mu[d] * G[d] / d.astype(float) ** 2))
    return val, 1.0 / bound


def z2_dirichlet_sum(bound: int = 1_000_000) -> tuple[float, float]:
    """The defining truncated Dirichlet sum for Z(2) (coarse oracle)."""
    F = np.ones(bound + 1)
    for p in primes_upto(bound):
        p = int(p)
        if p == 2 or p % 4 == 3:
            continue  # inert local weight is exactly 1
        F[p::p] *= p / (p + 2.0)
    mvals = np.arange(1, bound + 1, dtype=float)
    val = (2.0 / 3.0) * float(np.sum(F[1:] / mvals**2))
    return val, (2.0 / 3.0) / bound


def clear_lfunction_caches() -> None:
    _contour_nodes.cache_clear()
    _contour_weights.cache_clear()
    _ln_contour_mass.cache_clear()
    _V_SPLINE_CACHE.clear()
    constants.cache_clear()
