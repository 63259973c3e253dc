import math
import random

import numpy as np
import pytest
from scipy.special import zeta as scipy_zeta

from quartic_moments.characters import characters_upto
from quartic_moments.gauss_sums import dirichlet_gauss_sum
from quartic_moments.gaussint import GaussInt
from quartic_moments.lfunctions import (
    AFEConfig,
    TruncationError,
    c1_mobius_sum,
    constants,
    dirichlet_beta_2,
    epsilon_factor,
    gamma_factor,
    hecke_l_series,
    hurwitz_zeta,
    lvalue_afe,
    lvalue_direct,
    v_function,
    v_values,
    x_factor,
    z2_dirichlet_sum,
    zeta_qi2_euler_product,
)
from quartic_moments.sieves import factorize_small

G = GaussInt


# ----------------------------------------------------------------------
# gamma factor and X factor
# ----------------------------------------------------------------------


def test_gamma_factor_examples():
    assert gamma_factor(0, 1, 0) == 1
    assert abs(gamma_factor(0.1 + 0.2j, -1, 0) - 1) < 1e-14
    # a_{+1} = 0, a_{-1} = 1: check through the recurrence Gamma(z+1) = z Gamma(z)
    val = gamma_factor(0, 1, 2)
    expect = (1 / math.pi) * 0.25  # pi^{-1} Gamma(5/4)/Gamma(1/4) = (1/4)/pi
    assert abs(val - expect) < 1e-12
    val_m = gamma_factor(0, -1, 2)
    expect_m = (1 / math.pi) * 0.75  # Gamma(7/4)/Gamma(3/4) = 3/4
    assert abs(val_m - expect_m) < 1e-12
    with pytest.raises(ValueError):
        gamma_factor(0, 1, -0.5)  # pole of the numerator Gamma
    with pytest.raises(ValueError):
        gamma_factor(0, 2, 1.0)


def test_x_factor():
    assert x_factor(0, 1, 17) == 1
    assert x_factor(0, -1, 5) == 1
    # reflection: X_{alpha} X_{-alpha} = 1
    for alpha in (0.1, 0.2 + 0.3j, -0.15 + 1j):
        for j in (1, -1):
            prod = x_factor(alpha, j, 13) * x_factor(-alpha, j, 13)
            assert abs(prod - 1) < 1e-12


# ----------------------------------------------------------------------
# V functions
# ----------------------------------------------------------------------


def test_v_examples():
    assert abs(v_function(0, 1, 0.001) - 1) < 0.05
    assert abs(v_function(0, 1, 50.0)) <= 1e-15
    q = AFEConfig(use_closed_form=False)
    assert abs(v_function(0, 1, 1.0, q) - v_function(0, 1, 1.0)) < 1e-10


def test_v_closed_form_vs_quadrature_grid():
    grid = np.logspace(-6, math.log10(50.0), 50)
    for j in (1, -1):
        closed, _ = v_values(0, j, grid, AFEConfig())
        quad, _ = v_values(0, j, grid, AFEConfig(use_closed_form=False))
        assert np.max(np.abs(closed - quad)) <= 1e-10


def test_v_gaussian_spline_matches_quadrature():
    cfg = AFEConfig(g_choice="gaussian")
    xs = np.exp(np.linspace(-10, 8, 300))  # > 64lim triggers the spline
    sp, err = v_values(0, 1, xs, cfg)
    direct, _ = v_values(0, 1, xs[::7], AFEConfig(g_choice="gaussian", use_closed_form=False))
    assert np.max(np.abs(sp[::7] - direct)) < max(5 * err, 1e-9)


def test_v_rejects_nonpositive():
    with pytest.raises(ValueError):
        v_function(0, 1, 0.0)


# ----------------------------------------------------------------------
# epsilon factor
# ----------------------------------------------------------------------


def test_epsilon_factor():
    for chi in characters_upto(300):
        e1 = epsilon_factor(chi)
        assert abs(abs(e1) - 1) < 1e-9
        e2 = epsilon_factor(chi, route="direct")
        assert abs(e1 - e2) < 1e-9
    # a_{chi(-1)} = 0 for even chi: q = 17 is an even-family conductor
    chi17 = [c for c in characters_upto(17) if c.q == 17][0]
    assert chi17.parity() == 1
    tau = dirichlet_gauss_sum(chi17)
    assert abs(epsilon_factor(chi17, route="direct") - tau / math.sqrt(17)) < 1e-12


# ----------------------------------------------------------------------
# AFE vs the direct oracle
# ----------------------------------------------------------------------


def test_afe_matches_direct_sample():
    for chi in characters_upto(150):
        ref = lvalue_direct(chi, 0.5)
        rec = lvalue_afe(chi)
        assert abs(rec.value - ref.value) < 1e-6
        assert rec.method == "afe" and ref.method == "direct"
        assert rec.err_estimate < 1e-6


def test_afe_split_and_g_invariance_sample():
    import os

    count = 100 if os.environ.get("QUARTIC_EXHAUSTIVE") else 24
    rng = random.Random(77)
    chars = characters_upto(2000)
    sample = rng.sample(chars, count)
    for chi in sample:
        base = lvalue_afe(chi).value
        alt_split = lvalue_afe(chi, 0j, AFEConfig(split_a=2 * math.sqrt(chi.q))).value
        assert abs(base - alt_split) < 1e-6
        gauss = lvalue_afe(chi, 0j, AFEConfig(g_choice="gaussian", truncation_eps=1e-7)).value
        assert abs(base - gauss) < 1e-6


def test_afe_rejects_bad_alpha_and_budget():
    chi = characters_upto(5)[0]
    with pytest.raises(ValueError):
        lvalue_afe(chi, 0.6)
    with pytest.raises(TruncationError):
        lvalue_afe(chi, 0j, AFEConfig(term_budget=3))


def test_afe_at_shifted_alpha():
    # AFE identity holds off-center too: compare against the Hurwitz oracle
    chi = [c for c in characters_upto(13) if c.q == 13][0]
    for alpha in (0.25, -0.3, 0.1 + 0.5j):
        rec = lvalue_afe(chi, alpha, AFEConfig(truncation_eps=1e-8))
        ref = lvalue_direct(chi, 0.5 + alpha)
        assert abs(rec.value - ref.value) < 1e-6


def test_direct_oracle_properties():
    chi = [c for c in characters_upto(5) if c.q == 5][0]
    rec = lvalue_direct(chi, 0.5)
    assert np.isfinite(rec.value.real)
    conj = lvalue_direct(chi.conjugate(), 0.5)
    assert abs(conj.value - rec.value.conjugate()) < 1e-10
    assert abs(abs(conj.value) - abs(rec.value)) < 1e-10


# ----------------------------------------------------------------------
# Hurwitz zeta
# ----------------------------------------------------------------------


def test_hurwitz_zeta_against_scipy():
    xs = np.array([0.1, 0.25, 0.5, 0.75, 1.0])
    for s in (2.0, 3.5, 1.5):
        vals, rem = hurwitz_zeta(s, xs)
        assert rem < 1e-12
        assert np.max(np.abs(vals.real - scipy_zeta(s, xs))) < 1e-10


def test_hurwitz_zeta_series_identity():
    # zeta(s, x) - zeta(s, x+1) = x^{-s}, also for s < 1 and complex s
    for s in (0.5, 0.5 + 2j, -1.5):
        v1, _ = hurwitz_zeta(s, np.array([0.3]))
        v2, _ = hurwitz_zeta(s, np.array([1.3]))
        assert abs((v1[0] - v2[0]) - 0.3 ** (-complex(s))) < 1e-10


def test_hurwitz_zeta_guards():
    with pytest.raises(ValueError):
        hurwitz_zeta(1.0, np.array([0.5]))
    with pytest.raises(ValueError):
        hurwitz_zeta(2.0, np.array([0.0]))


# ----------------------------------------------------------------------
# Hecke L-series
# ----------------------------------------------------------------------


def test_hecke_l_series_principal_case():
    zeta2 = constants().zeta_qi_2
    for k in (1, 2):
        got = hecke_l_series(k**4, 2.0, cutoff=50_000)
        corr = 1 - 0.25
        for p in factorize_small(k):
            if p % 4 == 1:
                corr *= (1 - p**-2.0) ** 2
            elif p != 2:
                corr *= 1 - float(p * p) ** -2.0
        assert abs(got.value.real - zeta2 * corr) < 1e-3
        assert abs(got.value.imag) < 1e-10


def test_hecke_l_series_stability_and_guard():
    a = hecke_l_series(2, 2.0, cutoff=10_000)
    b = hecke_l_series(2, 2.0, cutoff=40_000)
    assert abs(a.value - b.value) <= a.tail_bound + b.tail_bound
    with pytest.raises(ValueError):
        hecke_l_series(2, 1.05)


# ----------------------------------------------------------------------
# constants
# ----------------------------------------------------------------------


def test_constants_values():
    c = constants()
    assert c.c0 == math.pi / 4
    assert abs(c.zeta_qi_2 - 1.5067030099229) < 1e-10
    assert c.c > 0
    assert 0 < c.c1 < 1
    assert c.z2 > 1


def test_constants_against_defining_sums():
    c = constants()
    v, tail = c1_mobius_sum(200_000)
    assert abs(v - c.c1) <= tail + 1e-8
    v2, tail2 = z2_dirichlet_sum(400_000)
    assert abs(v2 - c.z2) <= tail2 + 1e-8
    # positive-only misreading differs by far more than the tails
    vpos, _ = c1_mobius_sum(200_000, signed=False)
    assert abs(vpos - c.c1) > 0.1


def test_constants_truncation_consistency():
    a = constants(300_000)
    b = constants(1_000_000)
    assert abs(a.c - b.c) / b.c <= 1e-6


def test_zeta_qi2_two_routes():
    ref = (math.pi**2 / 6) * dirichlet_beta_2()
    val, tail = zeta_qi2_euler_product(4_000_000)
    assert abs(val - ref) / ref < 3e-8
    assert tail < 1e-7


def test_dirichlet_beta_2_is_catalan():
    assert abs(dirichlet_beta_2() - 0.915965594177219015) < 1e-12
