import json

import numpy as np
import pytest

import quartic_moments
from quartic_moments.characters import characters_upto
from quartic_moments.lfunctions import AFEConfig, lvalue_direct
from quartic_moments.moments import (
    central_values,
    first_moment,
    nonvanishing_count,
    quartic_sieve_bound,
    second_moment,
    sieve_ratio_quadratic,
    sieve_ratio_quartic,
)
from quartic_moments.weights import bump_weight


def test_first_moment_is_essentially_real():
    rep = first_moment(500)
    assert abs(rep.moment.imag) <= 1e-6 * abs(rep.moment)
    assert rep.character_count == sum(1 for c in characters_upto(1000) if 500 < c.q < 1000)
    assert rep.predicted > 0


def test_first_moment_against_direct_oracle():
    # AFE-based M(Q) vs the Hurwitz-zeta-based M(Q), Q = 300
    rep = first_moment(300)
    oracle = first_moment(300, method="direct")
    assert oracle.method == "direct"
    assert abs(rep.moment - oracle.moment) <= 1e-4 * abs(oracle.moment)
    # and the report matches a hand-rolled direct sum
    w = bump_weight()
    chars = [c for c in characters_upto(600) if 300 < c.q < 600]
    direct = sum(lvalue_direct(c, 0.5).value * float(w(c.q / 300)) for c in chars)
    assert abs(oracle.moment - direct) < 1e-12


def test_first_moment_determinism():
    a = first_moment(200, with_per_q=True).to_dict()
    quartic_moments.clear_all_caches()
    b = first_moment(200, with_per_q=True).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_first_moment_per_q_rows_sum_to_moment():
    rep = first_moment(150, with_per_q=True)
    total = sum(complex(re, im) for _, re, im, _ in rep.per_q)
    assert abs(total - rep.moment) < 1e-9
    qs = [row[0] for row in rep.per_q]
    assert qs == sorted(qs)


def test_first_moment_worker_invariance():
    base = first_moment(150).to_dict()
    quartic_moments.clear_all_caches()
    two = first_moment(150, workers=2).to_dict()
    assert json.dumps(base, sort_keys=True) == json.dumps(two, sort_keys=True)


def test_main_term_consistency_across_truncation():
    from quartic_moments.lfunctions import constants

    w = bump_weight()
    p1 = constants(300_000).c * 500 * w.mellin_at_1
    p2 = constants(1_000_000).c * 500 * w.mellin_at_1
    assert abs(p1 - p2) <= 1e-6 * abs(p2)


def test_nonvanishing_counts():
    rep = nonvanishing_count(500)
    assert rep.count <= rep.total
    assert rep.proportion > 0.5
    smaller = nonvanishing_count(250)
    assert rep.count >= smaller.count
    with pytest.raises(ValueError):
        nonvanishing_count(500, threshold=0.0)


def test_second_moment_report():
    rep = second_moment(800, grid=(100, 200, 400, 800))
    assert rep.total > 0
    assert len(rep.growth_table) == 4
    sums = [s for _, s in rep.growth_table]
    assert sums == sorted(sums)
    assert np.isfinite(rep.fitted_exponent)
    assert rep.bound_constant > 0
    # t-shape report: the t = 1 sum within the (1+|t|)^{0.6} envelope times slack
    rep_t = second_moment(200, t=1.0, grid=(100, 200))
    base = second_moment(200, grid=(100, 200))
    assert rep_t.total <= 10 * base.total * 2 ** 0.6
    assert rep_t.total > 0


def test_sieve_quartic_basics():
    rep = sieve_ratio_quartic(64, 64, trials=8, rng_seed=3)
    assert 0 < rep.max_ratio <= 10
    assert len(rep.ratios) == 8
    again = sieve_ratio_quartic(64, 64, trials=8, rng_seed=3)
    assert rep.ratios == again.ratios
    other = sieve_ratio_quartic(64, 64, trials=8, rng_seed=4)
    assert rep.ratios != other.ratios
    with pytest.raises(ValueError):
        sieve_ratio_quartic(64, 64, trials=0)


def test_sieve_bound_shapes():
    assert quartic_sieve_bound(64, 64) == min(
        64**1.5 + 64,
        64**1.25 + 8 * 64,
        64 ** (7 / 6) + 64 ** (2 / 3) * 64,
        64 + 64 ** (1 / 3) * 64 ** (5 / 3) + 64 ** (7 / 3),
    )


def test_sieve_quadratic_basics_and_diagonal():
    rep = sieve_ratio_quadratic(48, 48, trials=6, rng_seed=5, matrix_limit=48)
    assert 0 < rep.max_ratio <= 10
    # single nonzero coefficient: LHS <= (#m points) <= M * |a|^2 scale trivially
    from quartic_moments.moments import _quadratic_symbol_matrix

    m_norms, n_norms, S = _quadratic_symbol_matrix(48, 48)
    lhs = float(np.sum(S[:, 0].astype(float) ** 2))
    assert lhs <= (48 + 48) * 1
    # symmetry of the protocol under swapping the roles of the ranges
    rep_swap = sieve_ratio_quadratic(32, 64, trials=3, rng_seed=5, matrix_limit=64)
    rep_orig = sieve_ratio_quadratic(64, 32, trials=3, rng_seed=5, matrix_limit=64)
    assert rep_swap.max_ratio > 0 and rep_orig.max_ratio > 0


def test_central_values_sorted_and_memoized():
    chars = characters_upto(100)
    recs = central_values(chars, 0j, AFEConfig())
    keys = [(r.q, r.a, r.b) for r in recs]
    assert keys == sorted(keys)
    recs2 = central_values(chars, 0j, AFEConfig())
    assert [r.value for r in recs2] == [r.value for r in recs]
