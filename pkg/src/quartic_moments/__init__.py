"""Quartic Dirichlet characters over Z[i]: symbols, Gauss sums, central
L-values, and moment experiments."""

from .gaussint import (
    GaussInt,
    GaussFactorization,
    factor,
    gcd,
    is_primary,
    norm,
    primary_associate,
    residues_mod,
)
from .symbols import (
    QuarticValue,
    quadratic_symbol,
    quartic_symbol,
    quartic_symbol_fast,
    supplement_i,
    supplement_one_plus_i,
)
from .characters import (
    HeckeCharacter,
    QuarticCharacter,
    char_eval,
    characters_upto,
    enumerate_generators,
    enumerate_range,
    hecke_eval,
    verify_correspondence,
)
from .gauss_sums import (
    additive_char,
    dirichlet_gauss_sum,
    gauss_average,
    gauss_sum,
    gauss_sum_twisted,
    h_series,
    tau_closed_form,
)
from .lfunctions import (
    AFEConfig,
    LValueRecord,
    TruncationError,
    constants,
    epsilon_factor,
    gamma_factor,
    hecke_l_series,
    hurwitz_zeta,
    lvalue_afe,
    lvalue_direct,
    v_function,
    x_factor,
)
from .moments import (
    first_moment,
    nonvanishing_count,
    second_moment,
    sieve_ratio_quadratic,
    sieve_ratio_quartic,
)
from .weights import WeightFunction, bump_weight

__version__ = "0.1.0"


def clear_all_caches() -> None:
    """Reset every in-process memo (used by determinism re-runs)."""
    from .characters import clear_character_caches
    from .gauss_sums import clear_gauss_caches
    from .lfunctions import clear_lfunction_caches
    from .moments import clear_moment_caches

    clear_character_caches()
    clear_gauss_caches()
    clear_lfunction_caches()
    clear_moment_caches()
