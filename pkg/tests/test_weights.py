import numpy as np
import pytest

from quartic_moments.weights import WeightFunction, bump_weight


def test_support_and_smoothness():
    w = bump_weight()
    assert w(1.0) == 0.0 and w(2.0) == 0.0 and w(0.5) == 0.0 and w(3.0) == 0.0
    assert w(1.5) > 0
    xs = np.linspace(0.5, 2.5, 401)
    vals = w(xs)
    assert np.all(vals >= 0)
    assert vals.max() == pytest.approx(np.exp(-4.0), rel=1e-9)


def test_total_mass_two_routes():
    w = bump_weight()
    assert abs(w.fourier_at_zero() - w.mellin_at_1) <= 1e-10


def test_mellin_values():
    w = bump_weight()
    # w~(s) for s in [1, 2] interpolates between mass and first moment
    m1 = w.mellin(1.0)
    m2 = w.mellin(2.0)
    assert m1.imag == 0
    assert m1.real < m2.real < 2 * m1.real  # support in (1, 2)
    ms = w.mellin(1.0 + 1.0j)
    assert abs(ms) <= m1.real


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        WeightFunction("triangle")
