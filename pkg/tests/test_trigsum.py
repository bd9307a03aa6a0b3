import numpy as np
import pytest
from hypothesis import given, strategies as st

from torusl1.trigsum import (
    cosine_poly_points,
    cosine_poly_grid,
    cosine_poly_on_cells,
)


def _brute(coeffs, ts):
    # independent slow reference, no split products
    c = np.asarray(coeffs, dtype=float)
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    m = np.arange(c.size)
    out = c[0] + 2.0 * (np.cos(2.0 * np.pi * np.outer(ts, m[1:]))
                        @ c[1:]) if c.size > 1 else np.full(ts.shape, c[0])
    return out


coeff_lists = st.lists(st.floats(-3.0, 3.0), min_size=1, max_size=24)


@given(coeff_lists)
def test_points_match_brute_force(coeffs):
    rng = np.random.default_rng(7)
    ts = rng.uniform(-0.5, 0.5, 31)
    got = cosine_poly_points(np.array(coeffs), ts)
    assert np.allclose(got, _brute(coeffs, ts), rtol=0, atol=1e-10)


def test_points_scalar_round_trip():
    coeffs = np.array([1.0, 0.5, -0.25])
    v = cosine_poly_points(coeffs, 0.2)
    assert isinstance(v, float)
    assert v == pytest.approx(_brute(coeffs, 0.2)[0], abs=1e-12)


def test_points_chunking_consistency():
    rng = np.random.default_rng(3)
    coeffs = rng.normal(size=5000)
    ts = rng.uniform(-0.5, 0.5, 100)
    a = cosine_poly_points(coeffs, ts, m_chunk=64, t_chunk=7)
    b = cosine_poly_points(coeffs, ts)
    assert np.allclose(a, b, rtol=0, atol=1e-9)


@given(st.integers(1, 200), st.integers(1, 40))
def test_grid_matches_points(G, M):
    rng = np.random.default_rng(G * 41 + M)
    coeffs = rng.normal(size=M)
    grid = cosine_poly_grid(coeffs, G)
    ts = -0.5 + np.arange(G) / G
    direct = cosine_poly_points(coeffs, ts)
    assert np.allclose(grid, direct, rtol=0, atol=1e-10 * max(1, M))


def test_on_cells_matches_points_short_and_folded():
    rng = np.random.default_rng(11)
    for L, M in ((7, 4), (7, 40), (33, 33), (5, 128)):
        coeffs = rng.normal(size=M)
        offsets = np.array([0.0, 0.01, 0.5 / L, 0.09])
        vals = cosine_poly_on_cells(coeffs, L, offsets)
        assert vals.shape == (offsets.size, L)
        for i, x in enumerate(offsets):
            for k in (0, 1, L // 2, L - 1):
                t = k / L + x
                assert vals[i, k] == pytest.approx(
                    float(cosine_poly_points(coeffs, t)), abs=1e-9)


def test_on_cells_torus_column_order():
    # column indexing follows FFT convention: torus cell q sits at q % L
    coeffs = np.array([0.0, 1.0])
    L = 9
    vals = cosine_poly_on_cells(coeffs, L, np.array([0.003]))
    for q in (-4, -1, 0, 3):
        t = q / L + 0.003
        assert vals[0, q % L] == pytest.approx(
            float(cosine_poly_points(coeffs, t)), abs=1e-12)


def test_input_validation():
    with pytest.raises(ValueError):
        cosine_poly_grid(np.array([1.0]), 0)
    with pytest.raises(ValueError):
        cosine_poly_on_cells(np.array([1.0]), 0, np.array([0.0]))
    with pytest.raises(ValueError):
        cosine_poly_points(np.empty(0), 0.1)
