import numpy as np
import pytest
from hypothesis import given, strategies as st

from halfspec.scale import embedding_tail_norm, rayleigh_search, scale_norm, tail_window, weight
from halfspec.transform import ModeWindow, TwistedCoeffs

from conftest import random_coeffs


def test_weight_examples():
    assert weight(0, 1) == pytest.approx(1.25, abs=1e-15)
    assert weight(-1, 1) == pytest.approx(1.25, abs=1e-15)
    assert weight(3, -2) == pytest.approx(1 / 175.5625, rel=1e-14)
    assert 1 / 175.5625 == pytest.approx((1 + 3.5 ** 2) ** -2, rel=1e-15)


def test_weight_extreme_s_finite():
    assert np.isfinite(weight(30, 50)) and weight(30, -50) > 0


def test_scale_norm_examples():
    w = ModeWindow(4)
    d = TwistedCoeffs.delta(w, 0)
    assert scale_norm(d, 0).value == pytest.approx(1.0, abs=1e-15)
    assert scale_norm(d, 1).value == pytest.approx(1.1180339887, abs=1e-10)
    assert scale_norm(TwistedCoeffs.zeros(w), 2).value == 0


def test_scale_norm_large_s_no_overflow():
    c = TwistedCoeffs.delta(ModeWindow(100), 99, 1e-30)
    v = scale_norm(c, 50).value
    expected = np.exp(25 * np.log1p(99.5 ** 2) - 30 * np.log(10))
    assert v == pytest.approx(expected, rel=1e-12)


@given(st.integers(1, 30), st.integers(0, 2**32 - 1))
def test_norm_equivalence_and_monotone(K, seed):
    c = TwistedCoeffs(ModeWindow(K), random_coeffs(np.random.default_rng(seed), K))
    direct = np.sqrt(np.sum(np.abs(c.values) ** 2))
    assert abs(scale_norm(c, 0).value - direct) <= 1e-14 * direct
    vals = [scale_norm(c, s).value for s in (-1, 0, 1, 2)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    # direct weighted sums as an independent check
    for s, v in zip((-1, 0, 1, 2), vals):
        ref = np.sqrt(np.sum((1 + c.window.frequencies ** 2) ** s * np.abs(c.values) ** 2))
        assert v == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("N,expected", [(0, 0.8944271910), (10, 0.0948)])
def test_tail_norm_values(N, expected):
    assert embedding_tail_norm(N) == pytest.approx(expected, abs=1e-4 if N else 1e-10)


def test_tail_norm_decreases():
    vals = [embedding_tail_norm(n) for n in (100, 1000, 10_000)]
    assert vals[0] > vals[1] > vals[2] > 0
    assert embedding_tail_norm(5, 0) == embedding_tail_norm(5, 7.3)


@pytest.mark.parametrize("N", [0, 10])
def test_tail_random_sequences_bounded(N, rng):
    # 10^4 random tail sequences never exceed the formula; the extremal mode attains it
    bound = embedding_tail_norm(N)
    w, pos = tail_window(N)
    best = 0.0
    for _ in range(10_000 // 20):
        vals = np.zeros(w.size, dtype=complex)
        vals[pos] = rng.standard_normal(pos.size) * rng.exponential(size=pos.size) ** 3
        c = TwistedCoeffs(w, vals)
        q = scale_norm(c, 0).value / scale_norm(c, 1).value
        assert q <= bound * (1 + 1e-14)
        best = max(best, q)
    c = TwistedCoeffs.delta(w, N)
    assert scale_norm(c, 0).value / scale_norm(c, 1).value == pytest.approx(bound, rel=1e-14)


def test_rayleigh_search_matches(rng):
    for N in (0, 10, 100):
        assert abs(rayleigh_search(N, 0.5, rng=rng, iters=1500) - embedding_tail_norm(N)) <= 1e-3
