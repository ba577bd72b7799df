import numpy as np
import pytest
from hypothesis import given, strategies as st

from halfspec.errors import SpectrumHit, WindowTooWide
from halfspec.operator import (
    apply_A, resolvent, resolvent_multipliers, scale_norm_bound_check, solve_bvp, solve_bvp_full,
)
from halfspec.transform import GridSamples, ModeWindow, TwistedCoeffs, forward, inverse, psi

from conftest import random_coeffs

W = ModeWindow(8)


def test_apply_A_deltas():
    assert apply_A(TwistedCoeffs.delta(W, 0))[0] == 0.5
    assert apply_A(TwistedCoeffs.delta(W, -1))[-1] == -0.5


@given(st.integers(0, 2**32 - 1))
def test_kernel_free_lower_bound(seed):
    c = TwistedCoeffs(W, random_coeffs(np.random.default_rng(seed), W.K))
    Ac = apply_A(c)
    assert Ac.l2_norm() >= 0.5 * c.l2_norm() * (1 - 1e-15)
    assert Ac.l2_norm() <= (W.K - 0.5) * c.l2_norm() * (1 + 1e-15)


def test_resolvent_at_zero_doubles_psi0():
    assert resolvent(TwistedCoeffs.delta(W, 0), 0)[0] == 2


def test_resolvent_multiplier_decay_at_i():
    m = resolvent_multipliers(ModeWindow(200), 1j)
    f = ModeWindow(200).frequencies
    np.testing.assert_allclose(np.abs(m), 1 / np.sqrt(f ** 2 + 1), rtol=1e-15)
    assert np.abs(m[0]) < 0.01


def test_resolvent_hits_spectrum():
    with pytest.raises(SpectrumHit) as info:
        resolvent(TwistedCoeffs.delta(W, 0), 0.5)
    assert info.value.k == 0
    # outside the window the same value is allowed
    resolvent(TwistedCoeffs.delta(ModeWindow(2), 0), 10.5)
    with pytest.raises(SpectrumHit):
        resolvent(TwistedCoeffs.delta(W, 0), 0.5 + 1e-11)
    resolvent(TwistedCoeffs.delta(W, 0), 0.5 + 1e-6, delta_min=1e-7)


@pytest.mark.parametrize("lam", [0, 1j, 2 + 3j, 0.49])
def test_resolvent_identity(lam, rng):
    c = TwistedCoeffs(W, random_coeffs(rng, W.K))
    r = resolvent(c, lam)
    back = apply_A(r).values - lam * r.values
    assert np.max(np.abs(back - c.values)) <= 1e-13 * np.abs(c.values).max()


@pytest.mark.parametrize("lam", [0, 1j, 2 + 3j, 0.49])
def test_resolvent_decay_beyond_threshold(lam):
    w = ModeWindow(64)
    m = np.abs(resolvent_multipliers(w, lam))
    far = np.abs(w.frequencies) >= 2 * (1 + abs(lam))
    pos = far & (w.frequencies > 0)
    neg = far & (w.frequencies < 0)
    assert np.all(np.diff(m[pos]) < 0)
    assert np.all(np.diff(m[neg]) > 0)
    assert np.all(m[far] * np.abs(w.frequencies[far]) <= 2.0)


@pytest.mark.parametrize("K", [1, 2, 8, 32, 64])
def test_truncation_nonsingular(K):
    w = ModeWindow(K)
    M = np.diag(w.frequencies)
    assert np.linalg.matrix_rank(M) == 2 * K
    assert np.min(np.abs(np.linalg.eigvalsh(M))) == 0.5


def test_solve_exp_pi():
    g = GridSamples.from_function(lambda x: np.exp(1j * np.pi * x), 128)
    sol = solve_bvp_full(g, ModeWindow(32))
    assert np.max(np.abs(sol.u.values - 2 * np.exp(1j * np.pi * g.x))) <= 1e-12
    assert sol.antiperiodicity_gap <= 1e-12
    assert sol.residual <= 1e-12


def test_solve_random_band_limited(rng):
    w = ModeWindow(16)
    g = inverse(TwistedCoeffs(w, random_coeffs(rng, 16)), 64)
    u = solve_bvp(g, w)
    a_u, a_g = forward(u, w).values, forward(g, w).values
    assert np.max(np.abs(a_u * w.frequencies - a_g)) <= 1e-13 * np.abs(a_g).max()
    sol = solve_bvp_full(g, w)
    assert sol.residual <= 1e-12
    assert sol.antiperiodicity_gap <= 1e-12 * np.abs(a_g).sum()


def test_solve_propagates_nyquist():
    with pytest.raises(WindowTooWide):
        solve_bvp(GridSamples(np.ones(8)), ModeWindow(8))


def test_bound_check_examples():
    lhs, rhs = scale_norm_bound_check(TwistedCoeffs.delta(W, 0), 0)
    assert lhs == pytest.approx(0.5, abs=1e-15)
    assert rhs == pytest.approx(np.sqrt(1.25), abs=1e-15)
    assert scale_norm_bound_check(TwistedCoeffs.zeros(W), 1) == (0.0, 0.0)
    big = ModeWindow(10**6)
    k = big.K - 1
    c = TwistedCoeffs.delta(big, k)
    lhs, rhs = scale_norm_bound_check(c, 0)
    f = k + 0.5
    assert lhs / rhs == pytest.approx(f / np.sqrt(1 + f * f), rel=1e-12)
    assert 1 - 1e-12 < lhs / rhs < 1


@given(st.integers(0, 2**32 - 1), st.sampled_from([-2, -1, 0, 1, 2, 0.5, -3.7]))
def test_bound_holds(seed, s):
    c = TwistedCoeffs(W, random_coeffs(np.random.default_rng(seed), W.K))
    lhs, rhs = scale_norm_bound_check(c, s)
    assert lhs <= rhs
