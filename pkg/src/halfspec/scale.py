"""Weighted coefficient norms for the half-integer Hilbert scale."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameter
from .transform import ModeWindow, TwistedCoeffs


def _log_base(freq) -> np.ndarray:
    return np.log1p(np.square(np.asarray(freq, dtype=float)))


def weight(k, s: float):
    """(1 + |k + 1/2|^2)^s, evaluated in log space."""
    out = np.exp(s * _log_base(np.asarray(k) + 0.5))
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class WeightedNorm:
    value: float
    s: float

    def to_dict(self) -> dict:
        return {"s": self.s, "value": self.value}


def scale_norm(c: TwistedCoeffs, s: float) -> WeightedNorm:
    """sqrt(sum_k (1 + |k+1/2|^2)^s |a_k|^2).

    Terms are accumulated as a log-sum-exp so that |s| of order 50 neither
    overflows nor underflows.
    """
    if not np.isfinite(s):
        raise BadParameter(f"scale index must be finite, got {s}")
    mag = np.abs(c.values)
    nz = mag > 0
    if not nz.any():
        return WeightedNorm(0.0, float(s))
    logs = s * _log_base(c.window.frequencies[nz]) + 2.0 * np.log(mag[nz])
    top = logs.max()
    log_sq = top + np.log(np.sum(np.exp(logs - top)))
    return WeightedNorm(float(np.exp(0.5 * log_sq)), float(s))


def embedding_tail_norm(N: int, s: float = 0.0) -> float:
    """Norm of the inclusion l2_{s+1} -> l2_s restricted to |k + 1/2| >= N + 1/2.

    Does not depend on s.
    """
    if N < 0:
        raise BadParameter("N must be nonnegative")
    return float((1.0 + (N + 0.5) ** 2) ** -0.5)


def tail_window(N: int, band: int = 8) -> tuple[ModeWindow, np.ndarray]:
    """Window covering the first `band` tail modes on each side of |k| > N.

    Returns the window and the array positions of the tail modes
    k = -N-band, ..., -N-1 and N, ..., N+band-1.
    """
    w = ModeWindow(N + band)
    ks = np.concatenate([np.arange(-N - band, -N), np.arange(N, N + band)])
    return w, ks + w.K


def rayleigh_search(N: int, s: float = 0.0, *, band: int = 8, iters: int = 3000,
                    rng: np.random.Generator | None = None) -> float:
    """Estimate the restricted embedding norm by random-search maximization.

    Hill-climbs the quotient ||c||_s / ||c||_{s+1} over random complex
    sequences supported on the tail band, evaluated with `scale_norm`.
    """
    rng = np.random.default_rng() if rng is None else rng
    w, pos = tail_window(N, band)
    # search over unit vectors of l2_{s+1}, i.e. a_k = b_k (1+|k+1/2|^2)^{-(s+1)/2}
    to_coeffs = weight(w.indices[pos], -(s + 1) / 2)

    def quotient(v):
        vals = np.zeros(w.size, dtype=complex)
        vals[pos] = v * to_coeffs
        c = TwistedCoeffs(w, vals)
        return scale_norm(c, s).value / scale_norm(c, s + 1).value

    best = rng.standard_normal(pos.size) + 1j * rng.standard_normal(pos.size)
    best /= np.linalg.norm(best)
    best_q = quotient(best)
    step = 0.5
    for _ in range(iters):
        trial = best + step * (rng.standard_normal(pos.size) + 1j * rng.standard_normal(pos.size))
        trial /= np.linalg.norm(trial)
        q = quotient(trial)
        if q > best_q:
            best, best_q = trial, q
            step = min(step * 1.5, 1.0)
        else:
            step = max(step * 0.9, 1e-8)
    return best_q
