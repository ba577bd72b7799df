"""Spectral flow of truncated families A + B_t, t in [0, 1].

Sign convention: an eigenvalue crossing zero upward (negative to positive)
as t increases counts +1.  The flow is defined by the endpoint formula

    sf = #{negative eigenvalues at t=0} - #{negative eigenvalues at t=1},

and the localized crossings are a diagnostic that must sum to the same value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ContinuityViolation, EndpointOnSpectrum, NotHermitian
from .transform import ModeWindow

HERMITIAN_TOL = 1e-13


def truncated_operator(w: ModeWindow) -> np.ndarray:
    """diag(k + 1/2), k = -K..K-1."""
    return np.diag(w.frequencies.astype(complex))


@dataclass(frozen=True)
class PerturbationFamily:
    """t -> B_t on the window, Hermitian, Lipschitz in operator norm.

    `support` is the largest |k + 1/2| the perturbation touches; None means
    the perturbation is diagonal-shift-like and needs no support check.
    """

    window: ModeWindow
    evaluate: Callable[[float], np.ndarray]
    lipschitz_bound: float
    support: float | None = None

    def matrix(self, t: float) -> np.ndarray:
        B = np.asarray(self.evaluate(t), dtype=complex)
        n = self.window.size
        if B.shape != (n, n):
            raise NotHermitian(f"B_t has shape {B.shape}, expected {(n, n)}")
        if np.max(np.abs(B - B.conj().T), initial=0.0) > HERMITIAN_TOL * max(1.0, np.abs(B).max()):
            raise NotHermitian(f"B_t is not Hermitian at t={t}")
        return B

    def operator(self, t: float) -> np.ndarray:
        return truncated_operator(self.window) + self.matrix(t)

    def eigenvalues(self, t: float) -> np.ndarray:
        return np.linalg.eigvalsh(self.operator(t))

    def check_support(self, tol: float = 1e-12, samples: int = 5) -> None:
        if self.support is None:
            return
        outside = np.abs(self.window.frequencies) > self.support
        for t in np.linspace(0.0, 1.0, samples):
            B = self.matrix(t)
            leak = max(np.abs(B[outside, :]).max(initial=0.0), np.abs(B[:, outside]).max(initial=0.0))
            if leak > tol:
                raise ValueError(f"perturbation leaks outside declared support at t={t}: {leak:.3g}")


def scalar_shift(w: ModeWindow, c: float) -> PerturbationFamily:
    """B_t = c t I."""
    eye = np.eye(w.size)
    return PerturbationFamily(w, lambda t: c * t * eye, abs(c))


def rank_one(w: ModeWindow, k: int, strength: float) -> PerturbationFamily:
    """B_t = strength * t * P_k, P_k the projector onto mode k."""
    P = np.zeros((w.size, w.size))
    i = w.position(k)
    P[i, i] = 1.0
    return PerturbationFamily(w, lambda t: strength * t * P, abs(strength), support=abs(k + 0.5))


def matrix_path(w: ModeWindow, start, end) -> PerturbationFamily:
    """Linear path B_t = (1 - t) start + t end."""
    M0 = np.asarray(start, dtype=complex)
    M1 = np.asarray(end, dtype=complex)
    lip = float(np.linalg.norm(M1 - M0, 2))
    return PerturbationFamily(w, lambda t: (1 - t) * M0 + t * M1, lip)


def eigencurves(fam: PerturbationFamily, n_samples: int, tol: float = 1e-10,
                t0: float = 0.0, t1: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Sorted eigenvalues on a uniform t grid.

    Returns (ts, curves) with curves[i] the ascending spectrum at ts[i].
    Consecutive samples are checked against Weyl's bound
    |lambda_j(t) - lambda_j(t')| <= L |t - t'|.
    """
    if n_samples < 2:
        raise ValueError("need at least 2 samples")
    ts = np.linspace(t0, t1, n_samples)
    curves = np.array([fam.eigenvalues(t) for t in ts])
    jumps = np.abs(np.diff(curves, axis=0)).max(axis=1)
    allowed = fam.lipschitz_bound * np.diff(ts) + tol
    bad = np.nonzero(jumps > allowed)[0]
    if bad.size:
        i = int(bad[0])
        raise ContinuityViolation(
            f"eigenvalue jump {jumps[i]:.3g} on [{ts[i]:.6g}, {ts[i + 1]:.6g}] exceeds "
            f"Lipschitz allowance {allowed[i]:.3g}"
        )
    return ts, curves


@dataclass(frozen=True)
class Crossing:
    t: float
    direction: int
    index: int

    def to_dict(self) -> dict:
        return {"t": self.t, "direction": self.direction, "index": self.index}


@dataclass(frozen=True)
class FlowResult:
    flow: int
    crossings: tuple[Crossing, ...]
    samples_used: int

    @property
    def crossing_sum(self) -> int:
        return sum(c.direction for c in self.crossings)

    def to_dict(self) -> dict:
        return {
            "flow": self.flow,
            "crossings": [c.to_dict() for c in self.crossings],
            "samples_used": self.samples_used,
        }


@dataclass
class FlowConfig:
    n_samples: int = 65
    zero_tol: float = 1e-9
    t_tol: float = 1e-9
    min_width: float = 1e-12


def _negatives(ev: np.ndarray) -> int:
    return int(np.count_nonzero(ev < 0))


def _bisect(fam: PerturbationFamily, idx: int, a: float, b: float, tol: float) -> float:
    fa = fam.eigenvalues(a)[idx]
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = fam.eigenvalues(m)[idx]
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def compute_flow(fam: PerturbationFamily, config: FlowConfig | None = None,
                 t0: float = 0.0, t1: float = 1.0) -> FlowResult:
    """Signed count of zero crossings of the spectrum of A + B_t on [t0, t1]."""
    cfg = config or FlowConfig()
    fam.check_support()
    ts, curves = eigencurves(fam, cfg.n_samples, t0=t0, t1=t1)
    for t, ev in ((ts[0], curves[0]), (ts[-1], curves[-1])):
        if np.min(np.abs(ev)) < cfg.zero_tol:
            raise EndpointOnSpectrum(f"eigenvalue within {cfg.zero_tol} of 0 at endpoint t={t}")

    counts = [_negatives(ev) for ev in curves]
    samples = len(ts)
    intervals = []
    stack = [(ts[i], ts[i + 1], counts[i], counts[i + 1]) for i in range(len(ts) - 1)]
    while stack:
        a, b, na, nb = stack.pop()
        if abs(na - nb) > 1 and b - a > cfg.min_width:
            m = 0.5 * (a + b)
            nm = _negatives(fam.eigenvalues(m))
            samples += 1
            stack.extend([(a, m, na, nm), (m, b, nm, nb)])
        elif na != nb:
            intervals.append((a, b, na, nb))

    crossings = []
    for a, b, na, nb in sorted(intervals):
        # sorted spectrum: the eigenvalues at positions min(na,nb)..max(na,nb)-1 changed sign
        for idx in range(min(na, nb), max(na, nb)):
            t_star = _bisect(fam, idx, a, b, cfg.t_tol)
            crossings.append(Crossing(float(t_star), 1 if nb < na else -1, idx))

    # tangential touches: sampled eigenvalue within zero_tol without a sign change
    for i in range(1, len(ts) - 1):
        for idx in np.nonzero(np.abs(curves[i]) < cfg.zero_tol)[0]:
            if counts[i - 1] == counts[i + 1] and not any(abs(c.t - ts[i]) < ts[1] - ts[0] for c in crossings):
                crossings.append(Crossing(float(ts[i]), 0, int(idx)))

    flow = counts[0] - counts[-1]
    return FlowResult(flow, tuple(sorted(crossings, key=lambda c: c.t)), samples)
