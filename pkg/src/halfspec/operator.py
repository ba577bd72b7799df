"""The diagonal operator (A a)_k = (k + 1/2) a_k on a finite mode window."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SpectrumHit
from .scale import scale_norm
from .transform import GridSamples, ModeWindow, TwistedCoeffs, evaluate, forward, inverse

DELTA_MIN = 1e-10


def apply_A(c: TwistedCoeffs) -> TwistedCoeffs:
    return TwistedCoeffs(c.window, c.window.frequencies * c.values)


def resolvent_multipliers(w: ModeWindow, lam: complex, delta_min: float = DELTA_MIN) -> np.ndarray:
    """Diagonal of (A - lam)^{-1} on the window.

    Raises SpectrumHit if lam is within `delta_min` of some k + 1/2.
    """
    gaps = w.frequencies - lam
    dist = np.abs(gaps)
    i = int(np.argmin(dist))
    if dist[i] < delta_min:
        raise SpectrumHit(int(w.indices[i]), complex(lam), float(dist[i]))
    return 1.0 / gaps


def resolvent(c: TwistedCoeffs, lam: complex = 0.0, delta_min: float = DELTA_MIN) -> TwistedCoeffs:
    return TwistedCoeffs(c.window, resolvent_multipliers(c.window, lam, delta_min) * c.values)


@dataclass(frozen=True)
class BvpSolution:
    u: GridSamples
    coeffs: TwistedCoeffs
    residual: float
    antiperiodicity_gap: float

    def report(self) -> dict:
        return {"residual": self.residual, "antiperiodicity_gap": self.antiperiodicity_gap}


def solve_bvp_full(g: GridSamples, w: ModeWindow) -> BvpSolution:
    """Solve A~ u = g in coefficient space and measure how well it holds.

    The residual is max_k |(k+1/2) a_k(u) - a_k(g)| with a_k(u) re-derived
    from the synthesized grid; the antiperiodicity gap is |u(1) + u(0)|
    with u(1) taken from the series, since x = 1 is not a grid point.
    """
    rhs = forward(g, w)
    sol = resolvent(rhs, 0.0)
    u = inverse(sol, g.N)
    residual = float(np.max(np.abs(apply_A(forward(u, w)).values - rhs.values)))
    ends = evaluate(sol, [0.0, 1.0])
    return BvpSolution(u, sol, residual, float(abs(ends[1] + ends[0])))


def solve_bvp(g: GridSamples, w: ModeWindow) -> GridSamples:
    return solve_bvp_full(g, w).u


def scale_norm_bound_check(c: TwistedCoeffs, s: float) -> tuple[float, float]:
    """(||A c||_{H^s}, ||c||_{H^{s+1}}); the first never exceeds the second."""
    return scale_norm(apply_A(c), s).value, scale_norm(c, s + 1).value
