"""Half-integer Fourier transform on [0, 1).

The twisted basis is psi_k(x) = exp(2 pi i (k + 1/2) x).  On a uniform grid
x_j = j/N the coefficient map reduces to an ordinary DFT of the pre-twisted
samples f_j exp(-i pi x_j), which is what `forward` evaluates.  A direct
O(NK) route is kept in `forward_direct` as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameter, WindowTooWide


def _frozen(values, dtype=complex) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ModeWindow:
    """Symmetric window of mode indices k = -K, ..., K-1.

    The frequencies k + 1/2 over the window are exactly +-1/2, ..., +-(K-1/2).
    """

    K: int

    def __post_init__(self):
        if int(self.K) != self.K or self.K < 1:
            raise BadParameter(f"half width K must be a positive integer, got {self.K!r}")
        object.__setattr__(self, "K", int(self.K))

    @property
    def size(self) -> int:
        return 2 * self.K

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.K, self.K)

    @property
    def frequencies(self) -> np.ndarray:
        return self.indices + 0.5

    def position(self, k: int) -> int:
        """Array position of mode k."""
        if not -self.K <= k < self.K:
            raise BadParameter(f"mode {k} outside window [-{self.K}, {self.K - 1}]")
        return k + self.K

    def __contains__(self, k) -> bool:
        return -self.K <= k < self.K


@dataclass(frozen=True)
class TwistedCoeffs:
    window: ModeWindow
    values: np.ndarray

    def __post_init__(self):
        vals = _frozen(self.values)
        if vals.shape != (self.window.size,):
            raise BadParameter(
                f"expected {self.window.size} coefficients for K={self.window.K}, got shape {vals.shape}"
            )
        object.__setattr__(self, "values", vals)

    @classmethod
    def zeros(cls, window: ModeWindow) -> "TwistedCoeffs":
        return cls(window, np.zeros(window.size, dtype=complex))

    @classmethod
    def delta(cls, window: ModeWindow, k: int, scale: complex = 1.0) -> "TwistedCoeffs":
        vals = np.zeros(window.size, dtype=complex)
        vals[window.position(k)] = scale
        return cls(window, vals)

    def __getitem__(self, k: int) -> complex:
        return complex(self.values[self.window.position(k)])

    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2)))


@dataclass(frozen=True)
class GridSamples:
    """Samples f(x_j) at x_j = j/N, j = 0..N-1."""

    values: np.ndarray

    def __post_init__(self):
        vals = _frozen(self.values)
        if vals.ndim != 1 or vals.size < 1:
            raise BadParameter("grid samples must be a non-empty 1-d array")
        object.__setattr__(self, "values", vals)

    @property
    def N(self) -> int:
        return self.values.size

    @property
    def x(self) -> np.ndarray:
        return np.arange(self.N) / self.N

    @classmethod
    def from_function(cls, f, N: int) -> "GridSamples":
        return cls(f(np.arange(N) / N))

    def l2_norm(self) -> float:
        """Discrete L2 norm sqrt((1/N) sum |f_j|^2)."""
        return float(np.sqrt(np.mean(np.abs(self.values) ** 2)))


def psi(k: int, x) -> np.ndarray:
    """Half-integer mode exp(2 pi i (k + 1/2) x)."""
    return np.exp(2j * np.pi * (k + 0.5) * np.asarray(x, dtype=float))


def _check_nyquist(N: int, window: ModeWindow) -> None:
    if N < 2 * window.K:
        raise WindowTooWide(N, window.K)


def twist(g: GridSamples) -> GridSamples:
    return GridSamples(np.exp(1j * np.pi * g.x) * g.values)


def untwist(g: GridSamples) -> GridSamples:
    return GridSamples(np.exp(-1j * np.pi * g.x) * g.values)


def forward(g: GridSamples, w: ModeWindow) -> TwistedCoeffs:
    """Twisted Fourier coefficients a_k = (1/N) sum_j f_j conj(psi_k(x_j))."""
    _check_nyquist(g.N, w)
    spectrum = np.fft.fft(untwist(g).values) / g.N
    return TwistedCoeffs(w, spectrum[w.indices % g.N])


def forward_direct(g: GridSamples, w: ModeWindow) -> TwistedCoeffs:
    """Same as `forward`, by explicit O(NK) summation."""
    _check_nyquist(g.N, w)
    kernel = np.exp(-2j * np.pi * np.outer(w.frequencies, g.x))
    return TwistedCoeffs(w, kernel @ g.values / g.N)


def inverse(c: TwistedCoeffs, N: int) -> GridSamples:
    """Synthesize f_j = sum_k a_k psi_k(x_j) on an N-point grid."""
    _check_nyquist(N, c.window)
    spectrum = np.zeros(N, dtype=complex)
    spectrum[c.window.indices % N] = c.values
    twisted = np.fft.ifft(spectrum) * N
    x = np.arange(N) / N
    return GridSamples(np.exp(1j * np.pi * x) * twisted)


def evaluate(c: TwistedCoeffs, x) -> np.ndarray:
    """Evaluate the trigonometric series sum_k a_k psi_k at arbitrary points.

    Unlike `inverse` this accepts off-grid points, in particular x = 1.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    return np.exp(2j * np.pi * np.outer(x, c.window.frequencies)) @ c.values


def parseval_gap(g: GridSamples, w: ModeWindow) -> float:
    """|discrete energy of g - energy captured by the window|.

    Zero for band-limited input; otherwise equals the out-of-window energy.
    """
    c = forward(g, w)
    grid_energy = float(np.mean(np.abs(g.values) ** 2))
    coeff_energy = float(np.sum(np.abs(c.values) ** 2))
    return abs(grid_energy - coeff_energy)
