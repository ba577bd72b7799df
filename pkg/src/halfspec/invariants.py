"""Zeta-regularized determinant and heat trace of |A~|.

The spectrum of |A~| is {n + 1/2 : n >= 0}, each value twice.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np

from .errors import BadParameter
from .special import (
    ZetaValue,
    hurwitz_zeta,
    hurwitz_zeta_deriv_at_zero,
    jacobi_theta2,
    riemann_zeta,
)

FD_STEP = 1e-5
T_MIN, T_MAX = 1e-6, 50.0
SMALL_T_MAX = 1e-2


@dataclass(frozen=True)
class SpectralZeta:
    hurwitz: ZetaValue
    riemann: ZetaValue

    @property
    def value(self) -> complex:
        return self.hurwitz.value

    @property
    def gap(self) -> float:
        return abs(self.hurwitz.value - self.riemann.value)


def spectral_zeta(s: complex) -> SpectralZeta:
    """2 zeta(s, 1/2), alongside the route 2 (2^s - 1) zeta(s)."""
    s = complex(s)
    h = hurwitz_zeta(s, 0.5)
    r = riemann_zeta(s)
    factor = 2 * (2.0 ** s - 1)
    return SpectralZeta(
        hurwitz=ZetaValue(2 * h.value, 2 * h.err),
        riemann=ZetaValue(factor * r.value, abs(factor) * r.err),
    )


class DeterminantMethod(str, Enum):
    closed_form = "closed_form"
    numerical_derivative = "numerical_derivative"


@dataclass(frozen=True)
class DeterminantReport:
    zeta_deriv_at_zero: float
    determinant: float
    method: DeterminantMethod
    cross_check_gap: float
    numerical_deriv: float

    def to_dict(self) -> dict:
        out = asdict(self)
        out["method"] = self.method.value
        return out


def spectral_zeta_deriv_fd(h: float = FD_STEP) -> float:
    """Central difference of the continued spectral zeta at s = 0."""
    return (spectral_zeta(h).value.real - spectral_zeta(-h).value.real) / (2 * h)


def zeta_determinant(method: DeterminantMethod = DeterminantMethod.closed_form) -> DeterminantReport:
    closed = 2 * hurwitz_zeta_deriv_at_zero(0.5)
    numeric = spectral_zeta_deriv_fd()
    deriv = closed if method == DeterminantMethod.closed_form else numeric
    return DeterminantReport(
        zeta_deriv_at_zero=deriv,
        determinant=math.exp(-deriv),
        method=DeterminantMethod(method),
        cross_check_gap=abs(closed - numeric),
        numerical_deriv=numeric,
    )


@dataclass(frozen=True)
class StandardOperatorZeta:
    """Zeta functions of the periodic comparison operator |i d/dx|.

    `with_zero_mode` is 1 + 2 (2 pi)^{-s} (zeta(s) - 1), counting the zero
    eigenvalue as a constant 1; `without_zero_mode` is 2 (2 pi)^{-s} zeta(s).
    """

    s: complex
    with_zero_mode: ZetaValue
    without_zero_mode: ZetaValue


def standard_operator_zeta(s: complex) -> StandardOperatorZeta:
    s = complex(s)
    z = riemann_zeta(s)
    scale = 2 * (2 * math.pi) ** (-s)
    return StandardOperatorZeta(
        s=s,
        with_zero_mode=ZetaValue(1 + scale * (z.value - 1), abs(scale) * z.err),
        without_zero_mode=ZetaValue(scale * z.value, abs(scale) * z.err),
    )


def standard_operator_report(h: float = FD_STEP) -> dict:
    """Derivatives at s = 0 of both comparison zetas and the implied determinants.

    Nothing here is asserted; the values are reported for comparison with
    the twisted operator.
    """

    def deriv(attr):
        up = getattr(standard_operator_zeta(h), attr).value.real
        down = getattr(standard_operator_zeta(-h), attr).value.real
        return (up - down) / (2 * h)

    twisted = zeta_determinant().determinant
    out = {}
    for attr in ("with_zero_mode", "without_zero_mode"):
        d = deriv(attr)
        det = math.exp(-d)
        out[attr] = {
            "zeta_at_0": getattr(standard_operator_zeta(0.0), attr).value.real,
            "zeta_deriv_at_0": d,
            "determinant": det,
            "ratio_to_twisted": det / twisted,
        }
    out["claimed_determinant"] = 2 * math.pi
    out["claimed_ratio"] = math.pi
    return out


@dataclass(frozen=True)
class HeatTraceSample:
    t: float
    direct_sum: float
    theta_value: float
    poisson_value: float

    @property
    def max_gap(self) -> float:
        vals = (self.direct_sum, self.theta_value, self.poisson_value)
        return max(abs(a - b) for a in vals for b in vals)

    def to_dict(self) -> dict:
        return asdict(self)


def _check_t(t: float, lo: float = T_MIN, hi: float = T_MAX) -> None:
    if not lo <= t <= hi:
        raise BadParameter(f"t={t} outside [{lo}, {hi}]")


def heat_trace_direct(t: float) -> float:
    """2 sum_{n>=0} exp(-t (n+1/2)^2), truncated once terms drop below 1e-18."""
    n_max = int(math.ceil(math.sqrt(-math.log(1e-18) / t))) + 1
    n = np.arange(n_max + 1, dtype=float)
    terms = np.exp(-t * (n + 0.5) ** 2)
    terms = terms[terms >= 1e-18]
    # smallest first
    return float(2 * np.sum(terms[::-1]))


def heat_trace_poisson(t: float) -> float:
    """sqrt(pi/t) (1 + 2 sum_{m>=1} (-1)^m exp(-pi^2 m^2 / t))."""
    total = 1.0
    m = 1
    while True:
        term = math.exp(-(math.pi * m) ** 2 / t)
        if term < 1e-18:
            break
        total += 2 * (-1) ** m * term
        m += 1
    return math.sqrt(math.pi / t) * total


def heat_trace(t: float) -> HeatTraceSample:
    """Tr exp(-t |A~|^2) by three routes.

    With theta_2(0, q) = 2 sum_{n>=0} q^{(n+1/2)^2} the trace equals
    theta_2(0, e^{-t}) itself.
    """
    _check_t(t)
    return HeatTraceSample(
        t=float(t),
        direct_sum=heat_trace_direct(t),
        theta_value=jacobi_theta2(math.exp(-t)),
        poisson_value=heat_trace_poisson(t),
    )


@dataclass(frozen=True)
class LeadingCoefficientFit:
    constant: float
    gap_inv_sqrt_pi: float
    gap_half: float
    gap_sqrt_pi: float
    t_grid: tuple

    def to_dict(self) -> dict:
        return asdict(self)


def heat_trace_leading_coefficient(t_grid) -> LeadingCoefficientFit:
    """Least-squares constant c in Tr ~ c / sqrt(t) over a small-t grid.

    The fit uses the direct sum only, so it is independent of the Poisson
    closed form it is compared against.
    """
    t_grid = tuple(float(t) for t in t_grid)
    if len(t_grid) < 3:
        raise BadParameter("need at least 3 points in the t grid")
    for t in t_grid:
        _check_t(t, T_MIN, SMALL_T_MAX)
    y = np.array([heat_trace_direct(t) * math.sqrt(t) for t in t_grid])
    c = float(np.mean(y))  # least squares against the constant 1
    return LeadingCoefficientFit(
        constant=c,
        gap_inv_sqrt_pi=abs(c - 1 / math.sqrt(math.pi)),
        gap_half=abs(c - 0.5),
        gap_sqrt_pi=abs(c - math.sqrt(math.pi)),
        t_grid=t_grid,
    )
