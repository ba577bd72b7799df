"""Hurwitz/Riemann zeta, log-gamma and the second Jacobi theta function.

Zeta values come from Euler-Maclaurin summation with an explicit remainder
bound (Johansson 2015, Thm. 1 form)::

    |R| <= 4 |(s)_{2p}| / (2 pi)^{2p} * (a+N)^{-(sigma+2p-1)} / (sigma+2p-1)

where p is the number of Bernoulli corrections and N the number of summed
terms.  p starts at 6 (through B_12) and N at max(20, ceil|s| + 10); both
grow until the bound falls below the target.  Left of Re(s) = -1 the
summation cancels catastrophically in double precision, and rational a is
routed through Hurwitz's functional equation instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadParameter, PoleAtOne

POLE_RADIUS = 1e-6
MAX_BERNOULLI_PAIRS = 40
_TARGET = 1e-15
FE_THRESHOLD = -1.0
MAX_FE_DENOMINATOR = 24


def _bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n (B_1 = -1/2 convention), via the Akiyama-Tanigawa recurrence."""
    out = []
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    out[1] = -out[1]
    return out


# read-only after import
BERNOULLI = tuple(_bernoulli_numbers(2 * MAX_BERNOULLI_PAIRS + 2))
# B_{2j} / (2j)! as floats, j = 0..MAX
_B2J_OVER_FACT = tuple(float(BERNOULLI[2 * j] / math.factorial(2 * j)) for j in range(MAX_BERNOULLI_PAIRS + 1))


@dataclass(frozen=True)
class ZetaValue:
    value: complex
    err: float

    @property
    def real(self) -> float:
        return self.value.real

    def to_dict(self) -> dict:
        return {"re": self.value.real, "im": self.value.imag, "err": self.err}


def _rising(s: complex, n: int) -> complex:
    out = 1.0 + 0j
    for i in range(n):
        out *= s + i
    return out


def _em_remainder(s: complex, a: float, N: int, p: int) -> float:
    sigma = s.real
    e = sigma + 2 * p - 1
    if e <= 0:
        return math.inf
    return 4 * abs(_rising(s, 2 * p)) / (2 * math.pi) ** (2 * p) * (a + N) ** (-e) / e


def _choose_terms(s: complex, a: float) -> tuple[int, int, float]:
    N = max(20, math.ceil(abs(s)) + 10)
    p = 6
    bound = _em_remainder(s, a, N, p)
    while bound > _TARGET and p < MAX_BERNOULLI_PAIRS:
        p += 2
        bound = _em_remainder(s, a, N, p)
    while bound > _TARGET and N < 100_000:
        N *= 2
        bound = _em_remainder(s, a, N, p)
    return N, p, bound


def _hurwitz_em(s: complex, a: float) -> ZetaValue:
    N, p, bound = _choose_terms(s, a)
    head_terms = np.exp(-s * np.log(a + np.arange(N, dtype=float)))
    head = head_terms.sum()
    x = a + N
    logx = math.log(x)
    tail = np.exp((1 - s) * logx) / (s - 1) + 0.5 * np.exp(-s * logx)
    corr = 0j
    scale = 0.0
    fac = s  # (s)_{2j-1}
    for j in range(1, p + 1):
        term = _B2J_OVER_FACT[j] * fac * np.exp(-(s + 2 * j - 1) * logx)
        corr += term
        scale += abs(term)
        fac *= (s + 2 * j - 1) * (s + 2 * j)
    value = complex(head + tail + corr)
    # rounding in the accumulated terms (dominant when Re(s) < 0); each power
    # x^{-s} = exp(-s log x) carries relative error ~ |s log x| eps
    amplification = 4 + abs(s) * math.log(max(x, math.e)) + abs(s.imag) * math.pi
    rounding = amplification * np.finfo(float).eps * (np.abs(head_terms).sum() + abs(tail) + scale)
    return ZetaValue(value, float(bound + rounding))


def _small_rational(a: float, max_den: int = MAX_FE_DENOMINATOR) -> Fraction | None:
    frac = Fraction(a).limit_denominator(max_den)
    return frac if abs(float(frac) - a) <= 4 * np.finfo(float).eps * max(1.0, a) else None


def _hurwitz_functional(s: complex, frac: Fraction) -> ZetaValue:
    """zeta(s, p/q) for 0 < p/q <= 1 from Hurwitz's formula.

    With w = 1 - s (Re w > 1),
    zeta(s, a) = Gamma(w) (2 pi)^{-w} [e^{-i pi w/2} F(a, w) + e^{i pi w/2} F(-a, w)],
    F(b, w) = sum_{n>=1} e^{2 pi i n b} n^{-w} = q^{-w} sum_{r=1}^{q} e^{2 pi i r b} zeta(w, r/q).
    """
    w = 1 - s
    q = frac.denominator
    b = float(frac)
    zs = [_hurwitz_em(w, r / q) for r in range(1, q + 1)]
    phases = np.exp(2j * np.pi * b * np.arange(1, q + 1))
    qw = np.exp(-w * math.log(q))
    f_plus = qw * sum(ph * z.value for ph, z in zip(phases, zs))
    f_minus = qw * sum(ph.conjugate() * z.value for ph, z in zip(phases, zs))
    log_pref = _log_gamma_complex(w) - w * math.log(2 * math.pi)
    prefactor = np.exp(log_pref)
    rot = np.exp(-0.5j * math.pi * w)
    value = complex(prefactor * (rot * f_plus + f_minus / rot))
    eps = np.finfo(float).eps
    zsum = sum(abs(z.value) for z in zs)
    zerr = sum(z.err for z in zs)
    mag = abs(prefactor) * (abs(rot) + 1 / abs(rot)) * abs(qw)
    # exponentiating a large log amplifies its rounding
    amplification = 16 + abs(log_pref) + abs(w) * (math.log(2 * math.pi) + math.pi / 2)
    err = mag * (zerr + 8 * q * eps * zsum) * (1 + amplification * eps) + amplification * eps * mag * zsum
    return ZetaValue(value, float(err))


def hurwitz_zeta(s: complex, a: float) -> ZetaValue:
    """zeta(s, a) = sum_{n>=0} (n + a)^{-s}, continued to s != 1.

    Validated for Re(s) in [-10, 50] and 0 < a <= 10.  Left of
    Re(s) = -1 the Euler-Maclaurin sum cancels badly, so for rational a
    with a small denominator the value is obtained from Hurwitz's
    functional equation instead; other a keep Euler-Maclaurin and a
    correspondingly larger error bound.
    """
    if not a > 0:
        raise BadParameter(f"Hurwitz parameter a must be positive, got {a}")
    s = complex(s)
    if abs(s - 1) < POLE_RADIUS:
        raise PoleAtOne(f"s={s} is within {POLE_RADIUS} of the pole at s=1")
    if s.real >= FE_THRESHOLD:
        return _hurwitz_em(s, a)
    m = math.ceil(a) - 1
    frac = _small_rational(a - m)
    if frac is None or frac <= 0:
        return _hurwitz_em(s, a)
    base = _hurwitz_functional(s, frac)
    # zeta(s, a) = zeta(s, a - m) - sum_{k<m} (a - m + k)^{-s}
    shift = np.exp(-s * np.log(float(frac) + np.arange(m, dtype=float))) if m else np.zeros(0)
    value = base.value - complex(shift.sum())
    amplification = 4 + abs(s) * math.log(max(a, math.e))
    err = base.err + amplification * np.finfo(float).eps * (float(np.abs(shift).sum()) + abs(base.value))
    return ZetaValue(value, float(err))


def riemann_zeta(s: complex) -> ZetaValue:
    """zeta(s), through the Hurwitz sum at a = 1."""
    return hurwitz_zeta(s, 1.0)


def hurwitz_relation_gap(s: complex) -> float:
    """|zeta(s, 1/2) - (2^s - 1) zeta(s)|."""
    s = complex(s)
    lhs = hurwitz_zeta(s, 0.5).value
    rhs = (2.0 ** s - 1) * riemann_zeta(s).value
    return abs(lhs - rhs)


def _log_gamma_complex(z: complex) -> complex:
    """A logarithm of Gamma(z), Re z > 0; branch unspecified, callers exponentiate."""
    z = complex(z)
    shift = 0j
    while abs(z) < 15.0:
        shift += np.log(z)
        z += 1.0
    series = 0j
    for j in range(1, 9):
        series += float(BERNOULLI[2 * j]) / (2 * j * (2 * j - 1) * z ** (2 * j - 1))
    return (z - 0.5) * np.log(z) - z + 0.5 * math.log(2 * math.pi) + series - shift


def log_gamma(a: float) -> float:
    """log Gamma(a) for 0 < a <= 50.

    Shifts the argument to x >= 15 by the recurrence and applies the
    Stirling series with Bernoulli corrections through B_16.
    """
    if not 0 < a <= 50:
        raise BadParameter(f"log_gamma argument must lie in (0, 50], got {a}")
    x = float(a)
    shift = 0.0
    while x < 15.0:
        shift += math.log(x)
        x += 1.0
    series = 0.0
    for j in range(1, 9):
        b = float(BERNOULLI[2 * j])
        series += b / (2 * j * (2 * j - 1) * x ** (2 * j - 1))
    return (x - 0.5) * math.log(x) - x + 0.5 * math.log(2 * math.pi) + series - shift


def hurwitz_zeta_deriv_at_zero(a: float) -> float:
    """d/ds zeta(s, a) at s = 0, i.e. log Gamma(a) - log(2 pi)/2."""
    if not 0 < a <= 10:
        raise BadParameter(f"a must lie in (0, 10], got {a}")
    return log_gamma(a) - 0.5 * math.log(2 * math.pi)


def hurwitz_zeta_deriv_fd(a: float, h: float = 1e-5) -> float:
    """Central finite difference of the continued Hurwitz zeta at s = 0."""
    if not 0 < a <= 10:
        raise BadParameter(f"a must lie in (0, 10], got {a}")
    return (hurwitz_zeta(h, a).value.real - hurwitz_zeta(-h, a).value.real) / (2 * h)


def _check_q(q: float) -> None:
    if not 0 < q < 1:
        raise BadParameter(f"nome q must lie in (0, 1), got {q}")


def theta2_direct(q: float) -> float:
    """2 sum_{n>=0} q^{(n+1/2)^2}, summed until the next term is negligible."""
    _check_q(q)
    logq = math.log(q)
    total = 0.0
    n = 0
    while True:
        term = math.exp(logq * (n + 0.5) ** 2)
        if total > 0 and term < 1e-16 * total:
            break
        total += term
        n += 1
    return 2.0 * total


def theta2_modular(q: float) -> float:
    """theta_2(0, e^{-t}) through Poisson summation.

    theta_2(0, e^{-t}) = sqrt(pi/t) (1 + 2 sum_{m>=1} (-1)^m e^{-pi^2 m^2 / t}).
    """
    _check_q(q)
    t = -math.log(q)
    total = 1.0
    m = 1
    while True:
        term = math.exp(-(math.pi * m) ** 2 / t)
        if term < 1e-17:
            break
        total += 2.0 * (-1) ** m * term
        m += 1
    return math.sqrt(math.pi / t) * total


def jacobi_theta2(q: float) -> float:
    """Second Jacobi theta function at z = 0.

    Uses the direct series for q <= e^{-1} and the modular-transformed one
    closer to 1, where the direct series converges slowly.
    """
    _check_q(q)
    if q <= math.exp(-1.0):
        return theta2_direct(q)
    return theta2_modular(q)
