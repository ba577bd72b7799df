"""Numerics for the half-integer Fourier Hilbert scale on [0, 1].

Modes psi_k(x) = exp(2 pi i (k + 1/2) x), the diagonal operator with
eigenvalues k + 1/2, its zeta-regularized determinant and heat trace, and
spectral flow of perturbed families.
"""
from .errors import (
    BadParameter,
    ContinuityViolation,
    EndpointOnSpectrum,
    HalfspecError,
    NotHermitian,
    ParseError,
    PoleAtOne,
    SpectrumHit,
    WindowTooWide,
)
from .flow import FlowConfig, FlowResult, PerturbationFamily, compute_flow, eigencurves, truncated_operator
from .invariants import (
    DeterminantReport,
    HeatTraceSample,
    heat_trace,
    heat_trace_leading_coefficient,
    spectral_zeta,
    standard_operator_zeta,
    zeta_determinant,
)
from .operator import apply_A, resolvent, scale_norm_bound_check, solve_bvp
from .scale import WeightedNorm, embedding_tail_norm, scale_norm, weight
from .special import (
    ZetaValue,
    hurwitz_relation_gap,
    hurwitz_zeta,
    hurwitz_zeta_deriv_at_zero,
    jacobi_theta2,
    log_gamma,
    riemann_zeta,
)
from .transform import GridSamples, ModeWindow, TwistedCoeffs, forward, inverse, parseval_gap, twist

__version__ = "0.1.0"
