"""Exception types raised across halfspec."""


class HalfspecError(Exception):
    """Base class for all library errors."""


class BadParameter(HalfspecError, ValueError):
    pass


class WindowTooWide(BadParameter):
    """Grid too coarse for the requested mode window (N < 2K)."""

    def __init__(self, N: int, K: int):
        self.N = N
        self.K = K
        super().__init__(f"grid of N={N} samples cannot resolve window K={K}; need N >= {2 * K}")


class SpectrumHit(HalfspecError, ArithmeticError):
    """Spectral parameter too close to an eigenvalue k + 1/2 of the window."""

    def __init__(self, k: int, lam: complex, distance: float):
        self.k = k
        self.lam = lam
        self.distance = distance
        super().__init__(f"lambda={lam} lies within {distance:.3g} of eigenvalue k+1/2 at k={k}")


class PoleAtOne(HalfspecError, ArithmeticError):
    pass


class NotHermitian(HalfspecError, ValueError):
    pass


class ContinuityViolation(HalfspecError, ValueError):
    """Eigenvalue jump larger than the family's declared Lipschitz bound allows."""


class EndpointOnSpectrum(HalfspecError, ValueError):
    pass


class ParseError(HalfspecError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
