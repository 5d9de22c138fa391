"""Parabolic trigonometric functions, the Chebyshev radical ``C_{1/3}``, the
hyper-parabolic sine and nested radicals.

The parabolic pair obeys ``cos_p**2 + sin_p = 1`` and ``cos_p`` is the real
root of ``y**3 + 3*y + 3*phi - 4 = 0``.  Writing ``y = -2 sinh(u)`` turns the
cubic into ``sinh(3u) = (3 phi - 4) / 2``, which is the closed form used here.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from . import hyperseries
from .config import DEFAULT, DomainError, NoConvergence, ToleranceConfig
from .hyperseries import SeriesResult

_EPS = 2.220446049250313e-16
SQRT3 = math.sqrt(3.0)
SQRT7 = math.sqrt(7.0)
# |phi| below this gives (7/3) S^3 - S = phi three real roots
HPS_PRINCIPAL_LIMIT = 2.0 / (3.0 * SQRT7)
# |4 - 3 phi| below this keeps the binomial series of C_{1/3}(i tau) convergent
COS_P_SERIES_LIMIT = 2.0 * SQRT3


@dataclass(frozen=True)
class PtfPoint:
    phi: float
    c: float
    s: float

    @classmethod
    def at(cls, phi: float) -> "PtfPoint":
        return cls(phi, cos_p(phi), sin_p(phi))

    def identity_residual(self) -> float:
        return abs(self.c * self.c + self.s - 1.0)

    def cubic_residual(self) -> float:
        return abs(ptf_cubic_residual(self.phi, self.c))


@dataclass(frozen=True)
class NestedRadicalSpec:
    a: float
    b: float
    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 2:
            raise DomainError(f"root order m = {self.m!r} must be an integer >= 2")


class Branch(str, Enum):
    PRINCIPAL = "principal"
    LARGEST = "largest"
    ALL = "all"


def chebyshev_radical(a: complex) -> complex:
    """``2 cos(arccos(a / 2) / 3)`` on the principal ``arccos`` branch.

    The result ``r`` satisfies ``r**3 - 3*r = a`` for every complex ``a``.
    """
    return 2.0 * cmath.cos(cmath.acos(a / 2.0) / 3.0)


def ptf_cubic_residual(phi: float, c: float) -> float:
    return c ** 3 + 3.0 * c + 3.0 * phi - 4.0


def _asinh_third(phi: float) -> float:
    return math.asinh((3.0 * phi - 4.0) / 2.0) / 3.0


def cos_p(phi: float) -> float:
    return -2.0 * math.sinh(_asinh_third(phi))


def sin_p(phi: float) -> float:
    # cosh form, not 1 - cos_p**2, so the fundamental identity is a real check
    return 3.0 - 2.0 * math.cosh(2.0 * _asinh_third(phi))


def ptf_derivatives(phi: float) -> tuple[float, float]:
    """``(d cos_p / d phi, d sin_p / d phi)`` as ``(-1, 2 c) / (1 + c**2)``."""
    c = cos_p(phi)
    d = 1.0 + c * c
    return -1.0 / d, 2.0 * c / d


def cos_p_series(phi: float, cfg: ToleranceConfig = DEFAULT) -> SeriesResult:
    """``cos_p`` from the binomial series of ``C_{1/3}(i tau)``, ``tau = 4 - 3 phi``.

    Setting ``xi = -i y`` maps the defining cubic onto ``xi**3 - 3 xi = i tau``.
    The principal ``C_{1/3}(i tau)`` is not the purely imaginary root but its
    partner ``v - i u`` where the complex pair of ``y`` roots is ``u +- i v``;
    the real root is ``-2u``, so ``cos_p = 2 Im C_{1/3}(i tau) = -2 Re[i C_{1/3}(i tau)]``.
    """
    tau = 4.0 - 3.0 * phi
    if not abs(tau) < COS_P_SERIES_LIMIT:
        raise DomainError(f"|4 - 3 phi| = {abs(tau)!r} not below 2 sqrt(3)")
    res = hyperseries.binomial_c13_series(1j * tau, cfg)
    return SeriesResult(2.0 * res.value.imag, res.terms_used, res.converged, 2.0 * res.truncation_bound)


# --------------------------------------------------------------------------
# hyper-parabolic sine: (7/3) S^3 - S = phi


def hps_residual(phi: float, s: float) -> float:
    return 7.0 / 3.0 * s ** 3 - s - phi


def _hps_polish(phi: float, s: float) -> float:
    for _ in range(2):
        d = 7.0 * s * s - 1.0
        if d == 0.0:
            break
        sn = s - hps_residual(phi, s) / d
        if not abs(hps_residual(phi, sn)) < abs(hps_residual(phi, s)):
            break
        s = sn
    return s


def hps_roots(phi: float) -> list[float]:
    """Real roots of ``(7/3) S**3 - S = phi``, ascending.

    With ``S = w / sqrt(7)`` the equation becomes ``w**3 - 3 w = 3 sqrt(7) phi``,
    solved by the Chebyshev radical on its three real branches (or its single
    real ``cosh`` branch when ``|3 sqrt(7) phi| > 2``).
    """
    v = 3.0 * SQRT7 * phi
    if abs(v) <= 2.0:
        base = math.acos(v / 2.0)
        ws = [2.0 * math.cos((base + 2.0 * math.pi * k) / 3.0) for k in range(3)]
    else:
        ws = [math.copysign(2.0 * math.cosh(math.acosh(abs(v) / 2.0) / 3.0), v)]
    return sorted(_hps_polish(phi, w / SQRT7) for w in ws)


def hyper_parabolic_sin(phi: float, branch: Branch | str = Branch.PRINCIPAL):
    branch = Branch(branch)
    if branch is Branch.ALL:
        return hps_roots(phi)
    if branch is Branch.LARGEST:
        return hps_roots(phi)[-1]
    if not abs(phi) < HPS_PRINCIPAL_LIMIT:
        raise DomainError(f"principal branch needs |phi| < {HPS_PRINCIPAL_LIMIT:.6f}, got {phi!r}")
    v = 3.0 * SQRT7 * phi
    # k = 2 branch of the triple-angle cosine is the one through S(0) = 0
    w = 2.0 * math.cos((math.acos(v / 2.0) + 4.0 * math.pi) / 3.0)
    return _hps_polish(phi, w / SQRT7)


# --------------------------------------------------------------------------
# nested radicals


def _real_root(x: float, m: int) -> float:
    if x < 0.0:
        if m % 2 == 0:
            raise DomainError(f"negative radicand {x!r} under an even root")
        return -((-x) ** (1.0 / m))
    return x ** (1.0 / m)


def nested_radical(spec: NestedRadicalSpec, cfg: ToleranceConfig = DEFAULT) -> float:
    """Limit of ``x <- (a + b x) ** (1/m)`` started from ``x0 = a ** (1/m)``.

    The limit solves ``x**m = a + b x``.  Convergence needs the fixed point to
    be attracting, ``|b| / (m |x|**(m-1)) < 1``; otherwise ``NoConvergence``.
    """
    a, b, m = spec.a, spec.b, int(spec.m)
    x = _real_root(a, m)
    scale = max(1.0, abs(a), abs(b))
    for _ in range(cfg.max_iter):
        xn = _real_root(a + b * x, m)
        step = abs(xn - x)
        x = xn
        if step <= 2.0 * _EPS * max(abs(x), 1e-300):
            break
    residual = abs(x ** m - a - b * x)
    if residual > cfg.eps_residual * scale:
        raise NoConvergence(f"nested radical residual {residual:.3e} after {cfg.max_iter} steps")
    if x == 0.0 or abs(b) / (m * abs(x) ** (m - 1)) >= 1.0:
        raise NoConvergence(f"fixed point {x!r} is not attracting")
    return x

