"""Residual-certified solvers for real cubics and trinomial quintics.

Cubics with ``3b - a**2 > 0`` get their real root from the parabolic cosine;
those with ``3b - a**2 < 0`` from the Chebyshev radical.  Quintics
``x**5 + p x + lam`` are scaled onto ``3 y**5 + 5 y + theta = 0`` (``p > 0``)
or the Bring form ``w**5 - w + t = 0`` (``p < 0``).  Every root is polished
with two guarded Newton steps on the original polynomial and then certified
by its scale-relative residual.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from . import hyperseries
from .config import DEFAULT, DomainError, ResidualGateFailed, ToleranceConfig
from .gentrig import cos_m_theta
from .numerics import Interval, all_roots, bisect_then_newton, newton_polish, relative_residual
from .special_core import cos_p

CLOSED_FORM = "closed_form"
SERIES = "series"
NEWTON = "newton"
SIMULTANEOUS = "simultaneous_iteration"

_EPS = 2.220446049250313e-16
_DEGENERATE = 1e-12
# inside this |t| the 4F3 series converges in well under 200 terms
_SERIES_T = 0.5
_BRING_TURN = 5.0 ** -0.25


@dataclass(frozen=True)
class CubicEquation:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c)):
            raise DomainError("cubic coefficients must be finite")

    @property
    def coeffs(self) -> list[float]:
        return [1.0, self.a, self.b, self.c]


@dataclass(frozen=True)
class CubicReduction:
    shift: float
    p_scale: Optional[float] = None
    phi_equiv: Optional[float] = None
    beta: Optional[float] = None


@dataclass(frozen=True)
class QuinticTrinomial:
    p: float
    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and math.isfinite(self.lam)):
            raise DomainError("quintic coefficients must be finite")

    @property
    def coeffs(self) -> list[float]:
        return [1.0, 0.0, 0.0, 0.0, self.p, self.lam]


@dataclass(frozen=True)
class RootSet:
    roots: list
    residuals: list
    methods: list

    @property
    def count(self) -> int:
        return len(self.roots)

    @property
    def real_roots(self) -> list[float]:
        return sorted(r.real for r in self.roots if r.imag == 0)

    def certified(self, eps: float) -> bool:
        return all(r <= eps for r in self.residuals)


def _certify(coeffs, roots, methods, cfg) -> RootSet:
    residuals = [relative_residual(coeffs, z) for z in roots]
    result = RootSet([complex(z) for z in roots], residuals, list(methods))
    bad = [r for r in residuals if not r <= cfg.eps_residual]
    if bad:
        raise ResidualGateFailed(f"root residual {max(bad):.3e} exceeds {cfg.eps_residual:.1e}", result)
    return result


def _conjugate_close(coeffs, roots):
    """Pair roots into conjugates, polish one of each pair and mirror it exactly."""
    remaining = list(roots)
    out = []
    while remaining:
        z = max(remaining, key=lambda w: abs(w.imag))
        remaining.remove(z)
        partner = min(remaining, key=lambda w: abs(w - z.conjugate()))
        remaining.remove(partner)
        mid = 0.5 * (z + partner.conjugate())
        mid = newton_polish(coeffs, complex(mid.real, abs(mid.imag)))
        mid = complex(mid.real, abs(mid.imag))
        out += [mid, mid.conjugate()]
    return out


def _split_real(roots, n_real):
    """Snap the ``n_real`` roots with the smallest ``|Im|`` onto the real axis."""
    order = sorted(roots, key=lambda z: abs(z.imag))
    return [z.real for z in order[:n_real]], order[n_real:]


def _quadratic(u: float, v: float):
    """Roots of ``x**2 + u x + v``; complex pairs are exact conjugates."""
    disc = u * u - 4.0 * v
    if disc < 0.0:
        re, im = -0.5 * u, 0.5 * math.sqrt(-disc)
        return [complex(re, im), complex(re, -im)]
    q = -0.5 * (u + math.copysign(math.sqrt(disc), u))
    if q == 0.0:
        return [0.0, 0.0]
    return [q, v / q]


# --------------------------------------------------------------------------
# cubics


def reduce_cubic(eq: CubicEquation) -> CubicReduction:
    """Shift and scale ``x = sqrt(p) y - a/3`` onto ``y**3 + 3 y + (3 phi - 4) = 0``."""
    a, b, c = eq.a, eq.b, eq.c
    d = 3.0 * b - a * a
    shift = -a / 3.0
    if d <= 0.0:
        return CubicReduction(shift)
    # divide in two steps: d**1.5 underflows long before d does
    phi = ((27.0 * c + 2.0 * a ** 3 - 9.0 * a * b) / d / math.sqrt(d) + 4.0) / 3.0
    beta = (27.0 * c / (3.0 * b) / math.sqrt(3.0 * b) + 4.0) / 3.0 if b > 0.0 else None
    return CubicReduction(shift, d / 9.0, phi, beta)


def _deflate_cubic(eq: CubicEquation, x1: float):
    # x**3 + a x**2 + b x + c = (x - x1)(x**2 + u x + v)
    u = eq.a + x1
    v = -eq.c / x1 if x1 != 0.0 else eq.b
    return _quadratic(u, v)


def solve_cubic(eq: CubicEquation, cfg: ToleranceConfig = DEFAULT) -> RootSet:
    a, b, c = eq.a, eq.b, eq.c
    coeffs = eq.coeffs
    d = 3.0 * b - a * a
    shift = -a / 3.0
    # depressed form y**3 + P y + Q with x = y + shift
    big_p = d / 3.0
    big_q = (2.0 * a ** 3 - 9.0 * a * b + 27.0 * c) / 27.0

    if abs(d) <= _DEGENERATE * max(1.0, a * a, abs(b)):
        y = math.copysign(abs(big_q) ** (1.0 / 3.0), -big_q)
        x1 = y + shift
    elif d > 0.0:
        red = reduce_cubic(eq)
        x1 = math.sqrt(red.p_scale) * cos_p(red.phi_equiv) + shift
    else:
        k = math.sqrt(-big_p / 3.0)
        v = -big_q / k ** 3
        if abs(v) <= 2.0:
            base = math.acos(v / 2.0)
            xs = [k * 2.0 * math.cos((base + 2.0 * math.pi * j) / 3.0) + shift for j in range(3)]
            xs = [newton_polish(coeffs, x) for x in xs]
            return _certify(coeffs, sorted(xs), [CLOSED_FORM] * 3, cfg)
        w = math.copysign(2.0 * math.cosh(math.acosh(abs(v) / 2.0) / 3.0), v)
        x1 = k * w + shift

    x1 = newton_polish(coeffs, x1)
    rest = [newton_polish(coeffs, z) for z in _deflate_cubic(eq, x1)]
    if isinstance(rest[0], complex):
        rest = [rest[0], rest[0].conjugate()]
    roots = [x1] + rest
    return _certify(coeffs, roots, [CLOSED_FORM] * 3, cfg)


def cubic_secant_form_debug(b: float, c: float) -> dict:
    """Evaluate the secant-style closed expression for the roots of ``x**3 + b x + c``.

    Its ``x2, x3`` do not solve the cubic; the returned residuals show by how much.
    ``solve_cubic`` takes the other two roots from the Vieta quadratic instead.
    """
    if not b > 0.0:
        raise DomainError("needs b > 0")
    beta = (27.0 * c / (3.0 * b) ** 1.5 + 4.0) / 3.0
    cp = cos_p(beta)
    x1 = math.sqrt(b / 3.0) * cp
    root = cmath.sqrt((cp / cmath.sqrt(2.0 * c)) ** 4 - 1.0)
    front = 0.5 * math.sqrt(3.0 / b) / cp if cp != 0 else math.inf
    xs = [x1] + [front * (b / 3.0 * cp * cp + sgn * 2.0 * c * root) for sgn in (1, -1)]
    coeffs = [1.0, 0.0, b, c]
    return {"roots": xs, "residuals": [relative_residual(coeffs, x) for x in xs]}


# --------------------------------------------------------------------------
# Bring form and trinomial quintics


def _bring_f(t):
    return lambda w: w ** 5 - w + t


def _bring_df(w):
    return 5.0 * w ** 4 - 1.0


def bring_root(t: float, cfg: ToleranceConfig = DEFAULT) -> float:
    """Real root of ``w**5 - w + t = 0`` continued from ``w(0) = 0``.

    For ``|t| < 4 / 5**(5/4)`` that root lies between 0 and the turning point
    ``sign(t) * 5**(-1/4)``: it is summed from the 4F3 series for ``|t| <= 0.5``
    and bracketed otherwise.  Past the branch point only one real root
    survives, on the far side of ``-sign(t) * 5**(-1/4)``, and is bracketed there.
    """
    if t == 0.0:
        return 0.0
    f = _bring_f(t)
    scale = max(1.0, abs(t))
    sgn = math.copysign(1.0, t)
    if abs(t) <= _SERIES_T:
        w = hyperseries.bring_series(t, cfg).real
    elif abs(t) < hyperseries.BRING_RADIUS:
        lo, hi = sorted((0.0, sgn * _BRING_TURN))
        w = bisect_then_newton(f, _bring_df, Interval(lo, hi), cfg, scale)
    else:
        # |w|**5 = |t| + |w| puts the root below |t|**(1/5) + 1
        far = abs(t) ** 0.2 + 1.0
        lo, hi = sorted((-sgn * _BRING_TURN, -sgn * far))
        w = bisect_then_newton(f, _bring_df, Interval(lo, hi), cfg, scale)
    return newton_polish([1.0, 0.0, 0.0, 0.0, -1.0, t], w)


def _bring_real_count(t: float) -> int:
    return 3 if abs(t) < hyperseries.BRING_RADIUS else 1


def solve_quintic_trinomial(eq: QuinticTrinomial, cfg: ToleranceConfig = DEFAULT) -> RootSet:
    p, lam = eq.p, eq.lam
    coeffs = eq.coeffs

    if lam == 0.0:
        # x (x**4 + p): the quartic roots are closed form
        r = abs(p) ** 0.25
        if p < 0.0:
            roots = [0.0, r, -r, complex(0.0, r), complex(0.0, -r)]
        else:
            h = r * math.sqrt(0.5)
            z1 = newton_polish(coeffs, complex(h, h))
            z2 = newton_polish(coeffs, complex(-h, h))
            roots = [0.0, z1, z1.conjugate(), z2, z2.conjugate()]
        return _certify(coeffs, roots, [CLOSED_FORM] * 5, cfg)

    r = abs(lam) ** 0.2
    if abs(p) * r <= 0.25 * _EPS * abs(lam):
        # p x is below rounding of lam at every root: x**5 = -lam, then polish
        base = math.pi if lam > 0 else 0.0  # argument of -lam
        x1 = newton_polish(coeffs, -r if lam > 0 else r)
        roots = [x1]
        for k in ((0, 1) if lam > 0 else (1, 2)):
            ang = (base + 2.0 * math.pi * k) / 5.0
            z = newton_polish(coeffs, complex(r * math.cos(ang), abs(r * math.sin(ang))))
            roots += [z, z.conjugate()]
        return _certify(coeffs, roots, [CLOSED_FORM] * 5, cfg)

    if p > 0.0:
        s = (3.0 * p / 5.0) ** 0.25
        theta = 3.0 * lam / s ** 5
        x1 = s * cos_m_theta(theta, cfg)
        n_real = 1
        method = CLOSED_FORM
    else:
        s = (-p) ** 0.25
        t = lam / s ** 5
        x1 = s * bring_root(t, cfg)
        n_real = _bring_real_count(t)
        method = SERIES if abs(t) <= _SERIES_T else NEWTON
    x1 = newton_polish(coeffs, x1)

    # deflate by the known real root: x**4 + x1 x**3 + x1**2 x**2 + x1**3 x + (x1**4 + p)
    quartic = [1.0, x1, x1 * x1, x1 ** 3, x1 ** 4 + p]
    others = all_roots(quartic, cfg)
    reals, cplx = _split_real(others, n_real - 1)
    reals = [newton_polish(coeffs, x) for x in reals]
    cplx = _conjugate_close(coeffs, cplx)
    roots = [x1] + sorted(reals) + cplx
    methods = [method] + [SIMULTANEOUS] * (len(roots) - 1)
    return _certify(coeffs, roots, methods, cfg)
