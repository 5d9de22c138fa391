"""Generalized trigonometric family ``C(phi|p,q)``, ``S(phi|p,q)``.

The pair satisfies ``C**p + S**q = 1`` and the sector-area relation

    C*S/2 + integral_C^1 (1 - x**p)**(1/q) dx = phi/2.

``gen_point`` solves that system directly with quadrature; ``gen_trajectory``
integrates the derivative rules from ``(1, 0)`` as an independent route.  For
``q = 1`` the integral is elementary and the relation collapses to the
polynomial returned by ``q1_polynomial``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .config import DEFAULT, DomainError, NoConvergence, SingularPoint, ToleranceConfig
from .numerics import BISECT_WIDTH, Interval, adaptive_quad, bisect_then_newton, horner

_COARSE_QUAD = 1e-7
_TAN_ZERO = 1e-12
# phi this close above phi_max is quadrature noise and is mapped onto the branch end
_END_SNAP = 1e-9


@dataclass(frozen=True)
class GenTrigParams:
    p: int
    q: int

    def __post_init__(self):
        if int(self.p) != self.p or int(self.q) != self.q or self.p < 1 or self.q < 1:
            raise DomainError(f"(p, q) = ({self.p}, {self.q}) must be positive integers")
        # (2, 2) is the circular case and is admitted despite gcd 2
        if (self.p, self.q) != (2, 2) and math.gcd(int(self.p), int(self.q)) != 1:
            raise DomainError(f"(p, q) = ({self.p}, {self.q}) are not relatively prime")

    @property
    def c_floor(self) -> float:
        return -1.0 if self.p % 2 == 0 else 0.0

    def s_of_c(self, c: float) -> float:
        base = 1.0 - c ** self.p
        if self.q == 1:
            return base
        if base < 0.0:
            if self.q % 2 == 0:
                raise DomainError(f"C = {c!r} gives 1 - C**p < 0 under an even root")
            return -((-base) ** (1.0 / self.q))
        return base ** (1.0 / self.q)

    def integrand(self, x: float) -> float:
        return max(0.0, 1.0 - x ** self.p) ** (1.0 / self.q)


@dataclass(frozen=True)
class GenTrigPoint:
    params: GenTrigParams
    phi: float
    c: float
    s: float

    def identity_residual(self) -> float:
        return abs(self.c ** self.params.p + self.s ** self.params.q - 1.0)


def area_residual(point: GenTrigPoint, tol: float = 1e-12) -> float:
    """``|C S / 2 + integral_C^1 (1 - x**p)**(1/q) dx - phi / 2|`` by fresh quadrature."""
    params = point.params
    c = point.c
    if c < 1.0:
        integral = adaptive_quad(params.integrand, Interval(c, 1.0), tol)
    elif c > 1.0:
        integral = -adaptive_quad(lambda x: 1.0 - x ** params.p, Interval(1.0, c), tol)
    else:
        integral = 0.0
    return abs(0.5 * c * point.s + integral - 0.5 * point.phi)


@lru_cache(maxsize=64)
def _phi_max(p: int, q: int, tol: float) -> float:
    params = GenTrigParams(p, q)
    return 2.0 * adaptive_quad(params.integrand, Interval(params.c_floor, 1.0), tol)


def phi_max(params: GenTrigParams, cfg: ToleranceConfig = DEFAULT) -> float:
    """Right end of the geometric branch, ``2 * integral_{c_floor}^1 (1 - x**p)**(1/q)``."""
    return _phi_max(params.p, params.q, min(cfg.eps_quad, 1e-14))


def _dphi_dc(params: GenTrigParams, c: float, s: float) -> float:
    p, q = params.p, params.q
    num = q * s ** q + p * c ** p
    den = q * s ** (q - 1)
    if den == 0.0:
        return -math.inf
    return -num / den


def q1_polynomial(p: int, phi: float) -> list[float]:
    """Coefficients (highest first) of ``(p-1) C**(p+1) + (p+1) C + (p+1) phi - 2p``."""
    if int(p) != p or p < 2:
        raise DomainError(f"p = {p!r} must be an integer >= 2")
    p = int(p)
    return [float(p - 1)] + [0.0] * (p - 1) + [float(p + 1), (p + 1) * phi - 2.0 * p]


def q1_root(p: int, phi: float, cfg: ToleranceConfig = DEFAULT) -> float:
    """Root of ``q1_polynomial(p, phi)`` on the branch through ``(phi, C) = (0, 1)``.

    The polynomial is increasing for ``C`` above ``-(1/(p-1))**(1/p)`` (all
    ``C`` when ``p`` is even), and the wanted root lies on that increasing part.
    """
    coeffs = q1_polynomial(p, phi)
    f = lambda c: horner(coeffs, c)[0]
    df = lambda c: horner(coeffs, c)[1]
    hi = 2.0 + abs(phi)
    lo = -hi if p % 2 == 0 else -((1.0 / (p - 1)) ** (1.0 / p))
    if f(lo) > 0.0:
        raise DomainError(f"phi = {phi!r} is past the end of the (p, 1) = ({p}, 1) branch")
    scale = max(1.0, (p + 1) * abs(phi) + 2.0 * p)
    return bisect_then_newton(f, df, Interval(lo, hi), cfg, scale)


def _refined(integrand, lo, hi, tol):
    """``x -> integral_{x0}^x integrand`` built from one reference integral at the bracket centre."""
    ref = 0.5 * (lo + hi)

    def value(x, base):
        if x > ref:
            return base + adaptive_quad(integrand, Interval(ref, x), tol)
        if x < ref:
            return base - adaptive_quad(integrand, Interval(x, ref), tol)
        return base

    return ref, value


def _solve_c(params, phi, lo, hi, cfg):
    g = params.integrand
    tol = cfg.eps_quad * 1e-3
    ref, value = _refined(g, lo, hi, tol)
    base = -adaptive_quad(g, Interval(ref, 1.0), tol)

    def residual(c):
        return c * params.s_of_c(c) - 2.0 * value(c, base) - phi

    def slope(c):
        return _dphi_dc(params, c, params.s_of_c(c))

    if residual(lo) * residual(hi) > 0.0:
        lo, hi = params.c_floor, 1.0
    try:
        c = bisect_then_newton(residual, slope, Interval(lo, hi), cfg, max(1.0, abs(phi)))
    except DomainError as exc:
        raise NoConvergence(f"bracketing solve for phi = {phi!r} lost its bracket") from exc
    return c, params.s_of_c(c)


def _solve_s(params, phi, lo, hi, cfg):
    # with x = (1 - u**q)**(1/p) the area integral becomes
    # (q/p) integral_0^S u**q (1 - u**q)**(1/p - 1) du, smooth near S = 0
    p, q = params.p, params.q

    def c_of_s(s):
        return max(0.0, 1.0 - s ** q) ** (1.0 / p)

    def h(u):
        return u ** q * max(0.0, 1.0 - u ** q) ** (1.0 / p - 1.0)

    tol = cfg.eps_quad * 1e-3
    ref, value = _refined(h, lo, hi, tol)
    base = adaptive_quad(h, Interval(0.0, ref), tol) if ref > 0.0 else 0.0

    def residual(s):
        return c_of_s(s) * s + 2.0 * q / p * value(s, base) - phi

    def slope(s):
        c = c_of_s(s)
        return (q * s ** q + p * c ** p) * c ** (1 - p) / p if c > 0.0 else math.inf

    try:
        s = bisect_then_newton(residual, slope, Interval(lo, hi), cfg, max(1.0, abs(phi)))
    except DomainError as exc:
        raise NoConvergence(f"bracketing solve for phi = {phi!r} lost its bracket") from exc
    return c_of_s(s), s


def gen_point(params: GenTrigParams, phi: float, cfg: ToleranceConfig = DEFAULT) -> GenTrigPoint:
    """Solve for ``(C, S)`` at area parameter ``phi``.

    On the geometric branch ``0 <= phi <= phi_max`` the area relation is solved
    by coarse-quadrature bisection down to a bracket of width 1e-3, then by
    bracketed Newton whose residuals are refreshed by quadrature increments
    from a fine reference integral.  The unknown is ``C`` or ``S``, whichever
    moves faster with ``phi``, so the other one is recovered without loss; for
    even ``p`` the half ``C < 0`` follows from ``phi -> phi_max - phi``,
    ``C -> -C``.  For ``q = 1`` points off the branch come from ``q1_root``.
    """
    top = phi_max(params, cfg)
    if top < phi <= top + _END_SNAP * top:
        phi = top
    if not 0.0 <= phi <= top:
        if params.q == 1 and params.p >= 2:
            c = q1_root(params.p, phi, cfg)
            return GenTrigPoint(params, phi, c, params.s_of_c(c))
        raise DomainError(f"phi = {phi!r} outside the geometric branch [0, {top!r}]")
    if phi == 0.0:
        return GenTrigPoint(params, phi, 1.0, 0.0)
    if phi == top:
        c = params.c_floor
        return GenTrigPoint(params, phi, c, params.s_of_c(c))

    flip = params.p % 2 == 0 and phi > 0.5 * top
    target = top - phi if flip else phi
    g = params.integrand

    def coarse(c):
        return c * params.s_of_c(c) + 2.0 * adaptive_quad(g, Interval(c, 1.0), _COARSE_QUAD) - target

    lo, hi = max(0.0, params.c_floor), 1.0
    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if coarse(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    # coarse values may misplace the bracket by ~1e-7 in phi
    pad = 0.25 * BISECT_WIDTH
    lo, hi = max(0.0, params.c_floor, lo - pad), min(1.0, hi + pad)
    mid = 0.5 * (lo + hi)
    p, q = params.p, params.q
    if q >= 2 and p * mid ** (p - 1) > q * params.s_of_c(mid) ** (q - 1):
        c, s = _solve_s(params, target, params.s_of_c(hi), params.s_of_c(lo), cfg)
    else:
        c, s = _solve_c(params, target, lo, hi, cfg)
    if flip:
        c = -c
    return GenTrigPoint(params, phi, c, s)


def gen_derivatives(point: GenTrigPoint) -> tuple[float, float]:
    """``(dC/dphi, dS/dphi) = (-q S**(q-1), p C**(p-1)) / (q S**q + p C**p)``."""
    p, q = point.params.p, point.params.q
    c, s = point.c, point.s
    den = q * s ** q + p * c ** p
    if den == 0.0:
        raise SingularPoint(f"q S**q + p C**p vanishes at phi = {point.phi!r}")
    return -q * s ** (q - 1) / den, p * c ** (p - 1) / den


def gen_tan(point: GenTrigPoint) -> float:
    if abs(point.c) <= _TAN_ZERO:
        raise SingularPoint(f"C vanishes at phi = {point.phi!r}")
    return point.s / point.c


def gen_trajectory(params: GenTrigParams, phis: Sequence[float], h: float = 1e-3) -> list[tuple[float, float]]:
    """``(C, S)`` at each of ``phis`` (ascending, >= 0) by RK4 on the derivative rules."""
    p, q = params.p, params.q

    def rhs(c, s):
        den = q * s ** q + p * c ** p
        return -q * s ** (q - 1) / den, p * c ** (p - 1) / den

    out = []
    x, c, s = 0.0, 1.0, 0.0
    for target in phis:
        if target < x:
            raise ValueError("phis must be ascending and non-negative")
        while x < target:
            dx = min(h, target - x)
            k1 = rhs(c, s)
            k2 = rhs(c + 0.5 * dx * k1[0], s + 0.5 * dx * k1[1])
            k3 = rhs(c + 0.5 * dx * k2[0], s + 0.5 * dx * k2[1])
            k4 = rhs(c + dx * k3[0], s + dx * k3[1])
            c += dx * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]) / 6.0
            s += dx * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]) / 6.0
            x = target if dx == target - x else x + dx
        out.append((c, s))
    return out


# --------------------------------------------------------------------------
# the (4, 1) member


def cos_m_theta(theta: float, cfg: ToleranceConfig = DEFAULT) -> float:
    """Unique real root of ``3 y**5 + 5 y + theta = 0``.

    ``3 y**5 + 5 y`` is odd and increasing, so ``|y| <= min(|theta|/5, (|theta|/3)**(1/5))``.
    The residual gate is relative to ``max(1, |theta|)``.
    """
    if theta == 0.0:
        return 0.0
    r = abs(theta)
    bound = min(r / 5.0, (r / 3.0) ** 0.2) * (1.0 + 1e-9) + 1e-300
    coeffs = (3.0, 0.0, 0.0, 0.0, 5.0, theta)
    return bisect_then_newton(lambda y: horner(coeffs, y)[0], lambda y: horner(coeffs, y)[1],
                              Interval(-bound, bound), cfg, max(1.0, r))


def cos_m(phi: float, cfg: ToleranceConfig = DEFAULT) -> float:
    return cos_m_theta(5.0 * phi - 8.0, cfg)


def sin_m(phi: float, cfg: ToleranceConfig = DEFAULT) -> float:
    return 1.0 - cos_m(phi, cfg) ** 4


def quintic_residual(phi: float, c: float) -> float:
    return 3.0 * c ** 5 + 5.0 * c + (5.0 * phi - 8.0)
