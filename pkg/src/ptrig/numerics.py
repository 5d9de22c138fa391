"""Shared numerical kernels: adaptive quadrature, bracketed root polishing and
an all-roots polynomial solver used as an independent oracle.

Polynomial coefficients are always given highest degree first, as in
``numpy.polyval``.
"""

from __future__ import annotations

import cmath
import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .config import DEFAULT, DepthExceeded, DomainError, NoConvergence, ToleranceConfig

_EPS = 2.220446049250313e-16
MAX_QUAD_DEPTH = 40
BISECT_WIDTH = 1e-3


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _as_interval(iv) -> Interval:
    return iv if isinstance(iv, Interval) else Interval(*iv)


# --------------------------------------------------------------------------
# quadrature


def _panel(f, a, b, fa, fm, fb, whole, depth):
    m = 0.5 * (a + b)
    flm, frm = f(0.5 * (a + m)), f(0.5 * (m + b))
    left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
    right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
    delta = left + right - whole
    children = ((a, m, fa, flm, fm, left), (m, b, fm, frm, fb, right))
    return abs(delta) / 15.0, left + right + delta / 15.0, depth, children


def adaptive_quad(f: Callable[[float], float], iv, tol: float,
                  max_depth: int = MAX_QUAD_DEPTH) -> float:
    """Integrate ``f`` over ``iv`` by globally adaptive Simpson with Richardson correction.

    Each panel carries the Richardson-corrected two-half Simpson value and the
    error estimate ``|S2 - S1| / 15``.  The panel with the largest estimate is
    split until the estimates sum to at most ``tol``.  Next to an integrable
    endpoint singularity such as ``(1 - x**p) ** (1 / q)`` only the terminal
    panel keeps a large estimate, so refinement advances geometrically toward
    that endpoint.
    """
    iv = _as_interval(iv)
    a, b = iv.lo, iv.hi
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0
    heap = []
    counter = 0

    def push(panel):
        nonlocal counter
        heapq.heappush(heap, (-panel[0], counter, panel))
        counter += 1

    push(_panel(f, a, b, fa, fm, fb, whole, 0))
    # two forced levels so symmetric integrands cannot fool the first estimate
    for _ in range(3):
        _, _, (_, _, depth, children) = heapq.heappop(heap)
        for child in children:
            push(_panel(f, *child, depth + 1))
    total_err = sum(-e for e, _, _ in heap)
    mass = sum(abs(p[1]) for _, _, p in heap)
    while total_err > max(tol, 64.0 * _EPS * mass):
        _, _, (err, value, depth, children) = heapq.heappop(heap)
        if depth >= max_depth:
            raise DepthExceeded(f"quadrature passed {max_depth} levels near x = {children[0][1]!r}")
        total_err -= err
        mass -= abs(value)
        for child in children:
            panel = _panel(f, *child, depth + 1)
            total_err += panel[0]
            mass += abs(panel[1])
            push(panel)
        if len(heap) % 256 == 0:
            # resum to stop drift in the running totals
            total_err = math.fsum(-e for e, _, _ in heap)
            mass = math.fsum(abs(p[1]) for _, _, p in heap)
    return math.fsum(p[1] for _, _, p in heap)


# --------------------------------------------------------------------------
# scalar root finding


def bisect_then_newton(f: Callable[[float], float], df: Callable[[float], float], iv,
                       cfg: ToleranceConfig = DEFAULT, scale: float = 1.0) -> float:
    """Root of ``f`` inside a sign-changing bracket.

    Bisects until the bracket is narrower than 1e-3, then runs Newton while
    keeping the bracket; any step that leaves the bracket or fails to shrink
    ``|f|`` is replaced by a bisection step.  The result is accepted when
    ``|f(x)| <= cfg.eps_residual * scale`` or when the bracket has collapsed
    to a few ulps around it.
    """
    iv = _as_interval(iv)
    lo, hi = iv.lo, iv.hi
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise DomainError(f"no sign change on [{lo}, {hi}]")

    def shrink(x, fx):
        nonlocal lo, hi, flo
        if (fx < 0.0) == (flo < 0.0):
            lo, flo = x, fx
        else:
            hi = x

    while hi - lo > BISECT_WIDTH:
        x = 0.5 * (lo + hi)
        fx = f(x)
        if fx == 0.0:
            return x
        shrink(x, fx)

    x = 0.5 * (lo + hi)
    fx = f(x)
    best, fbest = x, fx
    for _ in range(cfg.max_iter):
        if fx == 0.0:
            break
        d = df(x)
        xn = x - fx / d if d != 0.0 else math.nan
        newton = lo < xn < hi
        if newton:
            fn = f(xn)
            shrink(xn, fn)
            newton = abs(fn) <= abs(fx)
        if not newton:
            xn = 0.5 * (lo + hi)
            fn = f(xn)
            shrink(xn, fn)
        step = abs(xn - x)
        x, fx = xn, fn
        if abs(fx) < abs(fbest):
            best, fbest = x, fx
        if newton and step <= 4.0 * _EPS * abs(x):
            break
        if hi - lo <= 4.0 * _EPS * max(abs(lo), abs(hi)):
            break
    x, fx = best, fbest
    # a bracket of a few ulps pins the root as well as binary64 can, even where
    # f is too steep for its residual to reach the gate
    pinned = hi - lo <= 4.0 * _EPS * max(abs(lo), abs(hi)) and lo <= x <= hi
    if not (abs(fx) <= cfg.eps_residual * scale or pinned):
        raise NoConvergence(f"residual {abs(fx):.3e} at x = {x!r} after {cfg.max_iter} steps")
    return x


# --------------------------------------------------------------------------
# polynomials


def horner(coeffs: Sequence[float], x):
    """Value and first derivative of the polynomial at ``x``."""
    p = coeffs[0]
    dp = 0.0 * x
    for c in coeffs[1:]:
        dp = dp * x + p
        p = p * x + c
    return p, dp


def residual_scale(coeffs: Sequence[float], x) -> float:
    """``max(1, sum |a_k| |x|**k)``: the natural size of ``p(x)``'s rounding error."""
    r = abs(x)
    s = 0.0
    for c in coeffs:
        s = s * r + abs(c)
    return max(1.0, s)


def relative_residual(coeffs: Sequence[float], x) -> float:
    return abs(horner(coeffs, x)[0]) / residual_scale(coeffs, x)


def newton_polish(coeffs: Sequence[float], x, steps: int = 2):
    """A few Newton steps on ``coeffs``; a step is kept only if it lowers ``|p|``."""
    p, dp = horner(coeffs, x)
    for _ in range(steps):
        if p == 0 or dp == 0:
            break
        xn = x - p / dp
        pn, dpn = horner(coeffs, xn)
        if not abs(pn) < abs(p):
            break
        x, p, dp = xn, pn, dpn
    return x


def _abs_poly(coeffs, r):
    s = 0.0
    for c in coeffs:
        s = s * r + abs(c)
    return s


def _aberth(a: list[complex], offset: float, max_iter: int) -> list[complex] | None:
    n = len(a) - 1
    radius = 1.0 + max(abs(c) for c in a[1:])
    z = [radius * cmath.exp(1j * (2.0 * math.pi * k / n + offset)) for k in range(n)]
    done = [False] * n
    for _ in range(max_iter):
        for k in range(n):
            if done[k]:
                continue
            zk = z[k]
            p, dp = horner(a, zk)
            if abs(p) <= 8.0 * _EPS * _abs_poly(a, abs(zk)):
                done[k] = True
                continue
            ratio = p / dp if dp != 0 else complex(radius * 1e-3)
            s = sum(1.0 / (zk - z[j]) for j in range(n) if j != k and z[j] != zk)
            denom = 1.0 - ratio * s
            w = ratio / denom if denom != 0 else ratio
            z[k] = zk - w
            if abs(w) <= 4.0 * _EPS * abs(z[k]):
                done[k] = True
        if all(done):
            return z
    return None


def all_roots(coeffs: Sequence[float], cfg: ToleranceConfig = DEFAULT) -> list[complex]:
    """Every complex root of a polynomial by Aberth-Ehrlich simultaneous iteration.

    The polynomial is first rescaled by ``rho = max |a_k / a_0|**(1/k)``; seeds
    then sit on the Cauchy-bound circle ``1 + max|b_k|`` of the scaled
    coefficients with a 0.4 rad offset.  One retry with rotated seeds is made before giving up.
    """
    coeffs = [float(c) if not isinstance(c, complex) else c for c in coeffs]
    if not coeffs or coeffs[0] == 0:
        raise DomainError("leading coefficient must be non-zero")
    if len(coeffs) - 1 > 16:
        raise DomainError("degree above 16 is not supported")
    zeros = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
        zeros += 1
    n = len(coeffs) - 1
    lead = coeffs[0]
    a = [c / lead for c in coeffs]
    if n == 0:
        roots = []
    elif n == 1:
        roots = [complex(-a[1])]
    else:
        # x = rho y brings every root near the unit circle before seeding
        rho = max(abs(c) ** (1.0 / k) for k, c in enumerate(a) if k and c != 0)
        b = [c / rho ** k for k, c in enumerate(a)]
        # clusters converge only linearly, so the sweep budget grows with degree
        sweeps = max(cfg.max_iter, 200 * n)
        roots = _aberth(b, 0.4, sweeps)
        if roots is None:
            roots = _aberth(b, 0.4 + math.pi / n, sweeps)
        if roots is None:
            raise NoConvergence(f"Aberth iteration did not settle in {sweeps} sweeps")
        roots = [newton_polish(a, rho * z) for z in roots]
    return roots + [0j] * zeros


def match_roots(xs: Sequence[complex], ys: Sequence[complex]) -> float:
    """Largest relative distance ``|x - y| / max(1, |x|)`` under a greedy pairing."""
    if len(xs) != len(ys):
        return math.inf
    pairs = sorted(
        (abs(x - y) / max(1.0, abs(x)), i, j) for i, x in enumerate(xs) for j, y in enumerate(ys)
    )
    used_x, used_y, worst = set(), set(), 0.0
    for d, i, j in pairs:
        if i in used_x or j in used_y:
            continue
        used_x.add(i)
        used_y.add(j)
        worst = max(worst, d)
    return worst
