"""Cross-validation suites behind ``ptrig check``.

Each check evaluates one invariant over a small deterministic corpus and
reports the largest observed error against a fixed tolerance.  The corpora
are lighter than the ones in the test suite so that ``check --suite all``
finishes in a couple of seconds.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Callable

from . import gentrig, hyperseries, numerics, polysolve, special_core
from .config import DEFAULT, ToleranceConfig


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


def _grid(lo, hi, n):
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def identities(cfg: ToleranceConfig = DEFAULT) -> list[CheckResult]:
    phis = _grid(-10.0, 10.0, 1000)
    pts = [special_core.PtfPoint.at(x) for x in phis]
    out = [
        CheckResult("identities", "cos_p^2 + sin_p = 1", max(p.identity_residual() for p in pts), 1e-12),
        CheckResult("identities", "cos_p cubic residual", max(p.cubic_residual() for p in pts), 1e-10),
        CheckResult("identities", "cos_p strictly decreasing",
                    max(max(0.0, b.c - a.c) for a, b in zip(pts, pts[1:])), 0.0),
    ]
    h = 1e-5
    fd = 0.0
    for x in _grid(-5.0, 5.0, 101):
        dc, ds = special_core.ptf_derivatives(x)
        fd = max(fd, abs((special_core.cos_p(x + h) - special_core.cos_p(x - h)) / (2 * h) - dc),
                 abs((special_core.sin_p(x + h) - special_core.sin_p(x - h)) / (2 * h) - ds))
    out.append(CheckResult("identities", "p t f derivative rules vs central differences", fd, 1e-6))

    rng = random.Random(7)
    cheb = 0.0
    for _ in range(1000):
        a = cmath.rect(10.0 * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))
        r = special_core.chebyshev_radical(a)
        cheb = max(cheb, abs(r ** 3 - 3 * r - a) / max(1.0, abs(a)))
    out.append(CheckResult("identities", "Chebyshev radical triple-angle residual", cheb, 1e-9))

    qm = max(abs(gentrig.quintic_residual(x, gentrig.cos_m(x, cfg))) / max(1.0, abs(5 * x - 8))
             for x in _grid(-5.0, 8.0, 200))
    out.append(CheckResult("identities", "cos_m quintic residual", qm, 1e-10))
    hps = max(abs(special_core.hps_residual(x, s)) for x in _grid(-1.0, 1.0, 201)
              for s in special_core.hps_roots(x))
    out.append(CheckResult("identities", "hyper-parabolic sine residual", hps, 1e-10))
    return out


def series(cfg: ToleranceConfig = DEFAULT) -> list[CheckResult]:
    cfg = cfg.with_(max_terms=max(cfg.max_terms, 5000))
    taus = _grid(-1.9, 2.0, 101)[1:]
    b13 = max(abs(hyperseries.binomial_c13_series(t, cfg).value - special_core.chebyshev_radical(t))
              for t in taus)
    lim = 0.95 * special_core.COS_P_SERIES_LIMIT
    phis = [(4.0 - tau) / 3.0 for tau in _grid(-lim, lim, 50)]
    cps = max(abs(special_core.cos_p_series(x, cfg).value - special_core.cos_p(x)) for x in phis)
    br = max(abs(w ** 5 - w + t) for t in _grid(-0.5, 0.5, 50)
             for w in [hyperseries.bring_series(t, cfg).real])
    cm = max(abs(gentrig.quintic_residual(x, hyperseries.cos_m_series(x, cfg).real))
             for x in _grid(1.0, 2.2, 50))
    c2 = max(abs(hyperseries.chebyshev_2f1(lam, x, cfg) - math.cos(lam * math.acos(x / 2)))
             for lam in (1 / 3, 0.5, 1.0, 2.5) for x in _grid(-1.9, 2.0, 40))
    return [
        CheckResult("series", "binomial C_1/3 series vs Chebyshev radical", b13, 1e-8),
        CheckResult("series", "cos_p series vs closed form", cps, 1e-8),
        CheckResult("series", "Bring 4F3 series residual", br, 1e-9),
        CheckResult("series", "cos_m 4F3 series residual", cm, 1e-9),
        CheckResult("series", "2F1(lam,-lam;1/2;(2-x)/4) vs cos(lam arccos(x/2))", c2, 1e-8),
    ]


def quadrature(cfg: ToleranceConfig = DEFAULT) -> list[CheckResult]:
    closed: list[tuple[Callable[[float], float], float, float, float]] = [
        (lambda x: x * x, 0.0, 1.0, 1.0 / 3.0),
        (lambda x: math.sqrt(max(0.0, 1.0 - x * x)), -1.0, 1.0, math.pi / 2.0),
        (lambda x: 1.0 - x ** 4, 0.0, 1.0, 0.8),
        (math.exp, 0.0, 1.0, math.e - 1.0),
    ]
    qerr = max(abs(numerics.adaptive_quad(f, (a, b), 1e-11) - v) for f, a, b, v in closed)
    out = [CheckResult("quadrature", "adaptive Simpson on closed-form integrals", qerr, 1e-10)]
    area = 0.0
    for pq in ((2, 2), (2, 1), (4, 1)):
        params = gentrig.GenTrigParams(*pq)
        top = gentrig.phi_max(params, cfg)
        for k in range(8):
            pt = gentrig.gen_point(params, top * (k + 0.5) / 8, cfg)
            area = max(area, gentrig.area_residual(pt))
    out.append(CheckResult("quadrature", "sector-area relation for (2,2), (2,1), (4,1)", area, 1e-8))
    circ = gentrig.GenTrigParams(2, 2)
    ce = max(abs(gentrig.gen_point(circ, x, cfg).c - math.cos(x)) for x in _grid(0.0, math.pi, 9))
    out.append(CheckResult("quadrature", "C(phi|2,2) = cos(phi)", ce, 1e-8))
    return out


def solvers(cfg: ToleranceConfig = DEFAULT) -> list[CheckResult]:
    rng = random.Random(11)
    res = vieta = agree = 0.0
    for _ in range(200):
        a, b, c = (rng.uniform(-10, 10) for _ in range(3))
        rs = polysolve.solve_cubic(polysolve.CubicEquation(a, b, c), cfg)
        x1, x2, x3 = rs.roots
        scale = max(1.0, abs(a), abs(b), abs(c))
        res = max(res, max(rs.residuals))
        vieta = max(vieta, abs(x1 + x2 + x3 + a) / scale, abs(x1 * x2 + x1 * x3 + x2 * x3 - b) / scale,
                    abs(x1 * x2 * x3 + c) / scale)
        agree = max(agree, numerics.match_roots(rs.roots, numerics.all_roots([1, a, b, c], cfg)))
    qres = qagree = 0.0
    single = 0.0
    for _ in range(200):
        p, lam = rng.uniform(-10, 10), rng.uniform(-10, 10)
        rs = polysolve.solve_quintic_trinomial(polysolve.QuinticTrinomial(p, lam), cfg)
        qres = max(qres, max(rs.residuals))
        qagree = max(qagree, numerics.match_roots(rs.roots, numerics.all_roots([1.0, 0.0, 0.0, 0.0, p, lam], cfg)))
        if p > 0 and len(rs.real_roots) != 1:
            single = 1.0
    return [
        CheckResult("solvers", "cubic root residuals", res, 1e-10),
        CheckResult("solvers", "cubic Vieta identities", vieta, 1e-7),
        CheckResult("solvers", "cubic vs all-roots oracle", agree, 1e-7),
        CheckResult("solvers", "quintic root residuals", qres, 1e-10),
        CheckResult("solvers", "quintic vs all-roots oracle", qagree, 1e-7),
        CheckResult("solvers", "p > 0 quintics have one real root", single, 0.0),
    ]


SUITES = {
    "identities": identities,
    "series": series,
    "quadrature": quadrature,
    "solvers": solvers,
}


def run(suite: str, cfg: ToleranceConfig = DEFAULT) -> list[CheckResult]:
    names = list(SUITES) if suite == "all" else [suite]
    out = []
    for name in names:
        out.extend(SUITES[name](cfg))
    return out
