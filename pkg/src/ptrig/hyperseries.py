"""Truncated generalized hypergeometric series and the specific instances used
by the parabolic and quintic machinery.

Every series is summed term by term with the ratio ``t[k+1] / t[k]`` built
from rising factorials.  Summation stops once two consecutive terms are below
``eps_term * max(1, |partial sum|)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .config import DEFAULT, DomainError, NoConvergence, ToleranceConfig

BOUNDARY_MARGIN = 1e-6

BRING_NUMERATOR = (0.2, 0.4, 0.6, 0.8)
BRING_DENOMINATOR = (0.5, 0.75, 1.25)
# |t| below this keeps 3125 t^4 / 256 inside the unit disc
BRING_RADIUS = 4.0 / 5.0 ** 1.25
# |5 phi - 8| below this keeps 3 theta^4 / 256 inside the unit disc
COS_M_RADIUS = (256.0 / 3.0) ** 0.25


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    converged: bool
    truncation_bound: float

    @property
    def real(self) -> float:
        return self.value.real if isinstance(self.value, complex) else float(self.value)


@dataclass(frozen=True)
class PfqSpec:
    numerator_params: Sequence[float]
    denominator_params: Sequence[float]
    argument: complex = 0.0

    def __post_init__(self):
        for b in self.denominator_params:
            if b <= 0 and float(b).is_integer():
                raise DomainError(f"denominator parameter {b} is a non-positive integer")

    @property
    def terminates(self) -> bool:
        return any(a <= 0 and float(a).is_integer() for a in self.numerator_params)


def sum_series(terms: Iterator[complex], cfg: ToleranceConfig = DEFAULT) -> SeriesResult:
    """Sum ``terms`` under the two-small-consecutive-terms rule.

    A term that is exactly zero ends the sum immediately (terminating series).
    """
    total = 0.0
    small = 0
    last = math.inf
    n = 0
    for term in terms:
        if n >= cfg.max_terms:
            raise NoConvergence(f"series not converged after {cfg.max_terms} terms "
                                f"(last term {abs(last):.3e})")
        n += 1
        if term == 0:
            return SeriesResult(total, n, True, 0.0)
        total += term
        last = term
        if abs(term) <= cfg.eps_term * max(1.0, abs(total)):
            small += 1
            if small == 2:
                return SeriesResult(total, n, True, abs(term))
        else:
            small = 0
    raise NoConvergence("term generator ended before the stopping rule was met")


def pfq_terms(spec: PfqSpec) -> Iterator[complex]:
    """Terms of ``pFq(a; b; z)`` generated by the rising-factorial ratio rule."""
    z = spec.argument
    term = 1.0 + 0.0 * z
    k = 0
    while True:
        yield term
        ratio = z / (k + 1)
        for a in spec.numerator_params:
            ratio *= a + k
        for b in spec.denominator_params:
            ratio /= b + k
        term = term * ratio
        k += 1


def pfq_series(spec: PfqSpec, cfg: ToleranceConfig = DEFAULT) -> SeriesResult:
    p, q = len(spec.numerator_params), len(spec.denominator_params)
    r = abs(spec.argument)
    if not spec.terminates and r > 0:
        if p > q + 1:
            raise DomainError(f"{p}F{q} diverges for every non-zero argument")
        if p == q + 1 and r > 1.0 - BOUNDARY_MARGIN:
            raise DomainError(f"|z| = {r!r} is outside the convergence disc of {p}F{q}")
    return sum_series(pfq_terms(spec), cfg)


def chebyshev_2f1(lam: float, x: float, cfg: ToleranceConfig = DEFAULT) -> float:
    """``2F1(lam, -lam; 1/2; (2 - x) / 4)``, which equals ``cos(lam * arccos(x / 2))``."""
    if not abs(2.0 - x) < 4.0:
        raise DomainError(f"x = {x!r} outside the disc |2 - x| < 4")
    spec = PfqSpec((lam, -lam), (0.5,), (2.0 - x) / 4.0)
    return pfq_series(spec, cfg).real


def _binomial_c13_terms(w: complex) -> Iterator[complex]:
    # t_n = 2 / (1 - 3n) * C(3n, n) * w**n; C(3n, n) w**n is advanced as one
    # product because C(3n, n) alone overflows near the disc edge
    coef = 1.0 + 0.0 * w
    n = 0
    while True:
        yield 2.0 / (1 - 3 * n) * coef
        coef *= w * ((3 * n + 1) * (3 * n + 2) * (3 * n + 3) / ((n + 1) * (2 * n + 1) * (2 * n + 2)))
        n += 1


def binomial_c13_series(tau: complex, cfg: ToleranceConfig = DEFAULT) -> SeriesResult:
    """Chebyshev radical ``C_{1/3}(tau)`` as the binomial series in ``(2 - tau) / 27``.

    The coefficient ``C(3n, n)`` grows like ``(27/4)**n``, so the series
    converges for ``|2 - tau| < 4``.
    """
    if not abs(2.0 - tau) < 4.0 * (1.0 - BOUNDARY_MARGIN):
        raise DomainError(f"tau = {tau!r} outside the disc |2 - tau| < 4")
    return sum_series(_binomial_c13_terms((2.0 - tau) / 27.0), cfg)


def bring_series(t: float, cfg: ToleranceConfig = DEFAULT) -> SeriesResult:
    """Root of ``w**5 - w + t = 0`` near ``w = t`` as ``t * 4F3(...; 3125 t**4 / 256)``."""
    if not abs(t) < BRING_RADIUS:
        raise DomainError(f"|t| = {abs(t)!r} not below {BRING_RADIUS:.6f}")
    res = pfq_series(PfqSpec(BRING_NUMERATOR, BRING_DENOMINATOR, 3125.0 * t ** 4 / 256.0), cfg)
    return SeriesResult(t * res.real, res.terms_used, res.converged, abs(t) * res.truncation_bound)


def cos_m_series(phi: float, cfg: ToleranceConfig = DEFAULT) -> SeriesResult:
    """Real root of ``3 y**5 + 5 y + (5 phi - 8) = 0`` from the 4F3 series."""
    theta = 5.0 * phi - 8.0
    if not abs(theta) < COS_M_RADIUS:
        raise DomainError(f"|5 phi - 8| = {abs(theta)!r} not below {COS_M_RADIUS:.6f}")
    res = pfq_series(PfqSpec(BRING_NUMERATOR, BRING_DENOMINATOR, -3.0 * theta ** 4 / 256.0), cfg)
    scale = -theta / 5.0
    return SeriesResult(scale * res.real, res.terms_used, res.converged,
                        abs(scale) * res.truncation_bound)
