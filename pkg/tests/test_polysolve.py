import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from ptrig.config import DomainError
from ptrig.hyperseries import BRING_RADIUS, bring_series
from ptrig.numerics import all_roots, horner, match_roots
from ptrig.polysolve import (
    CLOSED_FORM,
    SIMULTANEOUS,
    CubicEquation,
    QuinticTrinomial,
    bring_root,
    cubic_secant_form_debug,
    reduce_cubic,
    solve_cubic,
    solve_quintic_trinomial,
)
from ptrig.special_core import cos_p

coef = st.floats(-10, 10, allow_nan=False)

# x**5 - x + 0.2 by mpmath.polyroots at 30 digits
X5_REAL = [-1.0447617000755527, 0.20032258905094197, 0.94208686562458388]
X5_PAIR = complex(-0.048823877299986523, 1.0059700179429785)


def test_reduce_cubic_examples():
    red = reduce_cubic(CubicEquation(0, 3, -4))
    assert (red.p_scale, red.phi_equiv, red.shift) == pytest.approx((1.0, 0.0, 0.0), abs=1e-15)
    red = reduce_cubic(CubicEquation(3, 6, 4))
    assert (red.p_scale, red.phi_equiv, red.shift) == pytest.approx((1.0, 4 / 3, -1.0), abs=1e-15)
    red = reduce_cubic(CubicEquation(0, -3, 1))
    assert red.p_scale is None and red.phi_equiv is None
    assert reduce_cubic(CubicEquation(0, 3, -4)).beta == pytest.approx(0.0, abs=1e-15)


@settings(max_examples=300, deadline=None)
@given(coef, coef, coef)
def test_reduction_round_trip(a, b, c):
    red = reduce_cubic(CubicEquation(a, b, c))
    assume(red.p_scale is not None and red.p_scale > 1e-6)
    # expand (sqrt(P) Y + shift)**3 + a(...)**2 + b(...) + c and divide by P**1.5
    r = math.sqrt(red.p_scale)
    sh = red.shift
    y3 = r ** 3
    y2 = 3 * r * r * sh + a * r * r
    y1 = 3 * r * sh * sh + 2 * a * r * sh + b * r
    y0 = sh ** 3 + a * sh * sh + b * sh + c
    scale = max(1.0, abs(a) ** 3, abs(b) ** 1.5, abs(c), abs(a * b))
    assert abs(y2 / y3) <= 1e-12 * scale / y3
    assert abs(y1 / y3 - 3) <= 1e-12 * scale / y3
    assert abs(y0 / y3 - (3 * red.phi_equiv - 4)) <= 1e-12 * scale / y3


def test_solve_cubic_examples():
    rs = solve_cubic(CubicEquation(0, 3, -4))
    assert match_roots(rs.roots, [1, complex(-0.5, math.sqrt(15) / 2), complex(-0.5, -math.sqrt(15) / 2)]) <= 1e-14
    assert rs.real_roots == [1.0]
    rs = solve_cubic(CubicEquation(-6, 11, -6))
    assert rs.real_roots == pytest.approx([1, 2, 3], abs=1e-14)
    w = cmath.exp(2j * math.pi / 3)
    rs = solve_cubic(CubicEquation(0, 0, -8))
    assert match_roots(rs.roots, [2, 2 * w, 2 * w * w]) <= 1e-14
    assert rs.methods == [CLOSED_FORM] * 3


def test_cubic_uses_parabolic_cosine():
    eq = CubicEquation(1.5, 4.0, -2.0)
    red = reduce_cubic(eq)
    x1 = math.sqrt(3 * eq.b - eq.a ** 2) / 3 * cos_p(red.phi_equiv) + red.shift
    assert abs(solve_cubic(eq).real_roots[0] - x1) <= 1e-9


def test_cubic_repeated_roots():
    for roots in ([1, 1, 1], [2, 2, -1], [0, 0, 0], [-3, 0.5, 0.5]):
        a = -sum(roots)
        b = roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
        c = -roots[0] * roots[1] * roots[2]
        rs = solve_cubic(CubicEquation(a, b, c))
        assert match_roots(rs.roots, roots) <= 1e-5
        assert max(rs.residuals) <= 1e-10


def test_cubic_rejects_nonfinite():
    with pytest.raises(DomainError):
        CubicEquation(math.inf, 0, 0)


@settings(max_examples=300, deadline=None)
@given(coef, coef, coef)
def test_cubic_certified(a, b, c):
    eq = CubicEquation(a, b, c)
    rs = solve_cubic(eq)
    assert rs.count == 3
    assert rs.certified(1e-10)
    x1, x2, x3 = rs.roots
    scale = max(1.0, abs(a), abs(b), abs(c))
    assert abs(x1 + x2 + x3 + a) <= 1e-7 * scale
    assert abs(x1 * x2 + x1 * x3 + x2 * x3 - b) <= 1e-7 * scale
    assert abs(x1 * x2 * x3 + c) <= 1e-7 * scale
    assert sorted(z.imag for z in rs.roots) == sorted(-z.imag for z in rs.roots)
    assert match_roots(rs.roots, all_roots(eq.coeffs)) <= 1e-7


def test_cubic_against_mpmath():
    for a, b, c in ((1.3, -7.2, 0.4), (-9.9, 3.3, 8.8), (0.1, 9.0, -9.5), (5.0, 8.0, 4.0)):
        ref = [complex(z) for z in mpmath.polyroots([1, a, b, c], extraprec=60)]
        assert match_roots(solve_cubic(CubicEquation(a, b, c)).roots, ref) <= 1e-12


def test_secant_form_misses_roots():
    out = cubic_secant_form_debug(3.0, -4.0)
    assert out["residuals"][0] <= 1e-15
    assert min(out["residuals"][1:]) > 1e-3


def test_bring_root_examples():
    assert bring_root(0.0) == 0.0
    assert bring_root(0.2) == pytest.approx(0.200322589050942, abs=1e-14)
    w = bring_root(2.0)
    # the only real root of w**5 - w + 2 is -1.26717, not -1.2436
    assert w == pytest.approx(-1.2671683045421243, abs=1e-13)
    assert abs(w ** 5 - w + 2) <= 1e-12 * 2


@settings(max_examples=300, deadline=None)
@given(st.floats(-50, 50))
def test_bring_root_residual(t):
    w = bring_root(t)
    assert abs(w ** 5 - w + t) <= 1e-12 * max(1.0, abs(t))
    if abs(t) < BRING_RADIUS:
        # continued from w(0) = 0: the root between 0 and the turning point
        assert abs(w) <= 5 ** -0.25 + 1e-12 and w * t >= 0


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.5, 0.5))
def test_bring_root_matches_series(t):
    assert abs(bring_root(t) - bring_series(t).value) <= 1e-9


def test_quintic_examples():
    rs = solve_quintic_trinomial(QuinticTrinomial(5 / 3, 8 / 3))
    assert rs.count == 5 and rs.real_roots == pytest.approx([-1.0], abs=1e-15)
    rs = solve_quintic_trinomial(QuinticTrinomial(5 / 3, 0.0))
    r = (5 / 3) ** 0.25
    quartic = [r * cmath.exp(1j * math.pi * (2 * k + 1) / 4) for k in range(4)]
    assert match_roots(rs.roots, [0] + quartic) <= 1e-14
    rs = solve_quintic_trinomial(QuinticTrinomial(-1.0, 0.2))
    assert rs.real_roots == pytest.approx(X5_REAL, abs=1e-14)
    assert match_roots(rs.roots, X5_REAL + [X5_PAIR, X5_PAIR.conjugate()]) <= 1e-14


def test_quintic_zero_p():
    for lam in (32.0, -1.0, 1e-3):
        rs = solve_quintic_trinomial(QuinticTrinomial(0.0, lam))
        assert rs.real_roots == pytest.approx([math.copysign(abs(lam) ** 0.2, -lam)], rel=1e-14)
        assert rs.count == 5


@settings(max_examples=300, deadline=None)
@given(coef, coef)
def test_quintic_certified(p, lam):
    eq = QuinticTrinomial(p, lam)
    rs = solve_quintic_trinomial(eq)
    assert rs.count == 5 and rs.certified(1e-10)
    cplx = [z for z in rs.roots if z.imag != 0]
    # pairs are mirrored exactly, not merely to rounding
    assert all(z.conjugate() in cplx for z in cplx)
    if p > 0:
        assert len(rs.real_roots) == 1
    if p < 0:
        # three real roots iff |lam| is below the value at the turning points
        edge = 4 * (-p / 5) ** 1.25
        if abs(abs(lam) - edge) > 1e-9 * edge:
            assert len(rs.real_roots) == (3 if abs(lam) < edge else 1)
    assert match_roots(rs.roots, all_roots(eq.coeffs)) <= 1e-7


def test_quintic_methods():
    rs = solve_quintic_trinomial(QuinticTrinomial(-2.0, 0.3))
    assert rs.methods[0] == "series" and set(rs.methods[1:]) == {SIMULTANEOUS}
    rs = solve_quintic_trinomial(QuinticTrinomial(-1.0, 5.0))
    assert rs.methods[0] == "newton"
    assert solve_quintic_trinomial(QuinticTrinomial(2.0, 1.0)).methods[0] == CLOSED_FORM


def test_quintic_against_mpmath():
    for p, lam in ((3.0, -7.0), (-6.5, 1.25), (-0.01, 9.0), (9.5, 9.5)):
        ref = [complex(z) for z in mpmath.polyroots([1, 0, 0, 0, p, lam], extraprec=60)]
        rs = solve_quintic_trinomial(QuinticTrinomial(p, lam))
        assert match_roots(rs.roots, ref) <= 1e-13
        assert abs(horner([1, 0, 0, 0, p, lam], rs.real_roots[0])[0]) <= 1e-13 * max(1, abs(lam))
