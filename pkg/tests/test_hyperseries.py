import itertools
import math
import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from ptrig.config import DEFAULT, DomainError, NoConvergence
from ptrig.hyperseries import (
    BRING_DENOMINATOR,
    BRING_NUMERATOR,
    BRING_RADIUS,
    COS_M_RADIUS,
    PfqSpec,
    _binomial_c13_terms,
    binomial_c13_series,
    bring_series,
    chebyshev_2f1,
    cos_m_series,
    pfq_series,
    pfq_terms,
)
from ptrig.special_core import chebyshev_radical

WIDE = DEFAULT.with_(max_terms=5000)


def _direct_term(spec, k):
    num = mpmath.fprod(mpmath.rf(a, k) for a in spec.numerator_params)
    den = mpmath.fprod(mpmath.rf(b, k) for b in spec.denominator_params) * mpmath.factorial(k)
    return num / den * mpmath.mpmathify(spec.argument) ** k


SPECS = [
    PfqSpec((1 / 3, -1 / 3), (0.5,), 0.7),
    PfqSpec((2.5, -2.5), (0.5,), -0.9),
    PfqSpec(BRING_NUMERATOR, BRING_DENOMINATOR, 0.95),
    PfqSpec(BRING_NUMERATOR, BRING_DENOMINATOR, -0.6),
    PfqSpec((1.5,), (2.0, 0.25), 3.0 + 1.0j),
]


@pytest.mark.parametrize("spec", SPECS)
def test_recurrence_matches_direct_pochhammer(spec):
    rng = random.Random(hash(spec.argument) & 0xFFFF)
    ks = sorted(rng.sample(range(1, 150), 5))
    terms = list(itertools.islice(pfq_terms(spec), ks[-1] + 1))
    for k in ks:
        ref = complex(_direct_term(spec, k))
        assert abs(terms[k] - ref) <= 1e-12 * abs(ref)


def test_binomial_terms_match_direct():
    w = (2.0 - (-1.8)) / 27.0
    terms = list(itertools.islice(_binomial_c13_terms(w), 120))
    for n in (1, 7, 33, 80, 119):
        ref = 2 / mpmath.mpf(1 - 3 * n) * mpmath.binomial(3 * n, n) * mpmath.mpf(w) ** n
        assert abs(terms[n] - float(ref)) <= 1e-12 * abs(float(ref))


def test_pfq_examples():
    assert pfq_series(PfqSpec((1, -1), (0.5,), 0.25)).value == pytest.approx(0.5, abs=1e-15)
    for spec in SPECS:
        assert pfq_series(PfqSpec(spec.numerator_params, spec.denominator_params, 0.0)).value == 1.0


def test_pfq_terminating_counts_terms():
    res = pfq_series(PfqSpec((-3, 2.0), (1.5,), 5.0))
    assert res.converged and res.terms_used == 5
    ref = mpmath.hyp2f1(-3, 2, 1.5, 5)
    assert res.value == pytest.approx(float(ref), rel=1e-14)


def test_gauss_sum_approach():
    # the limit at z = 1 is 1/2, approached like (1 - z)**(1/2)
    cfg = DEFAULT.with_(max_terms=10 ** 6)
    for z in (0.99, 0.9999):
        res = pfq_series(PfqSpec((1 / 3, -1 / 3), (0.5,), z), cfg)
        assert res.value == pytest.approx(float(mpmath.hyp2f1(1 / 3, -1 / 3, 0.5, z)), abs=1e-10)
        assert 0 < res.value - 0.5 < 0.6 * math.sqrt(1 - z)


@pytest.mark.parametrize("a, b, z", [((1, 2), (3,), 1.0), (BRING_NUMERATOR, BRING_DENOMINATOR, -1.0),
                                     ((1, 2, 3), (4,), 0.1)])
def test_pfq_domain(a, b, z):
    with pytest.raises(DomainError):
        pfq_series(PfqSpec(a, b, z))


def test_pfq_rejects_bad_denominator():
    with pytest.raises(DomainError):
        PfqSpec((1.0,), (-2.0,), 0.1)


def test_pfq_term_cap():
    with pytest.raises(NoConvergence):
        pfq_series(PfqSpec((1 / 3, -1 / 3), (0.5,), 0.999), DEFAULT.with_(max_terms=50))


@settings(max_examples=150, deadline=None)
@given(st.floats(-0.99, 0.99), st.floats(0.1, 3.0))
def test_pfq_against_mpmath_2f1(z, lam):
    res = pfq_series(PfqSpec((lam, -lam), (0.5,), z), WIDE)
    # 2F1(lam, -lam; 1/2; z) = cos(2 lam arcsin(sqrt z)), continued through complex arcsin for z < 0
    ref = mpmath.re(mpmath.cos(2 * lam * mpmath.asin(mpmath.sqrt(mpmath.mpc(z)))))
    assert res.value == pytest.approx(float(ref), abs=1e-11)
    assert res.truncation_bound <= DEFAULT.eps_term * max(1.0, abs(res.value))


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.99, 0.99))
def test_4f3_against_mpmath(z):
    res = pfq_series(PfqSpec(BRING_NUMERATOR, BRING_DENOMINATOR, z), WIDE)
    assert res.value == pytest.approx(float(mpmath.hyper(BRING_NUMERATOR, BRING_DENOMINATOR, z)), abs=1e-11)


def test_chebyshev_2f1_examples():
    assert chebyshev_2f1(1.0, 1.0) == pytest.approx(0.5, abs=1e-15)
    assert chebyshev_2f1(0.37, 2.0) == 1.0
    assert chebyshev_2f1(1 / 3, 1.0) == pytest.approx(math.cos(math.pi / 9), abs=1e-14)
    with pytest.raises(DomainError):
        chebyshev_2f1(0.5, -2.0)


@settings(max_examples=150, deadline=None)
@given(st.floats(0.05, 4.0), st.floats(-1.95, 2.0))
def test_chebyshev_2f1_is_cosine(lam, x):
    assert abs(chebyshev_2f1(lam, x, WIDE) - math.cos(lam * math.acos(x / 2))) <= 1e-8


def test_binomial_examples():
    assert binomial_c13_series(2.0).value == 2.0
    assert binomial_c13_series(1.0).value == pytest.approx(1.8793852415718169, abs=1e-14)
    with pytest.raises(DomainError):
        binomial_c13_series(-3.0)


@settings(max_examples=150, deadline=None)
@given(st.floats(-1.9, 2.0))
def test_binomial_matches_radical(tau):
    assert abs(binomial_c13_series(tau, WIDE).value - chebyshev_radical(tau).real) <= 1e-8


@settings(max_examples=100, deadline=None)
@given(st.complex_numbers(max_magnitude=3.9, allow_nan=False, allow_infinity=False))
def test_binomial_matches_radical_complex(d):
    tau = 2 - d
    assert abs(binomial_c13_series(tau, WIDE).value - chebyshev_radical(tau)) <= 1e-8


def test_bring_examples():
    assert bring_series(0.0).value == 0.0
    # mpmath.findroot on w**5 - w + 0.2 from w = 0.2
    assert bring_series(0.2).value == pytest.approx(0.200322589050942, abs=1e-12)
    with pytest.raises(DomainError):
        bring_series(0.6)
    assert BRING_RADIUS == pytest.approx(0.53499, abs=1e-5)


@settings(max_examples=150, deadline=None)
@given(st.floats(-0.5, 0.5))
def test_bring_residual_and_leading_terms(t):
    w = bring_series(t, WIDE).value
    assert abs(w ** 5 - w + t) <= 1e-9
    if abs(t) < 0.1:
        assert abs(w - (t + t ** 5 + 5 * t ** 9)) <= 40 * abs(t) ** 13 + 1e-16


def test_cos_m_series_examples():
    assert cos_m_series(8 / 5).value == 0.0
    v = cos_m_series(1.5).value
    assert abs(3 * v ** 5 + 5 * v - 0.5) < 1e-9
    with pytest.raises(DomainError):
        cos_m_series(3.0)
    # the convergence radius is (256/3)**(1/4) = 3.0393
    assert COS_M_RADIUS == pytest.approx(3.03934, abs=1e-5)


@settings(max_examples=150, deadline=None)
@given(st.floats(-3.0, 3.0))
def test_cos_m_series_residual(theta):
    phi = (theta + 8) / 5
    v = cos_m_series(phi, WIDE).value
    assert abs(3 * v ** 5 + 5 * v + theta) <= 1e-9
