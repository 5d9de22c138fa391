"""Parabolic trigonometric functions, Chebyshev radicals and the cubic and
trinomial-quintic solvers built on them."""

from .config import (
    DEFAULT,
    DepthExceeded,
    DomainError,
    NoConvergence,
    PtrigError,
    ResidualGateFailed,
    SingularPoint,
    ToleranceConfig,
)
from .gentrig import GenTrigParams, GenTrigPoint, cos_m, gen_derivatives, gen_point, gen_tan, q1_polynomial, sin_m
from .hyperseries import PfqSpec, SeriesResult, binomial_c13_series, bring_series, chebyshev_2f1, cos_m_series, pfq_series
from .polysolve import (
    CubicEquation,
    QuinticTrinomial,
    RootSet,
    bring_root,
    reduce_cubic,
    solve_cubic,
    solve_quintic_trinomial,
)
from .special_core import (
    NestedRadicalSpec,
    PtfPoint,
    chebyshev_radical,
    cos_p,
    cos_p_series,
    hyper_parabolic_sin,
    nested_radical,
    ptf_derivatives,
    sin_p,
)

__version__ = "0.1.0"
