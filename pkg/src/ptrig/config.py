"""Tolerance knobs and the exception hierarchy shared by every module."""

from __future__ import annotations

from dataclasses import dataclass, replace


class PtrigError(Exception):
    """Base class for all library errors."""


class DomainError(PtrigError, ValueError):
    """Argument lies outside the region where the requested evaluation is defined."""


class NoConvergence(PtrigError, ArithmeticError):
    """An iteration or series hit its cap before meeting its stopping rule."""


class DepthExceeded(NoConvergence):
    """Adaptive quadrature recursed past its depth limit."""


class ResidualGateFailed(NoConvergence):
    """Roots were found but at least one residual is above the certification gate."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class SingularPoint(PtrigError, ZeroDivisionError):
    """A formula was evaluated where its denominator vanishes."""


@dataclass(frozen=True)
class ToleranceConfig:
    eps_residual: float = 1e-10
    eps_term: float = 1e-15
    max_terms: int = 200
    max_iter: int = 100
    eps_quad: float = 1e-10

    def __post_init__(self):
        for name in ("eps_residual", "eps_term", "eps_quad"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        for name in ("max_terms", "max_iter"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")

    def with_(self, **changes) -> "ToleranceConfig":
        return replace(self, **changes)


DEFAULT = ToleranceConfig()
