"""Evaluation configuration and the result record returned by evaluators.

All routines work at a single double precision; accuracy control is by
a-posteriori error estimates, never by raising the working precision.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and budget caps governing every numerical method.

    rel_tol / abs_tol: convergence targets for series and quadratures.
    max_series_terms: cap on terms summed by any single power series.
    max_quad_levels: cap on adaptive quadrature refinement levels.
    contour_height_cap: truncation height for vertical-line contour
        integrals.
    oscillatory_period_cap: maximum number of half-periods summed when
        integrating a slowly decaying oscillatory tail.
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-15
    max_series_terms: int = 200
    max_quad_levels: int = 12
    contour_height_cap: float = 200.0
    oscillatory_period_cap: int = 400

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.rel_tol < 100 * _EPS:
            raise ValueError(f"rel_tol must be >= {100 * _EPS:.3g}")
        if min(self.max_series_terms, self.max_quad_levels,
               self.oscillatory_period_cap) <= 0:
            raise ValueError("iteration caps must be positive")
        if self.contour_height_cap <= 0:
            raise ValueError("contour_height_cap must be positive")

    def tol_for(self, magnitude: float) -> float:
        """Absolute tolerance implied by the config at a given value scale."""
        return max(self.rel_tol * magnitude, self.abs_tol)

    def with_overrides(self, **kwargs) -> "EvalConfig":
        return replace(self, **kwargs)


DEFAULT_CONFIG = EvalConfig()


@dataclass
class Evaluation:
    """A computed value bundled with its a-posteriori error estimate.

    converged=True asserts err_est <= max(rel_tol*|value|, abs_tol) under
    the config that produced it.
    """

    value: complex
    err_est: float
    method: str
    work: int = 0
    converged: bool = False

    def rel_err(self) -> float:
        scale = abs(self.value)
        return self.err_est / scale if scale > 0 else self.err_est


def finish_evaluation(value: complex, err_est: float, method: str, work: int,
                      cfg: EvalConfig) -> Evaluation:
    """Assemble an Evaluation, deciding the converged flag from the config."""
    ok = err_est <= cfg.tol_for(abs(value))
    return Evaluation(value=complex(value), err_est=float(err_est),
                      method=method, work=int(work), converged=ok)
