"""High-precision Colebrook solutions used as the error oracle.

Two independent routes are provided:

* Newton iteration on the Colebrook equation in ``F = 1/sqrt(f)``
  (the canonical reference), and
* the exact Wright-omega form, with ``omega`` computed by Halley iteration
  on ``omega + ln(omega) = x``.

Both use the exact constants, never the rounded engineering ones. On the
omega route ``y = omega - x`` is evaluated as ``-ln(omega)``, which is
the same quantity without cancellation for large ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .approx.transform import (
    EXACT_A_DIVISOR,
    EXACT_B_OFFSET,
    EXACT_PREFACTOR,
    FlowPoint,
)
from .exceptions import DomainError, OracleFailureError

EPS64 = np.finfo(np.float64).eps
OMEGA_MAX_ITER = 30
NEWTON_MAX_ITER = 50
NEWTON_RTOL = 1e-14

# 2 / ln(10): derivative factor of 2 log10(.)
_K = 2.0 / math.log(10.0)


@dataclass(frozen=True)
class OmegaResult:
    omega: float
    iterations: int
    residual: float


@dataclass(frozen=True)
class ReferenceSolution:
    f: float
    inv_sqrt_f: float
    route: str
    residual: float
    iterations: int = 0


def colebrook_residual(re, eps, inv_sqrt_f):
    """``1/sqrt(f) + 2 log10(2.51/(Re sqrt(f)) + eps/3.71)``; zero at the root."""
    re = np.asarray(re, dtype=np.float64)
    return inv_sqrt_f + 2.0 * np.log10(2.51 * inv_sqrt_f / re + eps / 3.71)


def _omega_arrays(x):
    x = np.asarray(x, dtype=np.float64)
    if np.any(~(x >= 1.0)):
        raise DomainError("wright_omega is only implemented for x >= 1")
    w = x - np.log(x)
    for it in range(1, OMEGA_MAX_ITER + 1):
        # Halley step on h(w) = w + ln(w) - x.
        h = w + np.log(w) - x
        dh = 1.0 + 1.0 / w
        d2h = -1.0 / (w * w)
        step = h / dh / (1.0 - h * d2h / (2.0 * dh * dh))
        w = w - step
        if np.all(np.abs(step) <= 4.0 * EPS64 * w):
            return w, it
    raise OracleFailureError(
        f"wright_omega did not converge in {OMEGA_MAX_ITER} iterations"
    )


def wright_omega(x) -> OmegaResult:
    """Real Wright omega function for ``x >= 1``.

    Starts from ``x - ln(x)`` and applies Halley steps to
    ``omega + ln(omega) = x`` until the step is below four ulps.

    >>> wright_omega(1.0).omega
    1.0
    """
    w, it = _omega_arrays(x)
    res = np.abs(w + np.log(w) - x)
    if np.ndim(w) == 0:
        return OmegaResult(float(w), it, float(res))
    return OmegaResult(w, it, res)


def _newton_arrays(re, eps):
    re = np.asarray(re, dtype=np.float64)
    eps = np.asarray(eps, dtype=np.float64)
    if np.any(~(re > 0)) or np.any(~(eps >= 0)):
        raise DomainError("need Re > 0 and eps >= 0")
    # Start from the one-term explicit form.
    b = np.log(re) - 0.7794
    x = re * eps / 8.0878 + b
    if np.any(~(x > 0.0)):
        raise DomainError("input too far outside the turbulent range")
    c = np.log(x)
    F = 0.8686 * (b - c + c / x)
    p = 2.51 / re
    q = eps / 3.71
    for it in range(1, NEWTON_MAX_ITER + 1):
        t = p * F + q
        step = (F + _K * np.log(t)) / (1.0 + _K * p / t)
        F = F - step
        if np.all(np.abs(step) <= NEWTON_RTOL * F):
            return F, it
    bad = int(np.argmax(np.abs(step) / F)) if np.ndim(F) else 0
    raise OracleFailureError(
        "Colebrook Newton iteration did not converge",
        FlowPoint(float(re.flat[bad]), float(np.broadcast_to(eps, re.shape).flat[bad])),
    )


def newton_inv_sqrt_f(re, eps):
    """Vectorised Newton solution ``F = 1/sqrt(f)``; no diagnostics."""
    return _newton_arrays(re, eps)[0]


def solve_reference(point: FlowPoint) -> ReferenceSolution:
    """Reference friction factor at ``point`` via Newton iteration."""
    F, it = _newton_arrays(point.re, point.eps)
    F = float(F)
    res = abs(float(colebrook_residual(point.re, point.eps, F)))
    return ReferenceSolution(1.0 / (F * F), F, "newton-colebrook", res, it)


def omega_inv_sqrt_f(re, eps):
    """Vectorised exact Wright-omega solution ``F = 1/sqrt(f)``."""
    re = np.asarray(re, dtype=np.float64)
    b = np.log(re) - EXACT_B_OFFSET
    x = re * eps / EXACT_A_DIVISOR + b
    w, _ = _omega_arrays(x)
    return EXACT_PREFACTOR * (b - np.log(w))


def solve_omega(point: FlowPoint) -> ReferenceSolution:
    """Reference friction factor at ``point`` via the Wright-omega identity."""
    b = math.log(point.re) - EXACT_B_OFFSET
    x = point.re * point.eps / EXACT_A_DIVISOR + b
    om = wright_omega(x)
    F = EXACT_PREFACTOR * (b - math.log(om.omega))
    res = abs(float(colebrook_residual(point.re, point.eps, F)))
    return ReferenceSolution(1.0 / (F * F), F, "omega-based", res, om.iterations)


def cross_check(point: FlowPoint) -> float:
    """Relative difference of the two routes' friction factors."""
    f_newton = solve_reference(point).f
    return abs(solve_omega(point).f - f_newton) / f_newton


def reference_f(re, eps):
    """Vectorised reference friction factor (Newton route)."""
    F = newton_inv_sqrt_f(re, eps)
    return 1.0 / (F * F)
