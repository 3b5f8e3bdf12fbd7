"""Friction factor evaluation through the method registry."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import NonPhysicalResultError
from .methods import MethodSpec, get_method
from .transform import FlowPoint, in_domain, transform, transform_batch


@dataclass(frozen=True)
class FrictionResult:
    """Darcy friction factor with the intermediates that produced it.

    Fields are floats from :func:`evaluate` and arrays from
    :func:`evaluate_batch`.
    """

    f: float
    inv_sqrt_f: float
    y: float
    in_domain: bool


def evaluate(point: FlowPoint, method: str | MethodSpec = "SR-C-Opt") -> FrictionResult:
    """Friction factor at ``point`` with ``method``.

    Out-of-domain inputs are computed and flagged, not rejected.

    >>> r = evaluate(FlowPoint(1e5, 1e-4), "Eq29")
    >>> round(r.f, 6)
    0.018513
    """
    spec = get_method(method)
    if spec.is_reference:
        from ..reference import solve_reference

        sol = solve_reference(point)
        y = sol.inv_sqrt_f / spec.prefactor - float(_exact_b(point.re, spec))
        return FrictionResult(sol.f, sol.inv_sqrt_f, y, point.in_domain)
    tp = transform(point, spec)
    y = spec.y(tp.x, tp.c)
    inv = spec.prefactor * (tp.b + y)
    if not inv > 0:
        raise NonPhysicalResultError(
            f"1/sqrt(f) = {inv!r} <= 0 at Re={point.re!r}, eps={point.eps!r}"
        )
    return FrictionResult(1.0 / (inv * inv), inv, y, point.in_domain)


def _exact_b(re, spec):
    return np.log(re) - spec.b_offset


def inv_sqrt_f_batch(re, eps, method):
    """``1/sqrt(f)`` for arrays of inputs; the innermost kernel."""
    spec = get_method(method)
    if spec.is_reference:
        from ..reference import newton_inv_sqrt_f

        return newton_inv_sqrt_f(re, eps)
    tp = transform_batch(re, eps, spec)
    return spec.prefactor * (tp.b + spec.y(tp.x, tp.c))


def friction_batch(re, eps, method):
    """Friction factors for arrays of inputs, without validation of the result."""
    inv = inv_sqrt_f_batch(re, eps, method)
    return 1.0 / (inv * inv)


def evaluate_batch(re, eps, method: str | MethodSpec = "SR-C-Opt") -> FrictionResult:
    """Vectorised :func:`evaluate`."""
    spec = get_method(method)
    re = np.asarray(re, dtype=np.float64)
    eps = np.asarray(eps, dtype=np.float64)
    if spec.is_reference:
        from ..reference import newton_inv_sqrt_f

        inv = newton_inv_sqrt_f(re, eps)
        y = inv / spec.prefactor - _exact_b(re, spec)
    else:
        tp = transform_batch(re, eps, spec)
        y = spec.y(tp.x, tp.c)
        inv = spec.prefactor * (tp.b + y)
    if np.any(~(inv > 0)):
        raise NonPhysicalResultError("1/sqrt(f) <= 0 for some inputs")
    return FrictionResult(1.0 / (inv * inv), inv, y, in_domain(re, eps))
