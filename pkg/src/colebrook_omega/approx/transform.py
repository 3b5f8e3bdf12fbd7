"""Flow inputs and the Colebrook-to-Wright change of variables.

The Colebrook equation::

    1/sqrt(f) = -2 log10(2.51 / (Re sqrt(f)) + eps / 3.71)

is solved exactly by ``1/sqrt(f) = (z / 2.51) (B + y)`` with::

    z = 2 * 2.51 / ln(10)
    A = Re * eps / (3.71 z)
    B = ln(Re) - ln(z)
    x = A + B
    y = omega(x) - x

where ``omega`` is the Wright omega function. Every approximation in this
package only replaces ``y`` (and, in its engineering form, rounds ``z``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..exceptions import DomainError

RE_MIN = 4000.0
RE_MAX = 1e8
EPS_MIN = 0.0
EPS_MAX = 0.05

#: Exact constants of the transformation.
Z = 2.0 * 2.51 / math.log(10.0)
EXACT_PREFACTOR = 2.0 / math.log(10.0)
EXACT_A_DIVISOR = Z * 3.71
EXACT_B_OFFSET = math.log(Z)

# Patched by tests that count logarithm calls.
_log = math.log


@dataclass(frozen=True)
class FlowPoint:
    """A Reynolds number and relative roughness pair."""

    re: float
    eps: float

    @property
    def in_domain(self) -> bool:
        return in_domain(self.re, self.eps)


class TransformedPoint(NamedTuple):
    """Intermediates ``A``, ``B``, ``x = A + B`` and ``C = ln(x)``."""

    a: float
    b: float
    x: float
    c: float


def in_domain(re, eps):
    """True where ``(re, eps)`` lies inside the Moody box.

    Works elementwise on arrays.
    """
    if np.ndim(re) == 0 and np.ndim(eps) == 0:
        return bool(RE_MIN <= re <= RE_MAX and EPS_MIN <= eps <= EPS_MAX)
    re = np.asarray(re)
    eps = np.asarray(eps)
    return (re >= RE_MIN) & (re <= RE_MAX) & (eps >= EPS_MIN) & (eps <= EPS_MAX)


def transform(point: FlowPoint, spec) -> TransformedPoint:
    """Map ``point`` to ``(A, B, x, C)`` using the constants of ``spec``.

    Performs exactly two logarithm calls: ``ln(Re)`` and ``ln(x)``.
    """
    if not point.re > 0:
        raise DomainError(f"Reynolds number must be positive, got {point.re!r}")
    a = point.re * point.eps / spec.a_divisor
    b = _log(point.re) - spec.b_offset
    x = a + b
    if not x > 0:
        raise DomainError(
            f"x = A + B = {x!r} <= 0 for Re={point.re!r}, eps={point.eps!r}"
        )
    return TransformedPoint(a, b, x, _log(x))


def transform_batch(re, eps, spec) -> TransformedPoint:
    """Vectorised :func:`transform`; fields are float64 arrays."""
    re = np.asarray(re, dtype=np.float64)
    eps = np.asarray(eps, dtype=np.float64)
    if np.any(~(re > 0)):
        raise DomainError("Reynolds numbers must be positive")
    a = re * eps / spec.a_divisor
    b = np.log(re) - spec.b_offset
    x = a + b
    if np.any(~(x > 0)):
        bad = np.flatnonzero(~(x > 0))[0]
        raise DomainError(
            f"x = A + B <= 0 at Re={re.flat[bad]!r}, eps={eps.flat[bad]!r}"
        )
    return TransformedPoint(a, b, x, np.log(x))
