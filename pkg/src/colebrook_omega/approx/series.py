"""Asymptotic expansion of ``omega(x) - x`` about infinity.

The terms are written in ``x`` and ``c = ln(x)`` so the logarithm is taken
once and shared. All functions accept floats or numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np

from ..exceptions import UnsupportedTermError

MAX_ORDER = 5

#: Corrective constants added to the 1-, 2- and 3-term sums.
ALPHA = {1: 0.00056, 2: -0.0014, 3: -0.000093}

#: Coefficients of the rational corrective function ``xi``.
XI_NUM = (0.3896, 0.9873)
XI_DEN = (0.8421, 0.01274, 5.882)


def _terms(x, c, k):
    r = 1.0 / x
    yield c * (r - 1.0)
    if k >= 2:
        r2 = r * r
        yield c * r2 / 2.0 * (c - 2.0)
    if k >= 3:
        r3 = r2 * r
        yield c * r3 / 6.0 * ((2.0 * c - 9.0) * c + 6.0)
    if k >= 4:
        r4 = r3 * r
        yield c * r4 / 12.0 * (((3.0 * c - 22.0) * c + 36.0) * c - 12.0)
    if k >= 5:
        yield c * r4 * r / 60.0 * (
            (((12.0 * c - 125.0) * c + 350.0) * c - 300.0) * c + 60.0
        )


def _check_order(k, top=MAX_ORDER):
    if k not in range(1, top + 1):
        raise UnsupportedTermError(f"series order must be in 1..{top}, got {k!r}")


def s_term(i, x, c=None):
    """The ``i``-th term of the expansion, ``i`` in 1..5.

    ``c`` defaults to ``ln(x)``.
    """
    _check_order(i)
    if c is None:
        c = _ln(x)
    *_, last = _terms(x, c, i)
    return last


def series_sum(x, c, k):
    """Sum of the first ``k`` terms given a precomputed ``c = ln(x)``."""
    _check_order(k)
    total = 0.0
    for term in _terms(x, c, k):
        total = total + term
    return total


def y_series(x, k):
    """``k``-term truncated expansion of ``omega(x) - x``."""
    c = _ln(x)
    return series_sum(x, c, k)


def series_alpha_sum(x, c, k):
    _check_order(k, top=len(ALPHA))
    return series_sum(x, c, k) + ALPHA[k]


def y_series_alpha(x, k):
    """``k``-term expansion plus its optimised constant, ``k`` in 1..3."""
    _check_order(k, top=len(ALPHA))
    return y_series(x, k) + ALPHA[k]


def xi(x, c):
    """Rational correction applied on top of the one-term expansion."""
    num = XI_NUM[0] * c * (c - 1.0) - XI_NUM[1]
    c2 = c * c
    den = XI_DEN[0] * x * x + XI_DEN[1] * x * c2 * c2 + x + XI_DEN[2]
    return num / den


def series_xi_sum(x, c):
    return -c + c / x + xi(x, c)


def _ln(x):
    return math.log(x) if np.ndim(x) == 0 else np.log(x)
