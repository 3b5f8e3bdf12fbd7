"""Input validation helpers shared by the estimators and the CLI."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from .approx.transform import in_domain


def check_flow_array(X, *, allow_out_of_domain=True):
    """Validate an ``(n_samples, 2)`` array of ``[Re, eps]`` rows.

    Returns a float64 copy-free view where possible. Raises ``ValueError``
    for non-finite values, ``Re <= 0`` or ``eps < 0``. With
    ``allow_out_of_domain=False`` points outside the Moody box are rejected
    too.
    """
    X = check_array(X, dtype=np.float64, ensure_2d=True)
    if X.shape[1] != 2:
        raise ValueError(f"expected 2 columns [Re, eps], got {X.shape[1]}")
    re, eps = X[:, 0], X[:, 1]
    if np.any(re <= 0):
        raise ValueError("Reynolds numbers must be positive")
    if np.any(eps < 0):
        raise ValueError("relative roughness must be non-negative")
    if not allow_out_of_domain and not np.all(in_domain(re, eps)):
        raise ValueError("points outside Re in [4000, 1e8], eps in [0, 0.05]")
    return X


def check_positive_count(n, name="n"):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")
    return int(n)
