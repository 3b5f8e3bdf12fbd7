"""Quasi-Monte-Carlo and grid point sets over the (Re, eps) domain."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .approx.transform import EPS_MAX, EPS_MIN, RE_MAX, RE_MIN, FlowPoint
from .exceptions import StreamExhaustedError

BITS = 32
_SCALE = 2.0**-BITS


def _direction_numbers():
    # Dimension 1 is van der Corput in base 2. Dimension 2 uses the degree-1
    # primitive polynomial x + 1 with m_1 = 1.
    v1 = [1 << (BITS - 1 - k) for k in range(BITS)]
    v2 = [1 << (BITS - 1)]
    for _ in range(1, BITS):
        prev = v2[-1]
        v2.append(prev ^ (prev >> 1))
    return np.array([v1, v2], dtype=np.uint64)


_V = _direction_numbers()


@dataclass(frozen=True)
class DomainSpec:
    """Bounds and scales of the sampled engineering domain.

    ``re_scale`` is ``"log"`` or ``"linear"``; ``eps_scale`` is ``"linear"``
    or ``"log-with-floor"``, where the lower roughness bound is raised to
    ``eps_floor`` before taking logarithms.
    """

    re_min: float = RE_MIN
    re_max: float = RE_MAX
    eps_min: float = EPS_MIN
    eps_max: float = EPS_MAX
    re_scale: str = "log"
    eps_scale: str = "linear"
    eps_floor: float = 1e-8

    def __post_init__(self):
        if not 0 < self.re_min < self.re_max:
            raise ValueError(f"need 0 < re_min < re_max, got {self.re_min}, {self.re_max}")
        if not 0 <= self.eps_min <= self.eps_max:
            raise ValueError(
                f"need 0 <= eps_min <= eps_max, got {self.eps_min}, {self.eps_max}"
            )
        if self.re_scale not in ("log", "linear"):
            raise ValueError(f"re_scale must be 'log' or 'linear', got {self.re_scale!r}")
        if self.eps_scale not in ("linear", "log-with-floor"):
            raise ValueError(
                f"eps_scale must be 'linear' or 'log-with-floor', got {self.eps_scale!r}"
            )


DEFAULT_DOMAIN = DomainSpec()


@dataclass(eq=False)
class SobolStream:
    """Unscrambled two-dimensional Sobol sequence.

    Points are produced by the Gray-code (Antonov-Saleev) update, starting
    at ``index`` 1 so the all-zero point is skipped. Two streams with equal
    ``index`` produce identical sequences.
    """

    index: int = 1
    dimension: int = field(default=2, init=False)
    direction_numbers: np.ndarray = field(default_factory=lambda: _V.copy(), repr=False)
    _state: np.ndarray = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("Sobol index starts at 1")
        self._state = _gray_point(self.index - 1, self.direction_numbers)

    def __iter__(self):
        return self

    def __next__(self):
        return self.next()

    def next(self):
        """Return the next point ``(u1, u2)`` and advance."""
        n = self.index
        if n >= 1 << BITS:
            raise StreamExhaustedError(f"Sobol stream exhausted at index {n}")
        bit = (n & -n).bit_length() - 1
        self._state = self._state ^ self.direction_numbers[:, bit]
        self.index = n + 1
        return float(self._state[0]) * _SCALE, float(self._state[1]) * _SCALE

    def take(self, n):
        """Return the next ``n`` points as an ``(n, 2)`` array and advance."""
        start = self.index
        stop = start + n
        if stop - 1 >= 1 << BITS:
            raise StreamExhaustedError(f"Sobol stream exhausted at index {1 << BITS}")
        if n == 0:
            return np.empty((0, 2))
        idx = np.arange(start, stop, dtype=np.uint64)
        pts = _gray_points(idx, self.direction_numbers)
        self._state = pts[-1].copy()
        self.index = stop
        return pts.astype(np.float64) * _SCALE


def _gray_points(idx, v):
    gray = idx ^ (idx >> np.uint64(1))
    out = np.zeros((len(idx), 2), dtype=np.uint64)
    for k in range(BITS):
        sel = ((gray >> np.uint64(k)) & np.uint64(1)).astype(bool)
        if not sel.any():
            continue
        out[sel] ^= v[:, k]
    return out


def _gray_point(n, v):
    g = n ^ (n >> 1)
    out = np.zeros(2, dtype=np.uint64)
    k = 0
    while g:
        if g & 1:
            out ^= v[:, k]
        g >>= 1
        k += 1
    return out


def sobol_next(stream: SobolStream):
    return stream.next()


def _map_re(u, spec):
    if spec.re_scale == "log":
        return spec.re_min * (spec.re_max / spec.re_min) ** u
    return spec.re_min + u * (spec.re_max - spec.re_min)


def _map_eps(u, spec):
    if spec.eps_scale == "linear":
        return spec.eps_min + u * (spec.eps_max - spec.eps_min)
    lo = max(spec.eps_min, spec.eps_floor)
    hi = max(spec.eps_max, spec.eps_floor)
    return lo * (hi / lo) ** u


def map_to_domain(u, spec: DomainSpec = DEFAULT_DOMAIN) -> FlowPoint:
    """Map a unit-square point to a :class:`FlowPoint`."""
    # Same numpy kernel as the batch path, so both agree to the last bit.
    re, eps = map_to_domain_batch(np.reshape(np.asarray(u, dtype=np.float64), (1, 2)), spec)
    return FlowPoint(float(re[0]), float(eps[0]))


def map_to_domain_batch(u, spec: DomainSpec = DEFAULT_DOMAIN):
    """Map an ``(n, 2)`` array of unit points to ``(re, eps)`` arrays."""
    u = np.asarray(u, dtype=np.float64)
    return _map_re(u[:, 0], spec), _map_eps(u[:, 1], spec)


def grid_arrays(spec: DomainSpec = DEFAULT_DOMAIN, n_re=50, n_eps=11):
    """Cartesian grid as flat ``(re, eps)`` arrays, roughness-major.

    Re is spaced per ``spec.re_scale`` and eps linearly; endpoints included.
    """
    if n_re < 2 or n_eps < 2:
        raise ValueError("grid needs at least 2 points per axis")
    re_axis = _map_re(np.linspace(0.0, 1.0, n_re), spec)
    re_axis[0], re_axis[-1] = spec.re_min, spec.re_max
    eps_axis = np.linspace(spec.eps_min, spec.eps_max, n_eps)
    eps, re = np.meshgrid(eps_axis, re_axis, indexing="ij")
    return re.ravel(), eps.ravel()


def grid(spec: DomainSpec = DEFAULT_DOMAIN, n_re=50, n_eps=11):
    re, eps = grid_arrays(spec, n_re, n_eps)
    return [FlowPoint(float(r), float(e)) for r, e in zip(re, eps)]


class DomainSampler:
    """Sobol points mapped onto a :class:`DomainSpec`."""

    def __init__(self, domain: DomainSpec = DEFAULT_DOMAIN, seed_index=1):
        self.domain = domain
        self.stream = SobolStream(seed_index)

    def draw(self, n):
        """Next ``n`` points as ``(re, eps)`` arrays."""
        return map_to_domain_batch(self.stream.take(n), self.domain)
