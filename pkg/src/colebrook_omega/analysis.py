"""Relative-error sweeps and evaluation timing."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .approx import FlowPoint, friction_batch, get_method, method_ids
from .exceptions import InvalidReferenceError, OracleFailureError
from .reference import reference_f
from .sampling import DEFAULT_DOMAIN, DomainSampler, SobolStream, map_to_domain_batch

DEFAULT_SWEEP_N = 10**6
FULL_SWEEP_N = 8 * 10**6
CHUNK = 1 << 16


def rel_error(f_ref, f_approx):
    """Signed relative error ``(f_ref - f_approx) / f_ref`` in percent."""
    f_ref = np.asarray(f_ref, dtype=np.float64)
    if np.any(~(f_ref > 0)):
        raise InvalidReferenceError("reference friction factor must be positive")
    out = (f_ref - f_approx) / f_ref * 100.0
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ErrorStats:
    """Aggregates of ``delta %`` over a sweep.

    ``max_rel_err_pct`` and ``mean_rel_err_pct`` are taken on ``|delta %|``;
    ``signed_max``/``signed_min`` keep the sign for bias inspection.
    """

    n: int
    max_rel_err_pct: float
    argmax: FlowPoint
    mean_rel_err_pct: float
    signed_max: float
    signed_min: float
    abs_sum: float

    @classmethod
    def from_arrays(cls, re, eps, delta):
        a = np.abs(delta)
        i = int(np.argmax(a))
        s = float(np.sum(a))
        return cls(
            n=len(a),
            max_rel_err_pct=float(a[i]),
            argmax=FlowPoint(float(re[i]), float(eps[i])),
            mean_rel_err_pct=s / len(a),
            signed_max=float(np.max(delta)),
            signed_min=float(np.min(delta)),
            abs_sum=s,
        )

    def merge(self, other: ErrorStats) -> ErrorStats:
        """Combine two disjoint sweeps; ties keep ``self``'s argmax."""
        n = self.n + other.n
        s = self.abs_sum + other.abs_sum
        best = self if self.max_rel_err_pct >= other.max_rel_err_pct else other
        return ErrorStats(
            n=n,
            max_rel_err_pct=best.max_rel_err_pct,
            argmax=best.argmax,
            mean_rel_err_pct=s / n,
            signed_max=max(self.signed_max, other.signed_max),
            signed_min=min(self.signed_min, other.signed_min),
            abs_sum=s,
        )


def _chunk_stats(specs, domain, start, m):
    re, eps = map_to_domain_batch(SobolStream(start).take(m), domain)
    try:
        f_ref = reference_f(re, eps)
    except OracleFailureError as exc:
        raise OracleFailureError(f"reference failed in sweep: {exc}", exc.point) from exc
    out = []
    for spec in specs:
        delta = rel_error(f_ref, friction_batch(re, eps, spec))
        out.append(ErrorStats.from_arrays(re, eps, delta))
    return out


def sweep_errors(methods, sampler: DomainSampler, n, *, chunk_size=CHUNK, threads=1):
    """Error statistics of several methods over the next ``n`` sampler points.

    Points are split into index blocks of ``chunk_size``; each block builds
    its own Sobol stream, so results do not depend on ``threads``. The
    sampler is advanced by ``n``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    specs = [get_method(m) for m in methods]
    start = sampler.stream.index
    blocks = [
        (start + k, min(chunk_size, n - k)) for k in range(0, n, chunk_size)
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(
                pool.map(lambda b: _chunk_stats(specs, sampler.domain, *b), blocks)
            )
    else:
        parts = [_chunk_stats(specs, sampler.domain, *b) for b in blocks]
    sampler.stream = SobolStream(start + n)
    merged = parts[0]
    for part in parts[1:]:
        merged = [a.merge(b) for a, b in zip(merged, part)]
    return {spec.id: st for spec, st in zip(specs, merged)}


def error_sweep(method, sampler: DomainSampler, n, **kwargs) -> ErrorStats:
    """Error statistics of one method; see :func:`sweep_errors`."""
    spec = get_method(method)
    return sweep_errors([spec], sampler, n, **kwargs)[spec.id]


@dataclass(frozen=True)
class BenchmarkRecord:
    method: str
    n: int
    elapsed_ns: int
    ns_per_eval: float
    checksum: float
    repetitions: int
    error: ErrorStats | None = None


def timing_run(method, points, repetitions=5) -> BenchmarkRecord:
    """Best-of-``repetitions`` wall time of evaluating ``method`` on ``points``.

    ``points`` is a precomputed ``(re, eps)`` pair of arrays. One untimed
    warm-up pass precedes the timed ones; the sum of outputs is kept as a
    checksum and must agree across repetitions. Runs on the calling thread.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    spec = get_method(method)
    re, eps = (np.ascontiguousarray(p, dtype=np.float64) for p in points)
    checksum = float(np.sum(friction_batch(re, eps, spec)))
    best = None
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        f = friction_batch(re, eps, spec)
        dt = time.perf_counter_ns() - t0
        s = float(np.sum(f))
        if s != checksum:
            raise RuntimeError(f"checksum changed between repetitions for {spec.id}")
        best = dt if best is None else min(best, dt)
    return BenchmarkRecord(spec.id, len(re), best, best / len(re), checksum, repetitions)


def table1_report(
    n=DEFAULT_SWEEP_N,
    *,
    methods=None,
    domain=DEFAULT_DOMAIN,
    seed_index=1,
    threads=1,
    timing_n=1 << 18,
    repetitions=5,
):
    """Error sweep and timing for every method, in published table order."""
    ids = list(methods) if methods is not None else method_ids()
    stats = sweep_errors(ids, DomainSampler(domain, seed_index), n, threads=threads)
    points = DomainSampler(domain, seed_index).draw(min(n, timing_n))
    records = []
    for mid in ids:
        rec = timing_run(mid, points, repetitions)
        records.append(replace(rec, error=stats[get_method(mid).id]))
    return records
