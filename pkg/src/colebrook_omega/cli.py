"""Command-line interface.

Usage::

    colebrook-omega compute --re 1e5 --eps 1e-4 --with-reference
    colebrook-omega table1 --n 1000000 --format csv
    colebrook-omega sweep --emit moody --n-re 50 --n-eps 6 > moody.csv
    colebrook-omega sweep --emit figure1 --n 10000 > figure1.csv
    colebrook-omega bench --n 262144

Exit codes: 0 success, 1 internal or oracle failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .analysis import DEFAULT_SWEEP_N, FULL_SWEEP_N, rel_error, table1_report, timing_run
from .approx import DEFAULT_METHOD, METHODS, FlowPoint, evaluate, get_method
from .approx.transform import EXACT_A_DIVISOR, EXACT_B_OFFSET
from .exceptions import ColebrookError, DomainError, NonPhysicalResultError, UnknownMethodError
from .reference import reference_f, solve_reference, wright_omega
from .sampling import DomainSampler, DomainSpec, grid_arrays

FIELDS = ("method", "re", "eps", "f", "inv_sqrt_f", "delta_pct", "in_domain")


@dataclass(frozen=True)
class OutputRecord:
    method: str
    re: float
    eps: float
    f: float
    inv_sqrt_f: float
    delta_pct: float | None
    in_domain: bool

    def csv_row(self):
        return [
            self.method,
            fmt(self.re),
            fmt(self.eps),
            fmt(self.f),
            fmt(self.inv_sqrt_f),
            "" if self.delta_pct is None else fmt(self.delta_pct),
            "true" if self.in_domain else "false",
        ]

    def as_dict(self):
        return {k: getattr(self, k) for k in FIELDS}


def fmt(v):
    """17 significant digits; round-trips every float64."""
    return f"{float(v):.17g}"


class UsageError(Exception):
    pass


def _finite(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return v


def _count(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a count: {text!r}") from None
    if not (math.isfinite(v) and v >= 1 and v == int(v)):
        raise argparse.ArgumentTypeError(f"not a positive integer: {text!r}")
    return int(v)


def _methods(text):
    if text.strip().lower() == "all":
        return list(METHODS)
    try:
        return [get_method(t).id for t in text.split(",") if t.strip()]
    except UnknownMethodError as exc:
        raise UsageError(str(exc)) from None


def _domain(args):
    try:
        return DomainSpec(
            re_min=args.re_min,
            re_max=args.re_max,
            eps_min=args.eps_min,
            eps_max=args.eps_max,
            re_scale=args.re_scale,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output -----------------------------------------------------------------


def write_records(records, fmt_name, out):
    if fmt_name == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(FIELDS)
        for r in records:
            w.writerow(r.csv_row())
    elif fmt_name == "json":
        json.dump([r.as_dict() for r in records], out, indent=2)
        out.write("\n")
    else:
        rows = [list(FIELDS)] + [
            [r.method, f"{r.re:.6g}", f"{r.eps:.6g}", f"{r.f:.10f}", f"{r.inv_sqrt_f:.10f}",
             "" if r.delta_pct is None else f"{r.delta_pct:.3e}",
             "true" if r.in_domain else "false"]
            for r in records
        ]
        _write_plain(rows, out)


def _write_plain(rows, out):
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        out.write("  ".join(str(v).ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _write_table(header, rows, fmt_name, out):
    if fmt_name == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows([[fmt(v) if isinstance(v, float) else v for v in r] for r in rows])
    elif fmt_name == "json":
        json.dump([dict(zip(header, r)) for r in rows], out, indent=2)
        out.write("\n")
    else:
        pretty = [[f"{v:.4g}" if isinstance(v, float) else str(v) for v in r] for r in rows]
        _write_plain([list(header)] + pretty, out)


# -- commands ---------------------------------------------------------------


def cmd_compute(args, out, err):
    if not args.re > 0:
        raise UsageError(f"--re must be positive, got {args.re!r}")
    if args.eps < 0:
        raise UsageError(f"--eps must be non-negative, got {args.eps!r}")
    methods = _methods(args.method)
    point = FlowPoint(args.re, args.eps)
    if not point.in_domain:
        err.write(
            f"warning: Re={args.re:g}, eps={args.eps:g} is outside "
            "Re in [4000, 1e8], eps in [0, 0.05]\n"
        )
    try:
        f_ref = solve_reference(point).f if args.with_reference else None
        records = []
        for mid in methods:
            r = evaluate(point, mid)
            delta = rel_error(f_ref, r.f) if f_ref is not None else None
            records.append(OutputRecord(mid, point.re, point.eps, r.f, r.inv_sqrt_f, delta, r.in_domain))
    except (DomainError, NonPhysicalResultError) as exc:
        raise UsageError(str(exc)) from None
    write_records(records, args.format, out)


def cmd_table1(args, out, err):
    n = FULL_SWEEP_N if args.full else args.n
    records = table1_report(
        n,
        methods=_methods(args.method),
        domain=_domain(args),
        seed_index=args.seed_index,
        threads=args.threads,
        timing_n=args.timing_n,
        repetitions=args.repetitions,
    )
    ref_ns = next((r.ns_per_eval for r in records if r.method == "Reference"), None)
    header = (
        "method", "equation", "y_equation", "published_max_pct", "max_rel_err_pct",
        "mean_rel_err_pct", "signed_min_pct", "signed_max_pct", "argmax_re",
        "argmax_eps", "n", "ns_per_eval", "speedup_vs_reference",
    )
    rows = []
    for r in records:
        spec = get_method(r.method)
        e = r.error
        speedup = ref_ns / r.ns_per_eval if ref_ns else ""
        rows.append([
            spec.id, spec.label, spec.y_equation, spec.published_max_pct,
            e.max_rel_err_pct, e.mean_rel_err_pct, e.signed_min, e.signed_max,
            e.argmax.re, e.argmax.eps, e.n, r.ns_per_eval, speedup,
        ])
    _write_table(header, rows, args.format, out)


def figure1_points(domain, n):
    """``(x, omega(x) - x)`` on a log-spaced grid over the induced ``x`` range."""
    lo = math.log(domain.re_min) - EXACT_B_OFFSET + domain.re_min * domain.eps_min / EXACT_A_DIVISOR
    hi = math.log(domain.re_max) - EXACT_B_OFFSET + domain.re_max * domain.eps_max / EXACT_A_DIVISOR
    x = np.geomspace(lo, hi, n)
    y = -np.log(wright_omega(x).omega)
    return x, y


def cmd_sweep(args, out, err):
    domain = _domain(args)
    w = csv.writer(out, lineterminator="\n")
    if args.emit == "figure1":
        if args.n < 2:
            raise UsageError("figure1 needs --n >= 2")
        x, y = figure1_points(domain, args.n)
        w.writerow(("x", "y"))
        for xi, yi in zip(x, y):
            w.writerow((fmt(xi), fmt(yi)))
        return
    if args.n_re < 2 or args.n_eps < 2:
        raise UsageError("--n-re and --n-eps must be at least 2")
    re, eps = grid_arrays(domain, args.n_re, args.n_eps)
    f_ref = reference_f(re, eps) if args.with_reference else None
    w.writerow(FIELDS)
    for mid in _methods(args.method):
        # Per-point evaluation keeps rows bit-identical with `compute`.
        for i, (r_, e_) in enumerate(zip(re.tolist(), eps.tolist())):
            res = evaluate(FlowPoint(r_, e_), mid)
            delta = rel_error(float(f_ref[i]), res.f) if f_ref is not None else None
            w.writerow(OutputRecord(mid, r_, e_, res.f, res.inv_sqrt_f, delta, res.in_domain).csv_row())


def cmd_bench(args, out, err):
    if args.threads != 1:
        raise UsageError("--threads is not allowed in timing mode")
    points = DomainSampler(_domain(args), args.seed_index).draw(args.n)
    records = [timing_run(m, points, args.repetitions) for m in _methods(args.method)]
    ref_ns = next((r.ns_per_eval for r in records if r.method == "Reference"), None)
    header = ("method", "equation", "n", "ns_per_eval", "speedup_vs_reference", "checksum")
    rows = [
        [r.method, get_method(r.method).label, r.n, r.ns_per_eval,
         ref_ns / r.ns_per_eval if ref_ns else "", r.checksum]
        for r in records
    ]
    _write_table(header, rows, args.format, out)


# -- parser -----------------------------------------------------------------


def _add_domain(p):
    p.add_argument("--re-min", type=_finite, default=4000.0)
    p.add_argument("--re-max", type=_finite, default=1e8)
    p.add_argument("--eps-min", type=_finite, default=0.0)
    p.add_argument("--eps-max", type=_finite, default=0.05)
    p.add_argument("--re-scale", choices=("log", "linear"), default="log")
    p.add_argument("--seed-index", type=_count, default=1, help="first Sobol index")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="colebrook-omega",
        description="Explicit Wright-omega approximations of the Colebrook equation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    ids = ", ".join(METHODS)

    p = sub.add_parser("compute", help="friction factor at one point")
    p.add_argument("--re", type=_finite, required=True)
    p.add_argument("--eps", type=_finite, required=True)
    p.add_argument("--method", default=DEFAULT_METHOD, help=f"comma list or 'all'; one of: {ids}")
    p.add_argument("--with-reference", action="store_true", help="report delta %% vs the oracle")
    p.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table1", help="error and speed of every method")
    p.add_argument("--n", type=_count, default=DEFAULT_SWEEP_N)
    p.add_argument("--full", action="store_true", help=f"use {FULL_SWEEP_N} points")
    p.add_argument("--method", default="all")
    p.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    p.add_argument("--threads", type=_count, default=1, help="sweep workers (timing stays serial)")
    p.add_argument("--timing-n", type=_count, default=1 << 18)
    p.add_argument("--repetitions", type=_count, default=5)
    _add_domain(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("sweep", help="CSV data for Moody curves or the omega(x) - x curve")
    p.add_argument("--emit", choices=("moody", "figure1"), default="moody")
    p.add_argument("--n-re", type=int, default=50)
    p.add_argument("--n-eps", type=int, default=6)
    p.add_argument("--n", type=_count, default=10**4, help="figure1 point count")
    p.add_argument("--method", default=DEFAULT_METHOD)
    p.add_argument("--with-reference", action="store_true")
    p.add_argument("--threads", type=_count, default=1)
    _add_domain(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time evaluation only")
    p.add_argument("--n", type=_count, default=1 << 18)
    p.add_argument("--method", default="all")
    p.add_argument("--repetitions", type=_count, default=5)
    p.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    p.add_argument("--threads", type=_count, default=1)
    _add_domain(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out, err)
    except UsageError as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2
    except ColebrookError as exc:
        err.write(f"{parser.prog} {args.command}: failure: {exc}\n")
        return 1
    return 0


def run(argv=None):
    """Run the CLI in-process and capture ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
