"""Command-line front end.

    derivgamma eval --z 0.5 --method f32 --compare
    derivgamma poly --z 1 --order 2
    derivgamma table --z 10 --m 1..20
    derivgamma limit-demo --z 2 --h0 0.01 --steps 6
    derivgamma verify --only beta --format json

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .beta_gamma import psi_via_limit
from .config import DEFAULT_BAND, EvalConfig
from .errors import DomainError, MagnitudeOverflowError, UnsupportedOrderError
from .hypergeometric import digamma_via_3f2
from .oracle import MAX_POLYGAMMA_ORDER, reference_digamma, reference_polygamma
from .polygamma import polygamma
from .series import (
    EQ11_MAX_TERMS,
    digamma,
    digamma_eq11_partial,
    growth_guard,
    partial_with_last_term,
    tail_estimate,
)
from .verification import GROUPS, run_checks

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
METHODS = ("series", "eq11", "f32", "limit", "oracle")
FORMATS = ("plain", "csv", "json")
MAX_TERMS_ENV = "DERIVGAMMA_MAX_TERMS"


class UsageError(Exception):
    pass


_COMPLEX = re.compile(
    r"""^\s*(?:
        (?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
        (?:(?P<sign>[+-])(?P<im>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?[ij])?
      | (?P<im_only>[+-]?(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?)[ij]
    )\s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``a+bi``, ``a-bi`` or ``bi`` (``j`` also accepted)."""
    m = _COMPLEX.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")
    if m.group("re") is None:
        im = m.group("im_only")
        return complex(0.0, float(im) if im not in ("", "+", "-") else float(f"{im}1"))
    re_part = float(m.group("re"))
    if m.group("sign") is None:
        return complex(re_part, 0.0)
    im = float(m.group("im") or "1")
    return complex(re_part, -im if m.group("sign") == "-" else im)


def parse_schedule(text: str) -> list[int]:
    """``1..20``, ``1..100:5``, ``10,100,1000``, ``log:10:1e6:6`` and comma mixes."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if part.startswith("log:"):
                _, lo, hi, count = part.split(":")
                lo, hi, count = float(lo), float(hi), int(count)
                if not (1 <= lo <= hi and count >= 1):
                    raise ValueError
                if count == 1:
                    vals = [lo]
                else:
                    r = math.log(hi / lo) / (count - 1)
                    vals = [lo * math.exp(r * i) for i in range(count)]
                out.extend(int(round(v)) for v in vals)
            elif ".." in part:
                rng, _, step = part.partition(":")
                lo, hi = (int(v) for v in rng.split(".."))
                step = int(step) if step else 1
                if step < 1 or hi < lo:
                    raise ValueError
                out.extend(range(lo, hi + 1, step))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad schedule element: {part!r}") from None
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("schedule entries must be >= 1")
    # keep first occurrence order, drop duplicates from log rounding
    return list(dict.fromkeys(out))


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _default_max_terms():
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return EvalConfig().max_terms
    try:
        return _positive_int(raw)
    except argparse.ArgumentTypeError:
        raise UsageError(f"{MAX_TERMS_ENV} must be a positive integer, got {raw!r}") from None


@dataclass
class OutputRecord:
    method: str
    z: complex
    order: int
    value: complex
    terms_used: int
    tail_estimate: float | None
    abs_err_vs_oracle: float | None = None

    def as_json(self, compare: bool) -> dict:
        d = {
            "method": self.method,
            "z": _cjson(self.z),
            "order": self.order,
            "value": _cjson(self.value),
            "terms_used": self.terms_used,
            "tail_estimate": _fjson(self.tail_estimate),
        }
        if compare:
            d["abs_err_vs_oracle"] = _fjson(self.abs_err_vs_oracle)
        return d

    def as_row(self, compare: bool) -> list[str]:
        row = [
            self.method,
            _num(self.z.real),
            _num(self.z.imag),
            str(self.order),
            _num(self.value.real),
            _num(self.value.imag),
            str(self.terms_used),
            _num(self.tail_estimate),
        ]
        if compare:
            row.append(_num(self.abs_err_vs_oracle))
        return row


RECORD_HEADER = ["method", "z_re", "z_im", "order", "value_re", "value_im", "terms_used", "tail_estimate"]


def _num(x) -> str:
    if x is None:
        return ""
    return repr(float(x))


def _fjson(x):
    if x is None or not math.isfinite(x):
        return None
    return float(x)


def _cjson(c: complex) -> dict:
    return {"re": float(c.real), "im": float(c.imag)}


def _config(args) -> EvalConfig:
    try:
        return EvalConfig(
            max_terms=args.max_terms if args.max_terms is not None else _default_max_terms(),
            abs_tol=args.tol,
            tail_correction=not args.no_tail_correction,
            argument_reduction=not args.no_reduction,
            reduction_band=DEFAULT_BAND,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _oracle(z, order):
    return reference_digamma(z) if order == 0 else reference_polygamma(z, order)


def _evaluate(method, z, order, cfg, args) -> OutputRecord:
    if order > 0 and method not in ("series", "oracle"):
        raise UsageError(f"method {method!r} only evaluates digamma; use series or oracle for order {order}")
    if method == "series":
        r = polygamma(z, order, cfg)
        rec = OutputRecord(method, z, order, r.value, r.terms_used, r.tail_estimate)
    elif method == "f32":
        r = digamma_via_3f2(z, cfg)
        rec = OutputRecord(method, z, order, r.value, r.terms_used, r.tail_estimate)
    elif method == "eq11":
        m = args.m[-1] if args.m else EQ11_MAX_TERMS
        value = digamma_eq11_partial(z, m)
        tail = None
        if m >= growth_guard(z):
            _, t_m = partial_with_last_term(z, m)
            tail = tail_estimate(z, t_m, m)
        rec = OutputRecord(method, z, order, value, m, tail)
    elif method == "limit":
        h = args.h0 if args.h0 is not None else 1e-6
        rec = OutputRecord(method, z, order, psi_via_limit(z, h), 0, None)
    else:
        rec = OutputRecord(method, z, order, _oracle(z, order), 0, None)
    if args.compare:
        rec.abs_err_vs_oracle = abs(rec.value - _oracle(z, order))
    return rec


def _emit_records(records, fmt, compare, out):
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r.as_json(compare)) + "\n")
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(RECORD_HEADER + (["abs_err_vs_oracle"] if compare else []))
        for r in records:
            w.writerow(r.as_row(compare))
    else:
        for r in records:
            parts = [
                f"method={r.method}",
                f"z={r.z!r}",
                f"order={r.order}",
                f"value={r.value!r}",
                f"terms_used={r.terms_used}",
                f"tail_estimate={_num(r.tail_estimate) or 'n/a'}",
            ]
            if compare:
                parts.append(f"abs_err_vs_oracle={_num(r.abs_err_vs_oracle)}")
            out.write("  ".join(parts) + "\n")


def cmd_eval(args, out) -> int:
    cfg = _config(args)
    order = args.order
    if not 0 <= order <= MAX_POLYGAMMA_ORDER:
        raise UsageError(f"--order must be in 0..{MAX_POLYGAMMA_ORDER}, got {order}")
    records = [_evaluate(args.method, z, order, cfg, args) for z in args.z]
    _emit_records(records, args.format, args.compare, out)
    return EXIT_OK


def _rows(fmt, header, rows, out):
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(dict(zip(header, (_fjson(v) if isinstance(v, float) else v for v in row)))) + "\n")
        return
    if fmt == "plain":
        out.write("  ".join(header) + "\n")
        for row in rows:
            out.write("  ".join(_cell(v) for v in row) + "\n")
        return
    w = csv.writer(out)
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def cmd_table(args, out) -> int:
    z = args.z[-1]
    schedule = args.m or list(range(1, 21))
    ref = reference_digamma(z)
    guard = growth_guard(z)

    def row(m):
        value, t_m = partial_with_last_term(z, m)
        tail = tail_estimate(z, t_m, m) if m >= guard else None
        return [m, float(value.real), float(value.imag), abs(t_m), tail, abs(value - ref)]

    # rows are independent; map keeps input order
    with ThreadPoolExecutor(max_workers=min(8, os.cpu_count() or 1)) as pool:
        rows = list(pool.map(row, schedule))
    header = ["m", "partial_sum_re", "partial_sum_im", "term_mag", "tail_estimate", "abs_err_vs_oracle"]
    _rows(args.format, header, rows, out)
    return EXIT_OK


def cmd_limit_demo(args, out) -> int:
    z = args.z[-1]
    h0 = args.h0 if args.h0 is not None else 0.01
    ref = reference_digamma(z) if z.real > 0 else None
    rows = []
    for k in range(args.steps):
        h = h0 * 2.0**-k
        v = psi_via_limit(z, h)
        rows.append([h, float(v.real), float(v.imag), abs(v - ref)])
    _rows(args.format, ["h", "psi_re", "psi_im", "abs_err_vs_oracle"], rows, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = run_checks(args.only)
    if args.format == "json":
        for c in report.as_dicts():
            out.write(json.dumps(c) + "\n")
    elif args.format == "csv":
        w = csv.writer(out)
        w.writerow(["name", "residual", "tolerance", "pass"])
        for c in report.checks:
            w.writerow([c.name, repr(c.residual), repr(c.tolerance), "true" if c.passed else "false"])
    else:
        width = max(len(c.name) for c in report.checks)
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            out.write(f"{status}  {c.name:<{width}}  residual={c.residual:.3e}  tol={c.tolerance:.3e}\n")
        failed = sum(not c.passed for c in report.checks)
        out.write(f"{len(report.checks) - failed}/{len(report.checks)} checks passed\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="derivgamma", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, methods=METHODS, fmt_default="plain"):
        p.add_argument("--z", type=parse_complex, action="append", required=True,
                       help="argument, e.g. 0.5, 2+1i; repeat for several")
        p.add_argument("--method", choices=methods, default="series")
        p.add_argument("--m", type=parse_schedule, default=None,
                       help="truncation schedule: 1..20, 1..100:5, 10,100,1000, log:10:1e6:6")
        p.add_argument("--h0", type=float, default=None)
        p.add_argument("--tol", type=float, default=EvalConfig().abs_tol)
        p.add_argument("--max-terms", type=_positive_int, default=None,
                       help=f"term cap (default {EvalConfig().max_terms}, or ${MAX_TERMS_ENV})")
        p.add_argument("--no-tail-correction", action="store_true")
        p.add_argument("--no-reduction", action="store_true")
        p.add_argument("--compare", action="store_true", help="report |value - oracle|")
        p.add_argument("--format", choices=FORMATS, default=fmt_default)

    p = sub.add_parser("eval", help="evaluate digamma (or polygamma with --order)")
    common(p)
    p.add_argument("--order", type=int, default=0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("poly", help="evaluate polygamma of order >= 1")
    common(p, methods=("series", "oracle"))
    p.add_argument("--order", type=int, default=1)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="partial sums psi_m(z) over a schedule of m")
    common(p, fmt_default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("limit-demo", help="finite-h derivative quotient for h = h0 2^-k")
    common(p, fmt_default="csv")
    p.add_argument("--steps", type=_positive_int, default=6)
    p.set_defaults(func=cmd_limit_demo)

    p = sub.add_parser("verify", help="run the cross-route invariant checks")
    p.add_argument("--only", choices=sorted(GROUPS), default=None)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_verify)
    return parser


def cmd_poly(args, out) -> int:
    if args.order < 1:
        raise UsageError(f"poly needs --order >= 1, got {args.order}")
    return cmd_eval(args, out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, UnsupportedOrderError) as exc:
        print(f"derivgamma: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, MagnitudeOverflowError) as exc:
        print(f"derivgamma: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
