"""Command-line interface: ``motivic-hilb <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error,
3 an enumeration would exceed its resource ceiling.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .classes import BettiVector, realize_euler, realize_weight
from .config import VerifyConfig
from .dtgen import (
    PolynomialityError,
    macmahon_guess,
    refined_macmahon,
    unified_formula,
    unified_formula_extended,
    weight_partition_function,
    z_c3_product,
    z_c3_recursion,
    z_x_exp,
)
from .expr import ExprError, parse_class
from .partitions import ResourceCeilingError, _default_threads, count_table, refined_sum
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CEILING = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- output -------------------------------------------------------------------------


def _coeff_text(c):
    return c.text() if hasattr(c, "text") else str(c)


def _coeff_json(c):
    return c.to_json() if hasattr(c, "to_json") else (c if isinstance(c, int) else str(c))


def _series_rows(series, kind):
    """CSV rows ``(n, exponent, coefficient)`` from a coefficient list."""
    rows = []
    for n, c in enumerate(series):
        if kind == "int":
            rows.append((n, c))
            continue
        for e, v in c.items():
            rows.append((n, e, str(v)))
    return rows


class Output:
    """Collects one result in the three formats and writes the requested one."""

    def __init__(self, payload, header, rows, lines):
        self.payload = payload
        self.header = header
        self.rows = rows
        self.lines = lines

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.payload, indent=2, sort_keys=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue()
        return "\n".join(self.lines) + "\n"


def _series_output(command, series, kind, extra=None, header=None):
    coeffs = list(series.coeffs) if hasattr(series, "coeffs") else list(series)
    payload = {"command": command}
    payload.update(extra or {})
    payload["series"] = {
        "variable": "t",
        "order": len(coeffs) - 1,
        "coeffs": [_coeff_json(c) for c in coeffs],
    }
    payload["coeffs_text"] = [_coeff_text(c) for c in coeffs]
    if header is None:
        header = ("n", "count") if kind == "int" else ("n", "half_exponent", "coefficient")
    lines = [f"t^{n}: {_coeff_text(c)}" for n, c in enumerate(coeffs)]
    return Output(payload, header, _series_rows(coeffs, kind), lines)


# --- commands -----------------------------------------------------------------------


def cmd_zc3(args):
    N = args.order
    routes = {"product": [z_c3_product], "recursion": [z_c3_recursion], "both": [z_c3_product, z_c3_recursion]}
    results = [f(N) for f in routes[args.route]]
    extra = {"order": N, "route": args.route}
    ok = True
    if args.route == "both":
        ok = results[0] == results[1]
        extra["routes_agree"] = ok
    out = _series_output("zc3", results[0], "mot", extra)
    if args.route == "both":
        out.lines.append(f"routes_agree: {str(ok).lower()}")
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_zx(args):
    N = args.order
    if args.betti is not None:
        if args.realize == "motivic":
            raise UsageError("--betti input only has a weight (or Euler) realization")
        b = BettiVector.parse(args.betti)
        series = weight_partition_function(b, N)
        source = {"betti": list(b.b)}
        if args.realize == "euler":
            series = realize_euler(series)
    else:
        x = parse_class(args.cls)
        series = z_x_exp(x, N)
        source = {"class": x.text()}
        if args.realize == "weight":
            series = realize_weight(series)
        elif args.realize == "euler":
            series = realize_euler(series)
    kind = "int" if args.realize == "euler" else "mot"
    header = ("n", "value") if kind == "int" else None
    extra = {"order": N, "realize": args.realize, **source}
    return _series_output("zx", series, kind, extra, header), EXIT_OK


def cmd_unified(args):
    x = parse_class(args.cls)
    d, N = args.dim, args.order
    if d < 0:
        raise UsageError("--dim must be >= 0")
    try:
        series = unified_formula(d, x, N) if d <= 3 else unified_formula_extended(d, x, N)
    except ValueError as err:
        raise UsageError(str(err)) from err
    extra = {"dim": d, "class": x.text(), "order": N}
    return _series_output("unified", series, "mot", extra), EXIT_OK


def _delta(text):
    try:
        delta = Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError(f"bad delta {text!r}") from err
    if (2 * delta).denominator != 1:
        raise UsageError(f"delta = {text} is not a half-integer")
    return delta


def cmd_macmahon(args):
    delta = _delta(args.delta)
    N = args.order
    product = refined_macmahon(delta, N)
    extra = {"delta": str(delta), "order": N}
    code = EXIT_OK
    if args.oracle:
        enum = refined_sum(N, delta, threads=args.threads)
        agree = product == enum
        extra["oracle"] = {
            "enumeration_coeffs_text": [c.text() for c in enum.coeffs],
            "agree": agree,
        }
        code = EXIT_OK if agree else EXIT_FAIL
    out = _series_output("macmahon", product, "mot", extra)
    if args.oracle:
        out.lines = [
            f"t^{n}: product {p.text()} | enumeration {e.text()}" for n, (p, e) in enumerate(zip(product.coeffs, enum.coeffs))
        ]
        out.lines.append(f"agree: {str(extra['oracle']['agree']).lower()}")
    return out, code


def cmd_guess(args):
    d, N = args.dim, args.order
    try:
        guess = macmahon_guess(d, N)
    except ValueError as err:
        raise UsageError(str(err)) from err
    payload = {"command": "guess", "dim": d, "order": N, "guess": list(guess.coeffs)}
    header = ("n", "guess")
    rows = [(n, g) for n, g in enumerate(guess.coeffs)]
    lines = [f"t^{n}: guess {g}" for n, g in enumerate(guess.coeffs)]
    if args.compare:
        counts = count_table(d, N, threads=args.threads)
        mismatch = next((n for n in range(N + 1) if guess[n] != counts[n]), None)
        payload["enumeration"] = counts
        payload["first_mismatch_degree"] = mismatch
        if mismatch is not None:
            payload["guess_value"] = guess[mismatch]
            payload["enumeration_value"] = counts[mismatch]
        header = ("n", "guess", "enumeration")
        rows = [(n, g, c) for n, (g, c) in enumerate(zip(guess.coeffs, counts))]
        lines = [f"t^{n}: guess {g} | enumeration {c}" for n, (g, c) in enumerate(zip(guess.coeffs, counts))]
        lines.append("first mismatch: " + ("none" if mismatch is None else f"n = {mismatch}"))
    return Output(payload, header, rows, lines), EXIT_OK


def cmd_partitions(args):
    if args.which == "count":
        counts = count_table(args.dim, args.n, threads=args.threads)
        payload = {"command": "partitions count", "dim": args.dim, "n": args.n, "counts": counts}
        rows = list(enumerate(counts))
        lines = [f"n = {n}: {c}" for n, c in rows]
        return Output(payload, ("n", "count"), rows, lines), EXIT_OK
    delta = _delta(args.delta)
    series = refined_sum(args.n, delta, threads=args.threads)
    extra = {"n": args.n, "delta": str(delta)}
    out = _series_output("partitions refined", series, "mot", extra, ("n", "q_half_exponent", "coefficient"))
    return out, EXIT_OK


def cmd_verify(args):
    cfg = VerifyConfig(order=args.order, threads=args.threads, seed=args.seed)
    reports = run_suite(args.suite, cfg)
    ok = all(r.passed for r in reports)
    payload = {
        "command": "verify",
        "suite": args.suite,
        "status": "pass" if ok else "fail",
        "reports": [r.to_json(timing=not args.no_timing) for r in reports],
    }
    rows, lines = [], []
    for r in reports:
        for name, rep in r.identities:
            fd = rep.first_failure_degree
            rows.append((r.suite, name, rep.order, rep.status, "" if fd is None else fd))
            line = f"[{rep.status.upper()}] {r.suite}/{name}: {rep.identity}"
            if not rep.passed:
                line += f" (first failure at t^{fd}: {rep.lhs_sample} != {rep.rhs_sample})"
            lines.append(line)
    lines.append(f"overall: {'pass' if ok else 'fail'}")
    return Output(payload, ("suite", "name", "order", "status", "first_failure_degree"), rows, lines), (
        EXIT_OK if ok else EXIT_FAIL
    )


# --- parser -------------------------------------------------------------------------


def _nonneg(text):
    try:
        v = int(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from err
    if v < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return v


def _positive(text):
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--threads", type=_positive, default=None, help="worker processes for enumeration")

    parser = _Parser(prog="motivic-hilb", description="Exact motivic generating functions of Hilbert schemes of points.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zc3", parents=[common], help="virtual motives of Hilb^n(C^3)")
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--route", choices=("product", "recursion", "both"), default="product")
    p.set_defaults(func=cmd_zc3)

    p = sub.add_parser("zx", parents=[common], help="partition function of a threefold")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--class", dest="cls", help="class expression, e.g. '1 + L + L^2 + L^3'")
    src.add_argument("--betti", help="Betti numbers b0,...,b6")
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--realize", choices=("motivic", "weight", "euler"), default=None)
    p.set_defaults(func=cmd_zx)

    p = sub.add_parser("unified", parents=[common], help="unified formula in dimension d")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--order", type=_nonneg, required=True)
    p.set_defaults(func=cmd_unified)

    p = sub.add_parser("macmahon", parents=[common], help="refined MacMahon function")
    p.add_argument("--delta", required=True, help="half-integer, e.g. 0, 1/2, -3/2")
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--oracle", action="store_true", help="compare with plane-partition enumeration")
    p.set_defaults(func=cmd_macmahon)

    p = sub.add_parser("guess", parents=[common], help="MacMahon's guess for d-dimensional partitions")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--order", type=_nonneg, required=True)
    p.add_argument("--compare", action="store_true", help="compare with enumeration")
    p.set_defaults(func=cmd_guess)

    p = sub.add_parser("partitions", help="brute-force partition enumeration")
    psub = p.add_subparsers(dest="which", required=True, parser_class=_Parser)
    q = psub.add_parser("count", parents=[common])
    q.add_argument("--dim", type=_positive, required=True)
    q.add_argument("--n", type=_nonneg, required=True)
    q.set_defaults(func=cmd_partitions)
    q = psub.add_parser("refined", parents=[common])
    q.add_argument("--n", type=_nonneg, required=True)
    q.add_argument("--delta", required=True)
    q.set_defaults(func=cmd_partitions)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--order", type=_nonneg, default=8)
    p.add_argument("--seed", type=int, default=VerifyConfig.seed)
    p.add_argument("--no-timing", action="store_true", help="omit wall-time fields (byte-stable output)")
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_negative_values(argv):
    # argparse reads "-1/2" as an option; "--delta -1/2" becomes "--delta=-1/2"
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in ("--delta", "--class") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        if args.threads is None:
            args.threads = _default_threads()
        if getattr(args, "command", None) == "zx" and args.realize is None:
            args.realize = "weight" if args.betti is not None else "motivic"
        out, code = args.func(args)
    except (UsageError, ExprError) as err:
        print(f"usage error: {err}", file=stderr)
        return EXIT_USAGE
    except ResourceCeilingError as err:
        print(f"resource ceiling: {err}", file=stderr)
        return EXIT_CEILING
    except PolynomialityError as err:
        print(f"verification failed: {err}", file=stderr)
        return EXIT_FAIL
    except ValueError as err:
        print(f"usage error: {err}", file=stderr)
        return EXIT_USAGE
    stdout.write(out.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
