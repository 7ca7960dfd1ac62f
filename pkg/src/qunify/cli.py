"""Command-line interface.

Exit codes: 0 success, 1 I/O error, 2 bad input or family error,
3 an exact identity was violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import isqrt

from . import checks
from .alphafam import (BUILTIN_NAMES, builtin_family, dump_family, load_family,
                       solve_alpha_system)
from .errors import QUnifyError, UnknownFamily
from .exactnum import ONE, parse_qrat
from .formats import render_polys, render_tables, reports_to_json, reports_to_text
from .qnumbers import KINDS, numbers, qnumber_poly
from .series import DEFAULT_ORDER, radius_estimate

EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2, 3
DEFAULT_N, DEFAULT_RADIUS_N = 8, 200


class CLIError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def parse_odd_values(text: str) -> dict:
    """'1=1,3=(1+q)(1+q^2)/4' -> {1: QRat, 3: QRat}."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise CLIError(f"odd value {item!r} is not of the form n=expr")
        try:
            out[int(key)] = parse_qrat(value)
        except ValueError as exc:
            raise CLIError(f"bad odd value {item!r}: {exc}") from None
    return out


def _even_at_least(n: int) -> int:
    return n + (n % 2)


def resolve_family(spec: str, horizon: int = 0):
    """A builtin name, ``solve:ones``, ``solve:<odd values>`` or a family file path."""
    if spec in BUILTIN_NAMES:
        return builtin_family(spec)
    if spec.startswith("solve:"):
        body = spec[len("solve:"):]
        if body == "ones":
            n = _even_at_least(max(horizon, 2))
            return solve_alpha_system({k: ONE for k in range(1, n, 2)}, n, name="solve:ones")
        odd = parse_odd_values(body)
        n = _even_at_least(max(odd, default=0) + 1)
        return solve_alpha_system(odd, n, name=spec)
    if os.path.exists(spec):
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CLIError(f"cannot read family file: {exc}", EXIT_IO) from None
        return load_family(text)
    raise UnknownFamily(
        f"unknown family {spec!r}: use one of {', '.join(BUILTIN_NAMES)}, "
        "solve:ones, solve:<n=expr,...> or a family file")


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CLIError(f"cannot write {out}: {exc}", EXIT_IO) from None
    else:
        sys.stdout.write(text)


def _kinds(text: str) -> list:
    kinds = list(KINDS) if text == "all" else [k.strip() for k in text.split(",")]
    for k in kinds:
        if k not in KINDS:
            raise CLIError(f"unknown kind {k!r}; expected {', '.join(KINDS)} or all")
    return kinds


def _check_order(args) -> None:
    if args.order is not None and args.order < args.n:
        print(f"notice: series order raised from {args.order} to {args.n}", file=sys.stderr)
        args.order = args.n


def cmd_numbers(args) -> int:
    _check_order(args)
    fam = resolve_family(args.family, args.n + 1)
    tables = [numbers(k, fam, args.n) for k in _kinds(args.kind)]
    _emit(render_tables(tables, args.format), args.out)
    return EXIT_OK


def cmd_polys(args) -> int:
    _check_order(args)
    fam = resolve_family(args.family, args.n + 1)
    out = []
    for kind in _kinds(args.kind):
        polys = [qnumber_poly(kind, fam, n, bivariate=args.bivariate) for n in range(args.n + 1)]
        out.append(render_polys(kind, fam.name, polys, args.bivariate, args.format))
    _emit("".join(out), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = list(checks.SUITES) if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    for s in suites:
        if s not in checks.SUITES:
            raise CLIError(f"unknown suite {s!r}; expected {', '.join(checks.SUITES)} or all")
    order = args.order if args.order is not None else 10
    horizon = max(checks.alpha_horizon(s, args.n, order) for s in suites)
    fam = resolve_family(args.family, horizon)
    reports = [checks.run_suite(s, fam, args.n, order) for s in suites]
    if args.format == "json":
        _emit(reports_to_json(reports, fam.name), args.out)
    else:
        _emit(reports_to_text(reports, args.verbose), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION


def cmd_solve_alpha(args) -> int:
    if args.n < 0 or args.n % 2:
        raise CLIError("--n must be a nonnegative even integer")
    if args.ones:
        odd = {k: ONE for k in range(1, args.n, 2)}
        name = args.name or "solve:ones"
    else:
        odd = parse_odd_values(args.odd)
        name = args.name or "solved"
    fam = solve_alpha_system(odd, args.n, name=name)
    doc = dump_family(fam)
    if args.out:
        _emit(doc, args.out)
        for n in range(min(args.n, 6) + 1):
            print(f"alpha_{n} = {fam(n)}")
    else:
        _emit(doc, None)
    return EXIT_OK


def _rational_sqrt(x: Fraction):
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


def cmd_radius(args) -> int:
    try:
        q0 = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise CLIError(f"--q must be a rational number, got {args.q!r}") from None
    if not 0 < q0 < 1:
        raise CLIError("--q must lie strictly between 0 and 1")
    v0 = _rational_sqrt(q0)
    if v0 is None:
        raise CLIError(f"q0 = {q0} has no rational square root; choose a square such as 1/4")
    fam = resolve_family(args.family, args.n + 1)
    est = radius_estimate(fam, v0, args.n)
    if args.format == "json":
        doc = {"schema": 1, "family": fam.name, "q": str(q0), "n_max": args.n,
               "verdict": est.verdict, "value": str(est)}
        if est.value is not None:
            doc["float"] = float(est.value)
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        line = f"radius[{fam.name}, q={q0}, n={args.n}]: {est}"
        if est.value is not None:
            line += f"  ({float(est.value):.12g})"
        _emit(line + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="improved",
                        help="builtin name, solve:ones, solve:<n=expr,...> or family file")
    # parent actions are shared between subparsers, so per-command defaults are set in main
    common.add_argument("--n", type=int, default=None,
                        help=f"largest index (default {DEFAULT_N}; {DEFAULT_RADIUS_N} for radius)")
    common.add_argument("--order", type=int, default=None,
                        help=f"series truncation order (default {DEFAULT_ORDER} or as needed)")
    common.add_argument("--out", default=None, help="output file (default: stdout)")

    p = argparse.ArgumentParser(prog="qunify", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("numbers", parents=[common], help="q-Bernoulli/Euler/Genocchi numbers")
    s.add_argument("--kind", default="bernoulli", help="bernoulli, euler, genocchi, a list or all")
    s.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    s.set_defaults(func=cmd_numbers)

    s = sub.add_parser("polys", parents=[common], help="q-polynomials in x (or x, y)")
    s.add_argument("--kind", default="bernoulli")
    s.add_argument("--bivariate", action="store_true")
    s.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    s.set_defaults(func=cmd_polys)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", default="all", help=f"comma list of {', '.join(checks.SUITES)} or all")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--verbose", action="store_true", help="show passing checks too")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve-alpha", parents=[common], help="solve for the even alpha entries")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--ones", action="store_true", help="all odd entries equal to 1")
    g.add_argument("--odd", help="odd entries, e.g. 1=1,3=(1+q)(1+q^2)/4")
    s.add_argument("--name", default=None)
    s.set_defaults(func=cmd_solve_alpha)

    s = sub.add_parser("radius", parents=[common], help="ratio-test radius of convergence")
    s.add_argument("--q", required=True, help="rational probe point 0 < q < 1")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_radius)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.n is None:
        args.n = DEFAULT_RADIUS_N if args.command == "radius" else DEFAULT_N
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (QUnifyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
