"""Command-line front end: ``compute``, ``verify`` and ``table``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from . import families as fam
from .errors import ParseError, PoleAtEvaluation, UmbraError
from .identities import IDS, exit_code, make_spec, render_reports, verify_many
from .parsing import parse_rational
from .poly import Poly, falling_factorial
from .scalar import LambdaRat

COMPUTE_FAMILIES = (
    "frobenius-euler", "bernoulli", "stirling1", "stirling2", "abel", "changhee2",
    "t-poly", "s-poly", "fe-number", "bernoulli-number", "falling-factorial",
)
TABLE_FAMILIES = ("stirling1", "stirling2", "fe-numbers")


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbra",
        description="Exact umbral calculus over Q(lambda): families, tables and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one member of a polynomial family or sequence")
    p.add_argument("--family", required=True, choices=COMPUTE_FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--order", type=int, default=1, help="order alpha for Frobenius-Euler/Bernoulli")
    p.add_argument("--b", type=_rational, help="Abel parameter, e.g. 1/2")
    p.add_argument("--mu", type=int)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--eval-lambda", type=_rational, dest="eval_lambda")
    p.add_argument("--out")

    v = sub.add_parser("verify", help="check identities over parameter grids")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", action="append", dest="ids", metavar="ID")
    which.add_argument("--all", action="store_true")
    v.add_argument("--n-max", type=int, dest="n_max")
    v.add_argument("--a-max", type=int, dest="a_max")
    v.add_argument("--b", type=_rational, action="append")
    v.add_argument("--mu", type=int, action="append")
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include per-instance timings")
    v.add_argument("--out")

    t = sub.add_parser("table", help="print a Stirling triangle or Frobenius-Euler numbers")
    t.add_argument("--family", required=True, choices=TABLE_FAMILIES)
    t.add_argument("--rows", type=int, required=True)
    t.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
    t.add_argument("--eval-lambda", type=_rational, dest="eval_lambda")
    t.add_argument("--out")
    return parser


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--family {args.family} needs --{name.replace('_', '-')}")


def _compute_value(args):
    """The requested object: a Poly or a LambdaRat."""
    f = args.family
    _need(args, "n")
    n = args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    if f == "frobenius-euler":
        return fam.frobenius_euler(n, args.order)
    if f == "bernoulli":
        return fam.bernoulli_higher(n, args.order)
    if f == "bernoulli-number":
        return fam.bernoulli_number(n, args.order)
    if f == "stirling1":
        _need(args, "l")
        return LambdaRat.coerce(fam.stirling1(n, args.l))
    if f == "stirling2":
        _need(args, "l")
        return LambdaRat.coerce(fam.stirling2(args.l, n))
    if f == "abel":
        _need(args, "b")
        return fam.abel(n, args.b)
    if f == "changhee2":
        return fam.changhee2(n)
    if f == "t-poly":
        return fam.t_poly(n)
    if f == "s-poly":
        _need(args, "mu")
        return fam.s_poly(n, args.mu)
    if f == "fe-number":
        return fam.frobenius_euler_number(n)
    if f == "falling-factorial":
        return falling_factorial(n)
    raise UsageError(f"unknown family {f}")


def _specialize(value, lam):
    if lam is None:
        return value
    if isinstance(value, Poly):
        return Poly(value.specialize(lam))
    return LambdaRat.coerce(value.evaluate(lam))


def _params(args) -> dict:
    out = {}
    for key in ("n", "l", "order", "b", "mu"):
        value = getattr(args, key, None)
        if value is None:
            continue
        if key == "order" and args.family not in ("frobenius-euler", "bernoulli", "bernoulli-number"):
            continue
        out[key] = str(value) if isinstance(value, Fraction) else value
    if args.eval_lambda is not None:
        out["lambda"] = str(args.eval_lambda)
    return out


def cmd_compute(args) -> str:
    value = _specialize(_compute_value(args), args.eval_lambda)
    if args.format == "latex":
        return value.latex() + "\n"
    if args.format == "json":
        doc = {"family": args.family, "params": _params(args), "value": value.render()}
        if isinstance(value, Poly):
            doc["coeffs"] = [c.render() for c in value.coeffs]
        return json.dumps(doc, indent=2) + "\n"
    return value.render() + "\n"


def cmd_table(args) -> str:
    if args.rows < 1:
        raise UsageError("--rows must be at least 1")
    rows = args.rows
    if args.family == "fe-numbers":
        values = [_specialize(fam.frobenius_euler_number(n), args.eval_lambda) for n in range(rows + 1)]
        if args.format == "json":
            return json.dumps({"family": "fe-numbers", "values": [v.render() for v in values]}, indent=2) + "\n"
        if args.format == "csv":
            return "".join(f"{n},{v.render()}\n" for n, v in enumerate(values))
        if args.format == "latex":
            return ", ".join(v.latex() for v in values) + "\n"
        return ", ".join(v.render() for v in values) + "\n"

    if args.family == "stirling1":
        triangle = [[fam.stirling1(n, k) for k in range(n + 1)] for n in range(rows + 1)]
    else:
        triangle = [[fam.stirling2(n, k) for k in range(n + 1)] for n in range(rows + 1)]
    if args.format == "json":
        return json.dumps({"family": args.family, "rows": triangle}) + "\n"
    if args.format == "csv":
        return "".join(",".join(str(v) for v in [n] + row) + "\n" for n, row in enumerate(triangle))
    if args.format == "latex":
        cols = "r" * (rows + 2)
        body = [r"\begin{tabular}{" + cols + "}", "n & " + " & ".join(f"k={k}" for k in range(rows + 1)) + r" \\"]
        for n, row in enumerate(triangle):
            cells = [str(v) for v in row] + [""] * (rows - n)
            body.append(f"{n} & " + " & ".join(cells) + r" \\")
        body.append(r"\end{tabular}")
        return "\n".join(body) + "\n"
    return "".join(", ".join(str(v) for v in row) + "\n" for row in triangle)


def cmd_verify(args):
    ids = list(IDS) if args.all else args.ids
    unknown = [i for i in ids if i not in IDS]
    if unknown:
        raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    specs = [make_spec(i, n_max=args.n_max, a_max=args.a_max, b=args.b, mu=args.mu) for i in ids]
    reports = verify_many(specs, jobs=args.jobs)
    return render_reports(reports, args.format, timing=args.timing), exit_code(reports)


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            text, code = cmd_compute(args), 0
        elif args.command == "table":
            text, code = cmd_table(args), 0
        else:
            text, code = cmd_verify(args)
    except (UsageError, UmbraError, ValueError) as exc:
        kind = "pole" if isinstance(exc, PoleAtEvaluation) else "error"
        print(f"umbra: {kind}: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
