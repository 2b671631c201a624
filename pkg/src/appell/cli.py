"""Command line front end: tables, symmetry checks, formula validation, Fourier data.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 ``validate`` found
mismatches.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classical, fourier, higher, oracle, symmetry
from .exact import DomainError, Polynomial, TruncatedSeries, format_rational, parse_rational, poly_eval

FORMATS = ("text", "json", "csv", "tsv")
FORMAT_ENV = "APPELL_FORMAT"

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str) -> list:
    return [_rational(t) for t in text.split(",") if t.strip()]


SERIES_HELP = (
    "series spec: 'bernoulli-R' or 'euler-R' for (t/(e^t-1))^R or (2/(e^t+1))^R, "
    "suffix '-scaled' for the t/R argument (e.g. bernoulli-2-scaled), or an inline "
    "comma list of exponential coefficients a_0,a_1,... (f = sum a_k t^k/k!, zero beyond)"
)


def parse_series_spec(spec: str, N: int) -> TruncatedSeries:
    parts = spec.strip().lower().split("-")
    if parts[0] in ("bernoulli", "euler") and len(parts) in (2, 3):
        if len(parts) == 3 and parts[2] != "scaled":
            raise UsageError(f"bad series spec {spec!r}")
        try:
            r = int(parts[1])
        except ValueError:
            raise UsageError(f"bad series order in {spec!r}") from None
        return oracle.higher_f_series(parts[0], r, len(parts) == 3, N)
    try:
        coeffs = [parse_rational(t) for t in spec.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad series spec {spec!r}: {exc}") from None
    if not coeffs:
        raise UsageError("empty series spec")
    return TruncatedSeries.from_exponential(coeffs[: N + 1], N)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="appell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in FORMATS:
        default_fmt = "text"

    def add(name, help_text, epilog=None):
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=epilog)
        p.add_argument("--format", choices=FORMATS, default=default_fmt,
                       help=f"output format (default from ${FORMAT_ENV}, else text)")
        return p

    p = add("numbers", "tables of Bernoulli numbers, E_k(0), order-r numbers or Stirling numbers")
    p.add_argument("--kind", required=True,
                   choices=["bernoulli", "euler0", "higher-bernoulli", "higher-euler", "stirling"])
    p.add_argument("--order", type=int, default=1, help="order r for the higher-* kinds")
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = add("poly", "coefficients of B_n, E_n, B_n^(r) or E_n^(r), optionally evaluated at a rational")
    p.add_argument("--kind", required=True, choices=["bernoulli", "euler", "higher-bernoulli", "higher-euler"])
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--at", type=_rational, help="evaluation point p/q")

    p = add("symmetry", "symmetry report for f(t) e^{xt} at parameter a", epilog=SERIES_HELP)
    p.add_argument("--f", required=True, help="series spec")
    p.add_argument("--g", help="type g as inline exponential coefficients (default t)")
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = add("basis", "basis K_{n-2k}(x/a), 0 <= k <= n/2, of V_n(a); a must be nonzero")
    p.add_argument("--kind", required=True, choices=oracle.KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_rational, required=True)

    p = add("member", "coordinates of a polynomial in the V_n(a) basis; a must be nonzero")
    p.add_argument("--coeffs", type=_rational_list, required=True, help="c0,c1,... ascending powers")
    p.add_argument("--kind", choices=oracle.KINDS, default=oracle.BERNOULLI)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_rational, required=True)

    p = add("decompose", "split f into sum a_k t^k/k! plus an odd or even remainder and rebuild P_n",
            epilog=SERIES_HELP)
    p.add_argument("--f", required=True)
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--parity", required=True, choices=[symmetry.ODD, symmetry.EVEN])
    p.add_argument("--n", type=int, required=True)

    p = add("validate", "compare a printed closed form with the generating-function oracle (exit 3 on mismatch)",
            epilog="formulas: bernoulli " + ", ".join(higher.formula_ids("bernoulli"))
            + "; euler " + ", ".join(higher.formula_ids("euler")) + "; or 'all'")
    p.add_argument("--kind", required=True, choices=oracle.KINDS)
    p.add_argument("--formula", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = add("fourier", "Fourier partial sums with exact reference values",
            epilog=(
                "x-domains: bernoulli 0<x<1 (n=1), 0<=x<=1 (n>=2); euler 0<x<1 (n=0), 0<=x<=1 (n>=1); "
                "euler-order 0<x<r; appell odd 0<x/a<1 (n=0), 0<=x/a<=1 (n>=1), "
                "appell even 0<x/a<1 (n=1), 0<=x/a<=1 (n>=2). --grid K emits K+1 points as rows "
                "'x partial_sum exact abs_error'. " + SERIES_HELP
            ))
    p.add_argument("--target", required=True, choices=["bernoulli", "euler", "euler-order", "appell"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=1)
    p.add_argument("--x", type=_rational)
    p.add_argument("--terms", type=int, required=True, help="truncation M")
    p.add_argument("--variant", choices=fourier.VARIANTS, default=fourier.DERIVED)
    p.add_argument("--grid", type=int)
    p.add_argument("--f", help="series spec (appell target)")
    p.add_argument("--a", type=_rational, help="parameter a (appell target)")
    p.add_argument("--parity", choices=[symmetry.ODD, symmetry.EVEN], help="appell target")
    return parser


# output helpers


def _dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rows(rows, fmt) -> str:
    sep = {"csv": ", ", "tsv": "\t", "text": " "}[fmt]
    return "\n".join(sep.join(str(v) for v in row) for row in rows)


def _emit(fmt, json_obj, rows, text=None) -> str:
    if fmt == "json":
        return _dump_json(json_obj)
    if fmt == "text" and text is not None:
        return text
    return _rows(rows, fmt)


def _cmd_numbers(args) -> tuple:
    kind, N, r = args.kind, args.max_n, args.order
    if N < 0:
        raise UsageError("--max must be non-negative")
    if kind == "stirling":
        table = classical.stirling_table(N)
        rows = [[n, *table.values[n]] for n in range(N + 1)]
        obj = [{"n": n, "values": list(table.values[n])} for n in range(N + 1)]
        return _emit(args.format, obj, rows), EXIT_OK
    fn = {
        "bernoulli": classical.bernoulli_number,
        "euler0": classical.euler_at_zero,
        "higher-bernoulli": lambda n: higher.bernoulli_higher_number(n, r),
        "higher-euler": lambda n: higher.euler_higher_number(n, r),
    }[kind]
    vals = [format_rational(fn(n)) for n in range(N + 1)]
    rows = [[n, v] for n, v in enumerate(vals)]
    obj = [{"n": n, "value": v} for n, v in enumerate(vals)]
    return _emit(args.format, obj, rows), EXIT_OK


def _poly_of(kind: str, n: int, r: int) -> Polynomial:
    if n < 0:
        raise UsageError("--n must be non-negative")
    if kind == "bernoulli":
        return classical.bernoulli_polynomial(n)
    if kind == "euler":
        return classical.euler_polynomial(n)
    base = "bernoulli" if kind == "higher-bernoulli" else "euler"
    return oracle.higher_oracle_polys(base, r, n)[n]


def _poly_output(fmt, label, p: Polynomial, extra=None) -> str:
    coeffs = [format_rational(c) for c in p.coeffs]
    obj = {"coeffs": coeffs}
    if extra:
        obj.update(extra)
    rows = [[label, *coeffs]]
    text = str(p)
    if extra and "value" in extra:
        rows[0].append(extra["value"])
        text += f"\nvalue at {extra['at']}: {extra['value']}"
    return _emit(fmt, obj, rows, text)


def _cmd_poly(args):
    p = _poly_of(args.kind, args.n, args.order)
    extra = None
    if args.at is not None:
        extra = {"at": format_rational(args.at), "value": format_rational(poly_eval(p, args.at))}
    return _poly_output(args.format, args.n, p, extra), EXIT_OK


def _report_rows(obj: dict) -> list:
    rows = []
    for key, val in obj.items():
        if isinstance(val, dict):
            val = _dump_json(val)
        elif isinstance(val, list):
            val = _dump_json(val)
        elif val is None:
            val = ""
        elif isinstance(val, bool):
            val = str(val).lower()
        rows.append([key, val])
    return rows


def _cmd_symmetry(args):
    f = parse_series_spec(args.f, args.max_n)
    g = TruncatedSeries.variable(args.max_n) if args.g is None else parse_series_spec(args.g, args.max_n)
    rep = symmetry.characterize(f, g, args.a)
    obj = rep.to_json()
    return _emit(args.format, obj, _report_rows(obj)), EXIT_OK


def _cmd_basis(args):
    basis = symmetry.vn_basis(args.kind, args.n, args.a)
    obj = [{"coeffs": [format_rational(c) for c in b.coeffs]} for b in basis]
    rows = [[args.n - 2 * k, *[format_rational(c) for c in b.coeffs]] for k, b in enumerate(basis)]
    text = "\n".join(f"{args.kind[0].upper()}_{args.n - 2 * k}(x/{format_rational(args.a)}) = {b}"
                     for k, b in enumerate(basis))
    return _emit(args.format, obj, rows, text), EXIT_OK


def _cmd_member(args):
    p = Polynomial(args.coeffs)
    coords = symmetry.vn_membership(p, args.n, args.a, args.kind)
    vals = None if coords is None else [format_rational(c) for c in coords]
    obj = {"member": coords is not None, "coordinates": vals}
    rows = [["member", str(coords is not None).lower()]]
    if vals is not None:
        rows.append(["coordinates", *vals])
    return _emit(args.format, obj, rows), EXIT_OK


def _cmd_decompose(args):
    N = args.n + 1
    f = parse_series_spec(args.f, N)
    d = symmetry.decompose(f, args.a, args.parity)
    if args.parity == symmetry.ODD:
        p = symmetry.reconstruct_euler_form(d, args.n)
    else:
        p = symmetry.reconstruct_bernoulli_form(d, args.n)
    obj = d.to_json()
    obj["n"] = args.n
    obj["P_n"] = [format_rational(c) for c in p.coeffs]
    rows = [["a_coeffs", *obj["a_coeffs"]], ["F", *obj["F"]], ["P_n", *obj["P_n"]]]
    text = (
        f"a_k: {', '.join(obj['a_coeffs'])}\n"
        f"F (t^k coefficients): {', '.join(obj['F'])}\n"
        f"P_{args.n}(x) = {p}"
    )
    return _emit(args.format, obj, rows, text), EXIT_OK


def _cmd_validate(args):
    if args.formula == "all":
        reports = higher.validate_formulas(args.kind, args.order, args.max_n)
    else:
        reports = [higher.validate_formula(args.kind, args.formula, args.order, args.max_n)]
    bad = any(not r.all_match for r in reports)
    objs = [r.to_json() for r in reports]
    json_obj = objs[0] if len(objs) == 1 else objs
    rows = []
    for r in reports:
        for n, ok in sorted(r.matches.items()):
            rows.append([r.formula_id, r.r, n, "match" if ok else "MISMATCH"])
    lines = []
    for r in reports:
        total = len(r.matches)
        good = sum(r.matches.values())
        lines.append(f"{r.kind} {r.formula_id} r={r.r} n<={r.max_n}: {good}/{total} match")
        for m in r.mismatches:
            lines.append(f"  n={m.n}: formula {[higher._fmt(c) for c in m.formula_coeffs]}")
            lines.append(f"  n={m.n}: oracle  {[higher._fmt(c) for c in m.oracle_coeffs]}")
        for note in r.notes:
            lines.append(f"  note: {note}")
    return _emit(args.format, json_obj, rows, "\n".join(lines)), (EXIT_MISMATCH if bad else EXIT_OK)


def _fourier_target(args):
    t = args.target
    if t == "bernoulli":
        return lambda x: fourier.bernoulli_fourier(args.n, x, args.terms), (Fraction(0), Fraction(1), args.n == 1)
    if t == "euler":
        return lambda x: fourier.euler_fourier(args.n, x, args.terms), (Fraction(0), Fraction(1), args.n == 0)
    if t == "euler-order":
        r = args.order
        return (lambda x: fourier.euler_order_r_fourier(args.n, r, x, args.terms, args.variant),
                (Fraction(0), Fraction(r), True))
    if args.f is None or args.a is None or args.parity is None:
        raise UsageError("the appell target needs --f, --a and --parity")
    order = args.n + 1
    d = symmetry.decompose(parse_series_spec(args.f, order), args.a, args.parity)
    strict = args.n == (0 if args.parity == symmetry.ODD else 1)
    lo, hi = sorted([Fraction(0), args.a])
    literal = args.variant != fourier.DERIVED
    return lambda x: fourier.appell_fourier(d, args.n, x, args.terms, literal=literal), (lo, hi, strict)


def _cmd_fourier(args):
    target, (lo, hi, strict) = _fourier_target(args)
    if args.grid is not None:
        xs = fourier.grid_points(lo, hi, args.grid, strict, strict)
        evals = [target(x) for x in xs]
        rows = [[format_rational(e.x), format(e.partial_sum, ".17g"), format_rational(e.exact_value),
                 format(e.abs_error, ".17g")] for e in evals]
        fmt = "tsv" if args.format == "text" else args.format
        return _emit(fmt, [e.to_json() for e in evals], rows), EXIT_OK
    if args.x is None:
        raise UsageError("fourier needs --x or --grid")
    ev = target(args.x)
    obj = ev.to_json()
    row = [obj["x"], obj["partial_sum"], obj["exact_value"], obj["abs_error"]]
    text = "\n".join(f"{k}: {v}" for k, v in obj.items())
    return _emit(args.format, obj, [row], text), EXIT_OK


COMMANDS = {
    "numbers": _cmd_numbers,
    "poly": _cmd_poly,
    "symmetry": _cmd_symmetry,
    "basis": _cmd_basis,
    "member": _cmd_member,
    "decompose": _cmd_decompose,
    "validate": _cmd_validate,
    "fourier": _cmd_fourier,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return EXIT_OK if not exc.code else EXIT_USAGE
        if args.command is None:
            raise UsageError(parser.format_usage())
        out, code = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(str(exc).rstrip("\n") + "\n")
        return EXIT_USAGE
    except DomainError as exc:
        stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    stdout.write(out + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
