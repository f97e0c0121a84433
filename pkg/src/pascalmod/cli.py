"""Command-line front end: digits, add, valuation, divisible, triangle, render, stripes, verify.

Exit codes: 0 success, 1 usage/domain error, 2 theorem violation or a
failed verify run.  Every subcommand has a --json variant; --input-base
reinterprets positional numbers so worked examples can be typed in
their original base.
"""

import argparse
import json
import sys

from . import carries, digits, render, triangle, valuation, verify
from .errors import TheoremViolation


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_number(text: str, base: int) -> int:
    if not 2 <= base <= 36:
        raise ValueError(f"--input-base must be in [2, 36], got {base}")
    try:
        n = int(text, base)
    except ValueError:
        raise ValueError(f"{text!r} is not a base-{base} number") from None
    if n < 0:
        raise ValueError(f"numbers must be non-negative, got {text!r}")
    return n


def _emit(args, text_lines, doc):
    if getattr(args, "json", False):
        print(json.dumps(doc))
    else:
        for line in text_lines:
            print(line)


def _trace_lines(t):
    width = max(len(t.sum_n.display()), 1) + 2
    carry_row = "".join("1" if c else " " for c in reversed(t.carry_in)).rstrip() or ""
    lines = [
        f"  carries  {carry_row.rjust(width)}",
        f"           {t.addend_i.display().rjust(width)}",
        f"         + {t.addend_j.display().rjust(width)}",
        f"         = {t.sum_n.display().rjust(width)}",
    ]
    stops = sorted(carries.stopping_places(t))
    lines.append(f"  stopping places: {stops if stops else '{}'}")
    I = digits.digit_sum(t.addend_i.value(), t.base)
    J = digits.digit_sum(t.addend_j.value(), t.base)
    N = digits.digit_sum(t.sum_n.value(), t.base)
    b = t.base
    lines.append(f"  c = (I+J-N)/(b-1) = ({I}+{J}-{N})/{b - 1} = {I + J - N}/{b - 1} = {t.carry_count}")
    return lines


def _trace_doc(t):
    return {
        "base": t.base,
        "i": t.addend_i.value(),
        "j": t.addend_j.value(),
        "sum": t.sum_n.value(),
        "i_digits": list(t.addend_i.digits),
        "j_digits": list(t.addend_j.digits),
        "sum_digits": list(t.sum_n.digits),
        "carry_in": list(t.carry_in),
        "carry_out": list(t.carry_out),
        "stopping": list(t.stopping),
        "stopping_places": sorted(carries.stopping_places(t)),
        "carry_count": t.carry_count,
    }


def _cmd_digits(args):
    n = _parse_number(args.n, args.input_base)
    dv = digits.to_digits(n, args.base)
    _emit(
        args,
        [
            f"{dv.display()} (base {args.base})",
            f"digits (little-endian): {list(dv.digits)}",
            f"digit sum: {digits.digit_sum(n, args.base)}",
        ],
        {
            "base": args.base,
            "digits": list(dv.digits),
            "display": dv.display(),
            "digit_sum": digits.digit_sum(n, args.base),
        },
    )
    return 0


def _cmd_add(args):
    i = _parse_number(args.i, args.input_base)
    j = _parse_number(args.j, args.input_base)
    t = carries.add_with_trace(i, j, args.base)
    lines = [f"{t.sum_n.display()} (base {args.base})"]
    if args.trace:
        lines += _trace_lines(t)
    else:
        lines.append(f"carries: {t.carry_count}")
    _emit(args, lines, _trace_doc(t))
    return 0


def _cmd_valuation_factorial(args):
    n = _parse_number(args.n, args.input_base)
    p = args.prime
    values = {}
    if args.method in ("brute", "all"):
        values["brute"] = valuation.factorial_valuation_bruteforce(n, p, args.oracle_cap)
    if args.method in ("legendre", "all"):
        values["legendre"] = valuation.legendre_valuation(n, p)
    if args.method in ("digits", "all"):
        values["digits"] = valuation.digit_sum_valuation(n, p)
    agree = len(set(values.values())) == 1
    lines = [f"v_{p}({n}!) = {v}  [{name}]" for name, v in values.items()]
    if args.method == "all":
        if not agree:
            raise TheoremViolation(f"valuation methods disagree for n = {n}, p = {p}: {values}")
        lines.append("all methods agree")
    _emit(args, lines, {"n": n, "prime": p, "values": values, "agree": agree})
    return 0


def _cmd_valuation_binomial(args):
    n = _parse_number(args.n, args.input_base)
    i = _parse_number(args.i, args.input_base)
    p = args.prime
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    j = n - i
    carry = valuation.kummer_valuation(n, i, p)
    diff = (
        valuation.legendre_valuation(n, p)
        - valuation.legendre_valuation(i, p)
        - valuation.legendre_valuation(j, p)
    )
    t = carries.add_with_trace(i, j, p)
    lines = [
        f"v_{p}(C({n},{i})) = {carry}  [carry count]",
        f"v_{p}(C({n},{i})) = {diff}  [Legendre difference]",
    ]
    lines += _trace_lines(t)
    _emit(
        args,
        lines,
        {"n": n, "i": i, "prime": p, "carry_count": carry, "legendre_difference": diff, "trace": _trace_doc(t)},
    )
    if carry != diff:
        raise TheoremViolation(f"carry count {carry} != Legendre difference {diff} for n={n}, i={i}, p={p}")
    return 0


def _cmd_divisible(args):
    n = _parse_number(args.n, args.input_base)
    i = _parse_number(args.i, args.input_base)
    m = args.mod
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    verdicts = []
    for p, a in valuation.factorize(m):
        v = valuation.kummer_valuation(n, i, p)
        verdicts.append({"prime": p, "needed": a, "valuation": v, "ok": v >= a})
    result = all(v["ok"] for v in verdicts)
    lines = [f"  {v['prime']}^{v['needed']}: v = {v['valuation']} -> {'yes' if v['ok'] else 'no'}" for v in verdicts]
    lines.append(f"{m} divides C({n},{i}): {'true' if result else 'false'}")
    _emit(args, lines, {"n": n, "i": i, "mod": m, "prime_powers": verdicts, "divisible": result})
    return 0


def _triangle_grid(args):
    m = args.mod
    if args.method == "recurrence":
        return [list(r.entries) for r in triangle.iter_rows(m, args.rows)]
    valuation.check_prime(m)
    if args.method == "lucas":
        return [[triangle.entry_mod_prime(n, i, m) for i in range(n + 1)] for n in range(args.rows)]
    # kummer: only divisibility is known, emit 1 for nonzero, 0 for divisible
    return [[int(valuation.kummer_valuation(n, i, m) == 0) for i in range(n + 1)] for n in range(args.rows)]


def _cmd_triangle(args):
    grid = _triangle_grid(args)
    if args.format == "json":
        print(json.dumps({"modulus": args.mod, "rows": grid}))
        return 0
    width = len(" ".join(str(e) for e in grid[-1]))
    for row in grid:
        cells = " ".join("." if e == 0 else str(e) for e in row)
        print(cells.center(width).rstrip())
    return 0


def _write_bytes(data: bytes, out):
    if out:
        try:
            with open(out, "wb") as fh:
                fh.write(data)
        except OSError as e:
            raise OSError(f"cannot write {out}: {e}") from None
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _cmd_render(args):
    spec = render.RenderSpec(format=args.format, centered=args.centered, scale=args.scale, raw=args.raw)
    if args.format in ("pgm", "ppm"):
        data = render.render_residues(triangle.iter_rows(args.mod, args.rows), spec)
    else:
        if valuation.is_prime(args.mod):
            mask = triangle.divisibility_mask(args.mod, args.rows, "digit-domination")
        else:
            mask = triangle.composite_mask(args.mod, args.rows)
        data = render.render_mask(mask, spec)
    _write_bytes(data, args.out)
    return 0


def _cmd_stripes(args):
    layers = [s.strip() for s in args.layers.split(",")] if args.layers else ["intersection"]
    layers = [s for s in layers if s]
    data = render.render_stripes(args.place, args.rows, layers)
    _write_bytes(data, args.out)
    return 0


def _cmd_verify(args):
    primes = tuple(int(p) for p in args.primes.split(","))
    report = verify.run_verify(max_n=args.max_n, primes=primes, rows=args.rows, seed=args.seed)
    if args.json:
        sys.stdout.write(report.stable_json())
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 2


def _build_parser():
    parser = _Parser(prog="pascalmod", description="Carries, valuations and the fractal structure of Pascal's triangle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--input-base", type=int, default=10, metavar="B", help="base of positional number arguments")

    p = sub.add_parser("digits", help="base-b digits of n")
    p.add_argument("n")
    p.add_argument("--base", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_digits)

    p = sub.add_parser("add", help="add two numbers in base b with a carry trace")
    p.add_argument("i")
    p.add_argument("j")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="print the column-addition diagram")
    common(p)
    p.set_defaults(handler=_cmd_add)

    p = sub.add_parser("valuation", help="p-adic valuations of factorials and binomials")
    vsub = p.add_subparsers(dest="valuation_command", required=True)

    pf = vsub.add_parser("factorial", help="v_p(n!)")
    pf.add_argument("n")
    pf.add_argument("--prime", type=int, required=True)
    pf.add_argument("--method", choices=("brute", "legendre", "digits", "all"), default="all")
    pf.add_argument("--oracle-cap", type=int, default=None, help="brute-force cap (overrides KUMMER_ORACLE_CAP)")
    common(pf)
    pf.set_defaults(handler=_cmd_valuation_factorial)

    pb = vsub.add_parser("binomial", help="v_p(C(n, i))")
    pb.add_argument("n")
    pb.add_argument("i")
    pb.add_argument("--prime", type=int, required=True)
    common(pb)
    pb.set_defaults(handler=_cmd_valuation_binomial)

    p = sub.add_parser("divisible", help="does m divide C(n, i)?")
    p.add_argument("n")
    p.add_argument("i")
    p.add_argument("--mod", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_divisible)

    p = sub.add_parser("triangle", help="rows of Pascal's triangle mod m")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--method", choices=("recurrence", "kummer", "lucas"), default="recurrence")
    p.add_argument("--format", choices=("ascii", "json"), default="ascii")
    common(p)
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("render", help="emit a mask or residue image")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=render.FORMATS, default="pbm")
    p.add_argument("--centered", action="store_true")
    p.add_argument("--scale", type=int, default=1)
    p.add_argument("--raw", action="store_true", help="raw PBM (P4) instead of plain (P1)")
    p.add_argument("--out", default=None)
    common(p)
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("stripes", help="binary stripe overlays for one place position")
    p.add_argument("--place", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--layers", default="intersection", help="comma list of row,i,j,intersection")
    p.add_argument("--out", default=None)
    common(p)
    p.set_defaults(handler=_cmd_stripes)

    p = sub.add_parser("verify", help="run every cross-method property sweep")
    p.add_argument("--max-n", type=int, default=512)
    p.add_argument("--primes", default="2,3,5,7,11,13")
    p.add_argument("--rows", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def parse_and_dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return 0 if e.code in (0, None) else 1
    try:
        return args.handler(args)
    except TheoremViolation as e:
        print(f"theorem violation: {e}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(parse_and_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
