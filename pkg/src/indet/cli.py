"""Command-line interface.

All positions printed are 1-based.  Exit codes: ``check`` 0 regular /
1 indeterminate; ``reverse`` 0 regular / 1 indeterminate / 2 infeasible;
``feasible`` 0 feasible / 1 infeasible; 2 is also any usage, parse or
decoding error.
"""
from __future__ import annotations

import argparse
import sys

from .core import (Alphabet, CapacityError, DecodeError, ParseError, format_text,
                   from_bytes, parse_text, to_bytes)
from .oracles import oracle_is_regular, oracle_lex_least, oracle_mp
from .palindrome import (InfeasibleError, any_string_from_mp, construct, expand,
                         feasibility_violation, format_mp, mp_array, parse_mp,
                         parse_star)
from .regularity import quick_screen, regular_check

EXIT_ERROR = 2


class CommandError(Exception):
    pass


def _alphabet(args, text: str | None = None) -> Alphabet | None:
    if args.preset == "dna":
        base = Alphabet.dna()
        if args.code_width is None and args.sigma_star is None:
            return base
        return Alphabet(base.characters, args.code_width or base.code_width_bits,
                        args.sigma_star)
    if args.alphabet:
        chars = tuple(s.strip() for s in args.alphabet.split(","))
        width = args.code_width or 8
        return Alphabet(chars, width, args.sigma_star)
    if args.code_width or args.sigma_star is not None:
        inferred = Alphabet.infer(text or "")
        return Alphabet(inferred.characters, args.code_width or inferred.code_width_bits,
                        args.sigma_star)
    return None


def _read_input(value: str | None, path: str | None) -> str:
    if path:
        with open(path, encoding="utf-8") as fh:
            return fh.read().strip()
    if value is None or value == "-":
        return sys.stdin.read().strip()
    return value


def _emit(args, plain: str, pairs: list[tuple[str, object]]) -> None:
    out = args.stdout
    if args.format == "kv":
        for k, v in pairs:
            out.write(f"{k}={v}\n")
    else:
        out.write(plain + "\n")


def _parse_string(args, text):
    return parse_text(text, _alphabet(args, text))


def cmd_check(args) -> int:
    text = _read_input(args.text, args.input)
    x = _parse_string(args, text)
    if args.oracle:
        regular = oracle_is_regular(x)
        y = oracle_lex_least(x) if regular else None
    else:
        regular, y = regular_check(x)
    screen = quick_screen(x)
    if regular:
        ys = ",".join(map(str, y.y))
        _emit(args, f"REGULAR y={ys} sigma={y.sigma_prime}",
              [("verdict", "REGULAR"), ("y", ys), ("sigma", y.sigma_prime),
               ("screen", screen or "none")])
        return 0
    _emit(args, "INDETERMINATE", [("verdict", "INDETERMINATE"), ("screen", screen or "none")])
    return 1


def cmd_mp(args) -> int:
    text = _read_input(args.text, args.input)
    if text.lstrip().startswith("#"):
        xs = parse_star(text, _alphabet(args, text.replace("#", "")))
    else:
        xs = expand(_parse_string(args, text))
    mp = oracle_mp(xs) if args.oracle else tuple(mp_array(xs))
    line = format_mp(mp)
    _emit(args, line, [("x*", str(xs)), ("mp", line)])
    return 0


def _read_mp(args):
    line = _read_input(" ".join(args.mp) if args.mp else None, args.input)
    try:
        return parse_mp(line)
    except ValueError as exc:
        raise CommandError(str(exc)) from None


def _infeasible(args, cond, j) -> None:
    _emit(args, f"INFEASIBLE condition {cond} at j={j}",
          [("verdict", "INFEASIBLE"), ("condition", cond), ("j", j)])


def cmd_reverse(args) -> int:
    mp = _read_mp(args)
    try:
        res = construct(mp, strict=args.strict)
    except InfeasibleError as exc:
        _infeasible(args, exc.condition, exc.j)
        return 2
    flag = "REGULAR" if res.regular else "INDETERMINATE"
    _emit(args, f"{res.xs} {flag} sigma={res.sigma}",
          [("x*", res.xs), ("verdict", flag), ("sigma", res.sigma),
           ("centres", res.centres_evaluated), ("fallback", res.fallback)])
    return 0 if res.regular else 1


def cmd_feasible(args) -> int:
    mp = _read_mp(args)
    bad = feasibility_violation(mp)
    if bad:
        _infeasible(args, *bad)
        return 1
    _emit(args, "FEASIBLE", [("verdict", "FEASIBLE")])
    return 0


def cmd_anystring(args) -> int:
    mp = _read_mp(args)
    try:
        xs = any_string_from_mp(mp)
    except InfeasibleError as exc:
        _infeasible(args, exc.condition, exc.j)
        return 2
    _emit(args, str(xs), [("x*", xs)])
    return 0


def _tables(x) -> str:
    codes = ",".join(map(str, x.codes))
    table = ",".join(f"({s},{loc})" for s, loc in x.i_table)
    pool = ",".join(map(str, x.l_pool))
    return codes, f"[{table}]", f"[{pool}]"


def cmd_encode(args) -> int:
    text = _read_input(args.text, args.input)
    x = _parse_string(args, text)
    codes, table, pool = _tables(x)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(to_bytes(x))
    plain = f"codes={codes}"
    if args.show_tables:
        plain += f" I={table} L={pool}"
    _emit(args, plain, [("codes", codes), ("I", table), ("L", pool)])
    return 0


def cmd_decode(args) -> int:
    if args.file == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(args.file, "rb") as fh:
            data = fh.read()
    x = from_bytes(data)
    text = format_text(x)
    if args.show_tables:
        codes, table, pool = _tables(x)
        _emit(args, f"{text} codes={codes} I={table} L={pool}",
              [("text", text), ("codes", codes), ("I", table), ("L", pool)])
    else:
        _emit(args, text, [("text", text)])
    return 0


def cmd_fuzz(args) -> int:
    from .fuzz import run_fuzz

    curve = tuple(int(v) for v in args.curve.split(",")) if args.curve else ()
    rep = run_fuzz(args.seed, args.count, args.max_m, args.max_n, curve, args.timing)
    for line in rep.lines:
        args.stdout.write(line + "\n")
    for line in rep.failures:
        args.stdout.write("FAIL " + line + "\n")
    return 0 if rep.ok else 1


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # subcommands get SUPPRESS defaults so flags given before the command survive
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default=d(None),
                        help="comma-separated ordered alphabet, e.g. a,c,g,t")
    common.add_argument("--preset", choices=["dna"], default=d(None),
                        help="named alphabet (dna: a,c,g,t in 4-bit codes)")
    common.add_argument("--code-width", type=int, default=d(None),
                        help="bits per letter code (default 8)")
    common.add_argument("--sigma-star", type=int, default=d(None),
                        help="capacity of the indeterminate-letter table")
    common.add_argument("--oracle", action="store_true", default=d(False),
                        help="use the brute-force reference code")
    common.add_argument("--strict", action="store_true", default=d(False),
                        help="re-check every probe at skipped-to centres")
    common.add_argument("--seed", type=int, default=d(1))
    common.add_argument("--format", choices=["plain", "kv"], default=d("plain"))
    common.add_argument("-i", "--input", default=d(None), help="read the argument from a file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(prog="indet", parents=[_global_flags(suppress=False)],
                                     description="Regular and indeterminate strings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="regularity test and lex-least witness")
    p.add_argument("text", nargs="?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mp", parents=[common], help="maximal palindrome array of x*")
    p.add_argument("text", nargs="?")
    p.set_defaults(func=cmd_mp)

    for name, func, doc in [("reverse", cmd_reverse, "string from an MP array"),
                            ("feasible", cmd_feasible, "feasibility test for an MP array"),
                            ("anystring", cmd_anystring, "existence construction for an MP array")]:
        p = sub.add_parser(name, parents=[common], help=doc)
        p.add_argument("mp", nargs="*", help="MP values, separate or quoted (or - for stdin)")
        p.set_defaults(func=func)

    p = sub.add_parser("encode", parents=[common], help="integer codes and binary file")
    p.add_argument("text", nargs="?")
    p.add_argument("-o", "--output", help="write the binary encoding here")
    p.add_argument("--show-tables", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="binary file back to text")
    p.add_argument("file")
    p.add_argument("--show-tables", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("fuzz", parents=[common], help="seeded property sweep")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-m", type=int, default=25)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--curve", help="comma-separated n values for the non-regular construct curve")
    p.add_argument("--timing", action="store_true", help="add wall times to the curve")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    args.stdout = stdout or sys.stdout
    try:
        return args.func(args)
    except (ParseError, CapacityError, DecodeError, CommandError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
