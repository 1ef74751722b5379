"""Command line interface: ``monotri {count,genfun,alpha,asm,verify}``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import alpha as al
from . import asm
from .operators import SpecSet
from .ring import LaurentPQ, parse_rational
from .triangles import (
    enumerate_monotone,
    iter_monotone,
    iter_s_triangles,
    s_sum_brute,
)
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _num(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ints(text: str) -> tuple:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise UsageError(f"malformed integer vector {text!r}") from None
    if not vals:
        raise UsageError("empty integer vector")
    return vals


def _at(text: str) -> dict:
    out = {}
    for part in text.split(","):
        name, sep, val = part.partition("=")
        name = name.strip().upper()
        if not sep or name not in ("P", "Q") or name in out:
            raise UsageError(f"malformed --at {text!r}; expected P=<rat>,Q=<rat>")
        try:
            out[name] = parse_rational(val)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"malformed rational {val!r} in --at") from None
    return out


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg}") from None


def _emit(obj) -> None:
    print(json.dumps(obj))


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_count(args) -> int:
    bottom = _ints(args.bottom)
    if args.file:
        try:
            spec = SpecSet.from_json(_load_json(args.file))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.top is not None:
            raise UsageError("--top is not supported together with --file")
        if args.list:
            for pat, w in iter_s_triangles(bottom, spec):
                print(f"{pat.line()}\t{_num(w)}")
            return 0
        _emit({"count": _num(s_sum_brute(bottom, spec))})
        return 0
    if any(a >= b for a, b in zip(bottom, bottom[1:])):
        raise UsageError("monotone triangles need a strictly increasing bottom row (use --file for S-triangles)")
    if args.list:
        for t in iter_monotone(bottom):
            if args.top is None or t.top == args.top:
                print(t.line())
        return 0
    _emit({"count": str(enumerate_monotone(bottom, args.top))})
    return 0


def cmd_genfun(args) -> int:
    bottom = _ints(args.bottom)
    if args.weight == "P":
        if any(a > b for a, b in zip(bottom, bottom[1:])):
            raise UsageError("the P-weight needs a weakly increasing bottom row")
        value = al.p_genfun(bottom)
    else:
        value = al.classical_formula(bottom, args.weight)
    _emit(value.to_json())
    return 0


def cmd_alpha(args) -> int:
    try:
        a = al.AlphaSpec.from_json(_load_json(args.file))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fn = al.alpha_recursive(a) if args.method == "recursive" else al.alpha_closed_xpoly(a)
    if args.bottom is None:
        if args.at:
            raise UsageError("--at needs --bottom")
        _emit(fn.to_json())
        return 0
    k = _ints(args.bottom)
    if len(k) != a.nargs:
        raise UsageError(f"alpha with n={a.n} and r={a.r} takes {a.nargs} arguments, got {len(k)}")
    value = fn.evaluate(k)
    if args.at:
        at = _at(args.at)
        if "Q" in at:
            value = value.subs_q(at["Q"])
        if "P" in at:
            value = value.subs_p(at["P"])
        if "P" in at and "Q" in at:
            _emit({"value": _num(value.coeff(0, 0))})
            return 0
    _emit({"value": value.to_json()})
    return 0


def cmd_asm(args) -> int:
    n = args.size
    if n < 1:
        raise UsageError("--size must be positive")
    if args.top is not None and not 1 <= args.top <= n:
        raise UsageError(f"--top must lie in 1..{n}")
    if args.symmetric:
        if n % 2 == 0:
            raise UsageError("vertically symmetric ASMs exist only in odd order")
        if n > 7:
            raise UsageError("--symmetric supports orders up to 7")
    if n > 7:
        raise UsageError("exhaustive enumeration supports sizes up to 7")

    def keep(rows):
        if args.top is not None and rows[0][args.top - 1] != 1:
            return False
        return not args.symmetric or all(r == r[::-1] for r in rows)

    mats = (rows for rows in asm.iter_asms(n) if keep(rows))
    if args.list:
        first = True
        for rows in mats:
            if not first:
                print()
            first = False
            sys.stdout.write("".join(" ".join(str(x) for x in r) + "\n" for r in rows))
        return 0
    census = asm.census(mats)
    _emit({"by_minus_ones": {str(k): v for k, v in census.items()}, "total": sum(census.values())})
    return 0


def cmd_verify(args) -> int:
    name = args.suite_opt or args.suite or "all"
    if name != "all" and name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    rep = run_suite(name)
    if args.json:
        _emit(rep.to_json())
    else:
        print(rep.to_text())
    return rep.exit_code


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monotri", description="Exact monotone triangle and ASM enumeration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count monotone triangles or sum S-triangle weights")
    p.add_argument("--bottom", required=True, help="comma separated bottom row")
    p.add_argument("--top", type=int, help="restrict to this top entry")
    p.add_argument("--list", action="store_true", help="list the triangles instead of counting")
    p.add_argument("--file", help="SpecSet JSON; sum S-triangle weights instead")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("genfun", help="weighted generating function as Laurent JSON")
    p.add_argument("--bottom", required=True)
    p.add_argument("--weight", choices=("plain", "Q", "P"), default="plain")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("alpha", help="evaluate alpha for an AlphaSpec file")
    p.add_argument("--file", required=True, help="AlphaSpec JSON")
    p.add_argument("--bottom", help="arguments k_1..k_{n+r-1}; omit to print the symbolic result")
    p.add_argument("--at", help="substitute P=<rat>,Q=<rat>")
    p.add_argument("--method", choices=("closed", "recursive"), default="closed")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("asm", help="census of alternating sign matrices")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--top", type=int, help="column of the 1 in the first row")
    p.add_argument("--list", action="store_true")
    p.add_argument("--symmetric", action="store_true", help="only vertically symmetric ASMs")
    p.set_defaults(func=cmd_asm)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", nargs="?", help="suite name (default: all)")
    p.add_argument("--suite", dest="suite_opt")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
