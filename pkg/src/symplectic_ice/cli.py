"""Command line: ``verify <suite>``, ``eval <what>``, ``list-suites``.

Exit status is 0 on pass, 1 when a suite records a failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .closed_forms import double_row_me_closed, five_vertex_me_closed, me_A_closed, me_Atilde_closed, \
    me_B_closed, me_Btilde_closed
from .exact import LaurentT, format_scalar
from .schur import factorial_sp, sp
from .verify import SUITES, SuiteSpec, run_suite
from .wavefunctions import Config, dual_wavefunction, wavefunction

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ME_CLOSED = {"A": me_A_closed, "B": me_B_closed, "Atilde": me_Atilde_closed, "Btilde": me_Btilde_closed}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse already exits with status 2; route it through UsageError so main() owns the exit
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def _scalar(text: str):
    # "t" keeps the variable symbolic
    return LaurentT.t() if text.strip() == "t" else _rational(text)


def _rationals(text: str) -> list[Fraction]:
    return [_rational(x) for x in text.split(",") if x.strip()]


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from exc


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"eval {args.what} needs " + " ".join("--" + n.replace("_", "-") for n in missing))


def eval_value(args) -> str:
    what = args.what
    if what in ("wavefunction", "dual"):
        _need(args, "m", "z", "t")
        positions = args.x if args.x is not None else args.xbar
        if positions is None:
            raise UsageError(f"eval {what} needs --x (or --xbar)")
        zs = _rationals(args.z)
        pos = _ints(positions)
        if args.n is not None and args.n != len(pos):
            raise UsageError(f"--n {args.n} disagrees with {len(pos)} positions")
        if len(zs) != len(pos):
            raise UsageError(f"{len(zs)} values of z for {len(pos)} positions")
        alphas = _rationals(args.alphas) if args.alphas else None
        variant = args.variant or ("inhom" if alphas else "plain")
        t = _scalar(args.t)
        if what == "wavefunction":
            value = wavefunction(args.m, zs, t, Config(args.m, pos), variant, alphas)
        else:
            value = dual_wavefunction(args.m, zs, t, Config(args.m, pos, "holes"), variant, alphas)
    elif what == "sp":
        _need(args, "lambda_", "z")
        value = sp(_ints(args.lambda_), _rationals(args.z))
    elif what == "factorial-sp":
        _need(args, "lambda_", "z", "alphas")
        value = factorial_sp(_ints(args.lambda_), _rationals(args.z), _rationals(args.alphas))
    elif what in ("me-closed", "double-row-me"):
        _need(args, "m", "xbar", "ybar", "z")
        bra = Config(args.m, _ints(args.xbar), "holes")
        ket = Config(args.m, _ints(args.ybar), "holes")
        z = _rational(args.z)
        kind = args.kind or ("DoubleRowB" if what == "double-row-me" else None)
        if args.t is not None and args.t.strip() == "-1" and args.variant == "primed":
            value = five_vertex_me_closed(kind, bra, ket, z)
        else:
            _need(args, "t")
            t = _scalar(args.t)
            if what == "double-row-me":
                value = double_row_me_closed(bra, ket, z, t)
            elif kind in _ME_CLOSED:
                value = _ME_CLOSED[kind](bra, ket, z, t)
            else:
                raise UsageError(f"--kind must be one of {', '.join(_ME_CLOSED)}")
    else:  # argparse restricts choices; kept for direct callers
        raise UsageError(f"unknown eval target {what!r}")
    return format_scalar(value)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symplectic-ice", description="Exact checks of reflecting-boundary free-fermion ice.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run one verification suite")
    v.add_argument("suite", choices=list(SUITES))
    v.add_argument("--m-max", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true", help="emit one JSON document")

    e = sub.add_parser("eval", help="evaluate a single exact value")
    e.add_argument("what", choices=["wavefunction", "dual", "sp", "factorial-sp", "me-closed", "double-row-me"])
    e.add_argument("--m", type=int)
    e.add_argument("--n", type=int)
    e.add_argument("--x", help="comma-separated positions")
    e.add_argument("--xbar", help="bra hole positions (me-closed) or hole positions (dual)")
    e.add_argument("--ybar", help="ket hole positions")
    e.add_argument("--z", help="comma-separated rationals")
    e.add_argument("--t", help="rational, or 't' for a symbolic Laurent value")
    e.add_argument("--lambda", dest="lambda_", help="comma-separated partition")
    e.add_argument("--alphas", help="a0,a1,...")
    e.add_argument("--variant", choices=["plain", "primed", "inhom"])
    e.add_argument("--kind", choices=["A", "B", "Atilde", "Btilde", "DoubleRowB"])

    sub.add_parser("list-suites", help="print the suite catalog")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "list-suites":
            for name, (_, m, n, trials, desc) in SUITES.items():
                print(f"{name:<12} m_max={m:<2} n_max={n:<2} trials={trials:<4} {desc}")
            return EXIT_PASS
        if args.command == "eval":
            print(eval_value(args))
            return EXIT_PASS
        spec = SuiteSpec(args.suite, args.m_max, args.n_max, args.trials, args.seed)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report = run_suite(spec)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
