"""Command-line interface: ``zeta2-hyperlab <subcommand> ...``.

Exit status: 0 on success or pass, 1 on a failed verification, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .errors import BudgetExceeded, HyperlabError
from .exact_arith import format_rational, parse_rational
from .hyper_numeric import PfqSpec, eval_pfq
from .params import F32Params, IntegralParams, parse_tuple
from .search import SearchSpec, grid_search, write_records
from .thomae_group import orbit_lines, phi_related, t_related, x_of_f32, x_of_integral
from .zeta2_exact import eval_3f2_exact, eval_integral_exact, is_irrational

PRECISION_ENV = "ZETA2_PRECISION"
MIN_PRECISION = 32


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return 128
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be an integer, got {raw!r}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except HyperlabError:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return v


def _bounds(text: str) -> List[int]:
    parts = [p for p in text.split(",") if p]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bounds must be integers: {text!r}")
    if len(values) == 1:
        values *= 5
    if len(values) != 5:
        raise argparse.ArgumentTypeError("give one bound or five comma-separated bounds")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zeta2-hyperlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--precision", type=int, default=None,
                        help=f"bits for numeric work (default 128, or ${PRECISION_ENV})")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("eval-integral", help="exact value of I(h,i,j,k,l)")
    p.add_argument("params", nargs=5, type=_nonneg_int, metavar="N")

    p = sub.add_parser("eval-3f2", help="3F2(a,b,c;d,e;1): exact, or numeric with --numeric")
    p.add_argument("params", nargs=5, type=_rational, metavar="R")
    p.add_argument("--numeric", action="store_true")

    p = sub.add_parser("orbit", help="Thomae orbit as 3F2 arrays")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--integral", nargs=5, type=_nonneg_int, metavar="N")
    g.add_argument("--series", nargs=5, type=_rational, metavar="R")
    p.add_argument("--dedup", action=argparse.BooleanOptionalAction, default=True,
                   help="collapse trivial-symmetry copies (default); --no-dedup lists term-wise distinct arrays")

    p = sub.add_parser("related", help="T- or Phi-relatedness of two integral tuples")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", action="store_true")
    g.add_argument("--phi", action="store_true")
    p.add_argument("p", help="h,i,j,k,l")
    p.add_argument("q", help="h,i,j,k,l")

    p = sub.add_parser("rationality", help="rationality criterion and exact value")
    p.add_argument("params", nargs=5, type=_nonneg_int, metavar="N")

    p = sub.add_parser("verify", help="verify a catalogue identity: verify <id> --<param> <rational> ...")
    p.add_argument("id")
    p.add_argument("--numeric", action="store_true", help="force numeric verification")

    sub.add_parser("catalogue", help="list catalogue identities")
    sub.add_parser("sato", help="verify Sato's six relations exactly")

    p = sub.add_parser("family", help="verify an infinite counter-example family")
    p.add_argument("family", choices=("A", "B"))
    p.add_argument("--alpha-max", type=int, required=True)

    p = sub.add_parser("search", help="grid search for rational-multiple relations")
    p.add_argument("--template", choices=("integral", "3f2"), required=True)
    p.add_argument("--max", type=_bounds, required=True, help="upper bound(s): N or N,N,N,N,N")
    p.add_argument("--min", type=_bounds, default=None, help="lower bound(s), default 0 (integral) or 1 (3f2)")
    p.add_argument("--tie", action="append", default=[], help="coordinate tie such as d=a+1 (3f2 only)")
    p.add_argument("--out", default="-", help="output file, - for stdout")
    p.add_argument("--format", choices=("human", "records"), default="records")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=1_000_000, help="maximum emitted pairs")
    p.add_argument("--include-rational", action="store_true", help="also emit pairs of rational values")
    return parser


def _parse_verify_params(extra: Sequence[str]) -> dict:
    params = {}
    it = iter(extra)
    for flag in it:
        if not flag.startswith("--") or len(flag) < 3:
            raise UsageError(f"unexpected argument {flag!r}; parameters are given as --name value")
        name = flag[2:]
        if "=" in name:
            name, value = name.split("=", 1)
        else:
            value = next(it, None)
            if value is None:
                raise UsageError(f"missing value for {flag}")
        try:
            params[name.replace("-", "_")] = parse_rational(value)
        except HyperlabError:
            raise UsageError(f"value for {flag} is not a rational: {value!r}")
    return params


def _out(lines, out):
    for line in lines:
        print(line, file=out)


def _cmd_eval_integral(args, out) -> int:
    print(eval_integral_exact(IntegralParams.of(*args.params)), file=out)
    return 0


def _cmd_eval_3f2(args, out, precision) -> int:
    f = F32Params(tuple(args.params[:3]), tuple(args.params[3:]))
    if args.numeric:
        print(eval_pfq(PfqSpec(f.upper, f.lower, 1), precision), file=out)
    else:
        print(eval_3f2_exact(f), file=out)
    return 0


def _cmd_orbit(args, out) -> int:
    if args.integral is not None:
        x = x_of_integral(IntegralParams.of(*args.integral))
    else:
        x = x_of_f32(F32Params(tuple(args.series[:3]), tuple(args.series[3:])))
    _out(orbit_lines(x, dedup=args.dedup), out)
    return 0


def _cmd_related(args, out) -> int:
    try:
        p = IntegralParams.of(parse_tuple(args.p, 5))
        q = IntegralParams.of(parse_tuple(args.q, 5))
    except HyperlabError as exc:
        raise UsageError(str(exc))
    name, fn = ("t", t_related) if args.t else ("phi", phi_related)
    print(f"{name}_related {p} {q} {'true' if fn(p, q) else 'false'}", file=out)
    return 0


def _cmd_rationality(args, out) -> int:
    p = IntegralParams.of(*args.params)
    value = eval_integral_exact(p)
    combos = " ".join(str(v) for v in p.linear_combos())
    print(f"I{p} = {value}", file=out)
    print(f"combos {combos}", file=out)
    print("irrational" if is_irrational(p) else "rational", file=out)
    return 0


def _report_lines(report) -> List[str]:
    lines = [report.line()]
    lines += [f"  {n}" for n in report.notes]
    if report.lhs_value is not None:
        lines.append(f"  lhs {report.lhs_value}")
        lines.append(f"  rhs {report.rhs_value}")
    return lines


def _cmd_verify(args, extra, out, precision) -> int:
    from .identities import get_entry, verify

    try:
        entry = get_entry(args.id)
    except KeyError as exc:
        raise UsageError(exc.args[0])
    params = _parse_verify_params(extra)
    try:
        entry.check_assignment(params)
    except HyperlabError as exc:
        raise UsageError(str(exc))
    report = verify(entry, params, precision, numeric=args.numeric)
    _out(_report_lines(report), out)
    return 0 if report.passed else 1


def _cmd_catalogue(out) -> int:
    from .identities import catalogue

    for entry in catalogue():
        params = ",".join(entry.free_params) or "-"
        print(f"{entry.id}\t{params}\t{entry.description}", file=out)
    return 0


def _cmd_sato(out) -> int:
    from .identities import sato_suite

    reports = sato_suite()
    for r in reports:
        _out([r.line()] + [f"  {n}" for n in r.notes], out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_family(args, out) -> int:
    from .identities import family_A, family_B, verify_family

    make, start = (family_A, 1) if args.family == "A" else (family_B, 2)
    if args.alpha_max < start:
        raise UsageError(f"family {args.family} needs --alpha-max >= {start}")
    ok = True
    for alpha in range(start, args.alpha_max + 1):
        r = verify_family(make(alpha))
        ok &= r.passed
        _out([r.line()] + [f"  {n}" for n in r.notes], out)
    return 0 if ok else 1


def _tuple_str(template: str, t) -> str:
    if template == "integral":
        return f"I{IntegralParams(*t)}"
    return str(F32Params(t[:3], t[3:]))


def _cmd_search(args, out) -> int:
    lo = args.min if args.min is not None else [0 if args.template == "integral" else 1] * 5
    spec = SearchSpec(args.template, tuple(zip(lo, args.max)), tuple(args.tie), args.budget,
                      args.include_rational, max(1, args.workers))
    status = 0
    try:
        records = grid_search(spec)
    except BudgetExceeded as exc:
        records = exc.partial
        print(f"warning: {exc}; output is partial", file=sys.stderr)
        status = 1
    if args.format == "records":
        text_lines = None
    else:
        text_lines = [f"{_tuple_str(args.template, r.p)} = {format_rational(r.ratio)} * "
                      f"{_tuple_str(args.template, r.q)}  {r.classification}" for r in records]
    if args.out == "-":
        if text_lines is None:
            write_records(records, out)
        else:
            _out(text_lines, out)
    else:
        if text_lines is None:
            write_records(records, args.out)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                _out(text_lines, fh)
    return status


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        if extra and args.command != "verify":
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
        if args.command is None:
            parser.error("a subcommand is required")
        precision = args.precision if args.precision is not None else _default_precision()
        if precision < MIN_PRECISION:
            raise UsageError(f"precision must be at least {MIN_PRECISION} bits")
        cmd = args.command
        if cmd == "eval-integral":
            return _cmd_eval_integral(args, out)
        if cmd == "eval-3f2":
            return _cmd_eval_3f2(args, out, precision)
        if cmd == "orbit":
            return _cmd_orbit(args, out)
        if cmd == "related":
            return _cmd_related(args, out)
        if cmd == "rationality":
            return _cmd_rationality(args, out)
        if cmd == "verify":
            return _cmd_verify(args, extra, out, precision)
        if cmd == "catalogue":
            return _cmd_catalogue(out)
        if cmd == "sato":
            return _cmd_sato(out)
        if cmd == "family":
            return _cmd_family(args, out)
        if cmd == "search":
            return _cmd_search(args, out)
        parser.error(f"unknown command {cmd}")
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return 2
    except HyperlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def main() -> None:
    try:
        status = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe (e.g. ``| head``); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        status = 0
    sys.exit(status)
