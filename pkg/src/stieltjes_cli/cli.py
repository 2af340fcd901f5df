from __future__ import annotations

import argparse
import sys
import traceback
from fractions import Fraction
from itertools import combinations
from math import gcd
from pathlib import Path
from typing import Callable, Optional

from mpmath import mp

from .config import Settings, load_settings
from .identities import SuiteGrid, UnknownIdentityError, run_suite, summarize
from .oracle import StieltjesResult, stieltjes_cauchy, stieltjes_hasse
from .precision import PrecisionContext, RationalArg, StieltjesError, make_context
from .rational import stieltjes_rational_bell, stieltjes_rational_cck, stieltjes_rational_split
from .records import FORMATS, OutputRecord, RecordKind, RecordWriter, format_decimal
from .runlog import append_run_log

RATIONAL_METHODS = ("bell", "cck", "split", "hasse", "cauchy")
DECIMAL_METHODS = ("hasse", "cauchy")

Evaluator = Callable[[int, PrecisionContext], StieltjesResult]


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stieltjes", description="Generalized Stieltjes constants at rational arguments"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.version}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--digits",
        type=int,
        default=settings.default_digits,
        help=f"Target decimal digits (default {settings.default_digits})",
    )
    common.add_argument("--format", choices=FORMATS, default="plain", help="Output format")
    common.add_argument("--log", help="Append a run log to this file")

    subcommands = parser.add_subparsers(dest="command")

    compute_parser = subcommands.add_parser(
        "compute", parents=[common], help="Compute one generalized Stieltjes constant"
    )
    compute_parser.add_argument("--n", type=int, required=True, help="Stieltjes index m")
    compute_parser.add_argument("--p", type=int, help="Numerator of p/q")
    compute_parser.add_argument("--q", type=int, help="Denominator of p/q")
    compute_parser.add_argument("--x", help="Decimal argument x > 0")
    compute_parser.add_argument(
        "--method",
        choices=RATIONAL_METHODS + ("all",),
        help="Evaluation path (default bell for p/q, cauchy for x)",
    )
    compute_parser.add_argument(
        "--j-max",
        type=int,
        default=settings.hasse_j_max,
        help="Hasse series truncation",
    )

    table_parser = subcommands.add_parser(
        "table", parents=[common], help="Tabulate gamma_m(p/q) for every reduced p/q"
    )
    table_parser.add_argument("--n-max", type=int, required=True, help="Largest index m")
    table_parser.add_argument("--q", type=int, required=True, help="Denominator q")
    table_parser.add_argument(
        "--method", choices=RATIONAL_METHODS, default="bell", help="Evaluation path"
    )
    table_parser.add_argument(
        "--j-max", type=int, default=settings.hasse_j_max, help="Hasse series truncation"
    )

    verify_parser = subcommands.add_parser(
        "verify", parents=[common], help="Run the identity verification suite"
    )
    verify_parser.add_argument("--suite", default="all", help="Identity name or glob pattern")
    verify_parser.add_argument("--q-max", type=int, default=5, help="Largest q in rational grids")
    verify_parser.add_argument(
        "--terms",
        type=int,
        default=settings.ramanujan_terms,
        help="Partial-sum length for ramanujan-cos-sum",
    )
    verify_parser.add_argument(
        "--j-max", type=int, default=settings.hasse_j_max, help="Hasse series truncation"
    )

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.digits < 1:
        parser.error("--digits must be >= 1")
    if args.command == "compute":
        rational = args.p is not None or args.q is not None
        if rational == (args.x is not None):
            parser.error("give either --p and --q or --x")
        if rational:
            if args.p is None or args.q is None:
                parser.error("--p and --q must be given together")
            if not 1 <= args.p <= args.q:
                parser.error("need 1 <= p <= q")
        else:
            try:
                x = Fraction(args.x)
            except ValueError:
                parser.error(f"--x must be a decimal number, got {args.x!r}")
            if x <= 0:
                parser.error("--x must be > 0")
            if args.method not in (None, "all") + DECIMAL_METHODS:
                parser.error(f"--method {args.method} needs a rational argument --p/--q")
        if args.n < 0:
            parser.error("--n must be >= 0")
    if args.command == "table":
        if args.n_max < 0 or args.q < 1:
            parser.error("need --n-max >= 0 and --q >= 1")
    if args.command == "verify":
        if args.q_max < 2:
            parser.error("--q-max must be >= 2")


def _evaluators(x: Fraction, arg: Optional[RationalArg], j_max: int) -> dict[str, Evaluator]:
    evaluators: dict[str, Evaluator] = {
        "hasse": lambda m, ctx: stieltjes_hasse(m, x, ctx, j_max),
        "cauchy": lambda m, ctx: stieltjes_cauchy(m, x, ctx),
    }
    if arg is not None:
        evaluators["bell"] = lambda m, ctx: stieltjes_rational_bell(m, arg, ctx)
        evaluators["cck"] = lambda m, ctx: stieltjes_rational_cck(m, arg, ctx)
        evaluators["split"] = lambda m, ctx: stieltjes_rational_split(m, arg, ctx)
    return evaluators


def cmd_compute(args: argparse.Namespace, log_path: Optional[Path]) -> int:
    ctx = make_context(args.digits)
    if args.x is not None:
        x = Fraction(args.x)
        arg, label, p, q = None, args.x, None, None
        default_method = "cauchy"
    else:
        arg = RationalArg(args.p, args.q)
        x, label, p, q = arg.fraction, str(arg), arg.p, arg.q
        default_method = "bell"
    evaluators = _evaluators(x, arg, args.j_max)
    method = args.method or default_method
    if method == "all":
        names = [name for name in RATIONAL_METHODS if name in evaluators]
    else:
        names = [method]

    writer = RecordWriter(args.format, sys.stdout)
    results = []
    for name in names:
        result = evaluators[name](args.n, ctx)
        results.append(result)
        writer.write(
            OutputRecord.from_result(
                result, kind=RecordKind.VALUE, digits=args.digits, n=args.n, p=p, q=q, x=label
            )
        )
    if len(results) > 1:
        with ctx.workdps():
            deviation = max(abs(a.value - b.value) for a, b in combinations(results, 2))
        writer.write(
            OutputRecord(
                kind=RecordKind.SUMMARY,
                name="max-deviation",
                n=args.n,
                p=p,
                q=q,
                x=label,
                method="all",
                digits=args.digits,
                value=format_decimal(deviation, 3),
            )
        )
    append_run_log(
        log_path, "compute", n=args.n, x=label, method=method, digits=args.digits
    )
    return 0


def cmd_table(args: argparse.Namespace, log_path: Optional[Path]) -> int:
    ctx = make_context(args.digits)
    writer = RecordWriter(args.format, sys.stdout)
    numerators = [p for p in range(1, args.q) if gcd(p, args.q) == 1] + [args.q]
    rows = 0
    for m in range(args.n_max + 1):
        for p in numerators:
            arg = RationalArg(p, args.q)
            evaluator = _evaluators(arg.fraction, arg, args.j_max)[args.method]
            result = evaluator(m, ctx)
            writer.write(
                OutputRecord.from_result(
                    result,
                    kind=RecordKind.TABLE_ROW,
                    digits=args.digits,
                    n=m,
                    p=p,
                    q=args.q,
                    x=str(arg),
                )
            )
            rows += 1
    append_run_log(
        log_path, "table", n_max=args.n_max, q=args.q, method=args.method, rows=rows
    )
    return 0


def cmd_verify(args: argparse.Namespace, log_path: Optional[Path]) -> int:
    ctx = make_context(args.digits)
    grid = SuiteGrid(q_max=args.q_max, ramanujan_terms=args.terms, j_max=args.j_max)
    reports = run_suite(args.suite, grid, ctx)
    summary = summarize(reports)
    writer = RecordWriter(args.format, sys.stdout)
    for report in reports:
        writer.write(OutputRecord.from_report(report, args.digits))
    writer.write(
        OutputRecord(
            kind=RecordKind.SUMMARY,
            name="verify",
            digits=args.digits,
            passed=summary.ok,
            params=f"total={summary.total},passed={summary.passed},failed={len(summary.failed)}",
        )
    )
    for report in summary.failed:
        with ctx.workdps():
            residual = mp.nstr(report.residual, 3)
        append_run_log(
            log_path, "identity", name=report.name, params=report.params_text, residual=residual
        )
    append_run_log(
        log_path,
        "verify",
        suite=args.suite,
        total=summary.total,
        passed=summary.passed,
        failed=len(summary.failed),
    )
    return 0 if summary.ok else 1


COMMANDS: dict[str, Callable[[argparse.Namespace, Optional[Path]], int]] = {
    "compute": cmd_compute,
    "table": cmd_table,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    settings = load_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return 0
        _validate(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    log_path = Path(args.log).expanduser() if args.log else settings.run_log
    try:
        return COMMANDS[args.command](args, log_path)
    except UnknownIdentityError as exc:
        append_run_log(log_path, "failure", command=args.command, error=str(exc))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StieltjesError as exc:
        append_run_log(log_path, "failure", command=args.command, error=str(exc))
        if settings.debug_mode:
            traceback.print_exc()
        print(f"error: {exc}", file=sys.stderr)
        return 3


__all__ = ["build_parser", "cmd_compute", "cmd_table", "cmd_verify", "main"]
