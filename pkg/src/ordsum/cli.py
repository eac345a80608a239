"""``ordsum`` command-line interface.

Exit status: 0 when everything passed, 1 when a verification failed and 2
for configuration errors or unmet theorem hypotheses.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

import numpy as np

from .analysis import AnalysisBudget, classify_negation, grid
from .config import ConfigError, loads, parse_expr, parse_family
from .connectives import Connective, ConnectiveError, Kind
from .natural_negation import SupInfOracleConfig, known_natural_negation, natural_negation
from .ordinal_sum import OrdinalSum
from .verification import (
    FAIL,
    PASS,
    TheoremId,
    VerificationError,
    falsify,
    run_suite,
    suite_csv,
    verify,
)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
# binary tables default to a coarser grid than unary ones
BINARY_TABLE_POINTS = 101


class UsageError(Exception):
    pass


def _grid_points(value: str) -> int:
    n = int(value)
    if n < 3:
        raise argparse.ArgumentTypeError("grid needs at least 3 points")
    return n


def _positive(value: str) -> float:
    v = float(value)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _common(p: argparse.ArgumentParser, config: bool = True):
    if config:
        p.add_argument("config", nargs="?", help="JSON config file ('-' for stdin)")
        p.add_argument("--expr", help="inline JSON config instead of a file")
    p.add_argument("--grid", type=_grid_points, help="grid points (default 1001)")
    p.add_argument("--tol", type=_positive, help="equality tolerance for exact forms (default 1e-9)")
    p.add_argument("--bisect-tol", type=_positive,
                   help="equality tolerance when bisection participates (default 1e-6)")
    p.add_argument("--nat-tol", type=_positive, help="natural-negation oracle tolerance (default 1e-8)")
    p.add_argument("--nat-steps", type=int, help="natural-negation oracle bisection steps (default 60)")
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression at points")
    _common(p)
    p.add_argument("--at", action="append", required=True, metavar="X[,Y]",
                   help="evaluation point; repeat for several")

    p = sub.add_parser("classify", help="classify a negation")
    _common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("natural", help="natural negation of a t-norm, t-conorm or implication, as a table")
    _common(p)
    p.add_argument("--closed-form", action="store_true",
                   help="use catalog and ordinal-sum closed forms where available")

    p = sub.add_parser("sum", help="ordinal sum of a summand family, as a table")
    _common(p)
    p.add_argument("--variant", choices=("rescher", "left"),
                   help="implication variant (required for implication families)")

    p = sub.add_parser("table", help="sample any expression on the grid")
    _common(p)

    p = sub.add_parser("verify", help="check one result on one family")
    p.add_argument("theorem", choices=[t.value for t in TheoremId])
    _common(p)
    p.add_argument("--falsify", action="store_true", help="run the converse direction instead")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("suite", help="run the randomized battery and write its CSV")
    _common(p, config=False)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    return parser


def _budget(args) -> AnalysisBudget:
    kw = {}
    if args.grid:
        kw["grid_points"] = args.grid
    if args.tol:
        kw["equality_tol"] = args.tol
    if args.bisect_tol:
        kw["bisection_tol"] = args.bisect_tol
    return AnalysisBudget(**kw)


def _oracle(args) -> SupInfOracleConfig:
    d = SupInfOracleConfig()
    try:
        return SupInfOracleConfig(args.nat_tol or d.tolerance, args.nat_steps or d.max_bisection_steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _document(args):
    if args.expr is not None and args.config is not None:
        raise UsageError("give either a config file or --expr, not both")
    if args.expr is not None:
        return loads(args.expr)
    if args.config is None:
        raise UsageError("a config file or --expr is required")
    if args.config == "-":
        return loads(sys.stdin.read())
    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.config}: {exc.strerror}") from None
    return loads(text)


def _number(v: float) -> str:
    return format(float(v), ".17g")


def _table(expr: Connective, points: int | None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if expr.kind.arity == 1:
        x = grid(points or AnalysisBudget().grid_points)
        v = expr._eval(x.copy())
        w.writerow(("x", "value"))
        w.writerows((_number(a), _number(b)) for a, b in zip(x, v))
    else:
        g = grid(points or BINARY_TABLE_POINTS)
        X, Y = (u.ravel() for u in np.meshgrid(g, g, indexing="ij"))
        v = expr._eval(X.copy(), Y.copy())
        w.writerow(("x", "y", "value"))
        w.writerows((_number(a), _number(b), _number(c)) for a, b, c in zip(X, Y, v))
    return buf.getvalue()


def _emit(args, text: str):
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def _points(specs: list[str], arity: int):
    pts = []
    for spec in specs:
        try:
            coords = tuple(float(u) for u in spec.split(","))
        except ValueError:
            raise UsageError(f"bad point {spec!r}") from None
        if len(coords) != arity:
            raise UsageError(f"point {spec!r} has {len(coords)} coordinate(s), expected {arity}")
        pts.append(coords)
    return pts


def cmd_eval(args) -> int:
    expr = parse_expr(_document(args))
    lines = []
    for p in _points(args.at, expr.kind.arity):
        lines.append(format(expr(*p), ".15g"))
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_classify(args) -> int:
    expr = parse_expr(_document(args))
    if expr.kind is not Kind.NEGATION:
        raise UsageError(f"classify needs a negation, got a {expr.kind.value}")
    report = classify_negation(expr, _budget(args))
    if args.format == "json":
        _emit(args, json.dumps(report.to_records(), indent=2) + "\n")
    else:
        _emit(args, report.render() + "\n")
    return EXIT_OK


def cmd_natural(args) -> int:
    expr = parse_expr(_document(args))
    cfg = _oracle(args)
    nat = known_natural_negation(expr, cfg) if args.closed_form else natural_negation(expr, cfg)
    _emit(args, _table(nat, args.grid))
    return EXIT_OK


def cmd_sum(args) -> int:
    doc = _document(args)
    family = parse_family(doc)
    if family.kind is Kind.IMPLICATION:
        if args.variant is None:
            raise UsageError("implication families need --variant rescher|left")
        expr = OrdinalSum(family, f"implication_{args.variant}")
    else:
        if args.variant is not None:
            raise UsageError("--variant applies to implication families only")
        expr = OrdinalSum(family, family.kind.value)
    _emit(args, _table(expr, args.grid))
    return EXIT_OK


def cmd_table(args) -> int:
    _emit(args, _table(parse_expr(_document(args)), args.grid))
    return EXIT_OK


def cmd_verify(args) -> int:
    family = parse_family(_document(args))
    budget = _budget(args)
    if args.falsify:
        report = falsify(args.theorem, family, budget)
    else:
        report = verify(args.theorem, family, budget, _oracle(args))
    if args.format == "json":
        doc = {
            "theorem": report.theorem, "family_digest": report.family_digest,
            "verdict": report.verdict, "max_deviation": report.max_deviation,
            "witnesses": [[repr(p), repr(e), repr(o)] for p, e, o in report.witnesses],
            "notes": report.notes,
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(args, report.render() + "\n")
    if report.verdict == PASS:
        return EXIT_OK
    return EXIT_FAIL if report.verdict == FAIL else EXIT_CONFIG


def cmd_suite(args) -> int:
    start = time.monotonic()

    def progress(criterion, rows):
        if not args.quiet:
            print(f"[{time.monotonic() - start:6.1f}s] {len(rows)} rows", file=sys.stderr)

    rows = run_suite(args.seed, _budget(args), _oracle(args), progress=progress)
    _emit(args, suite_csv(rows))
    failed = [r for r in rows if not r.report.passed]
    if not args.quiet:
        print(f"{len(rows) - len(failed)}/{len(rows)} passed", file=sys.stderr)
        seen = set()
        for r in failed:
            if r.check not in seen:
                seen.add(r.check)
                count = sum(1 for f in failed if f.check == r.check)
                print(f"{r.check}: {count} not passed; first (seed {r.seed}):\n{r.report.render()}",
                      file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "classify": cmd_classify,
    "natural": cmd_natural,
    "sum": cmd_sum,
    "table": cmd_table,
    "verify": cmd_verify,
    "suite": cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ConfigError, ConnectiveError, VerificationError) as exc:
        print(f"ordsum: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
