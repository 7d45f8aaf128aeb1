"""Command line front end: validate, eval, compare, example.

Exit codes are a stable contract: 0 success, 1 usage or expression error,
2 data validation error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .config import Config, load_config, parse_universe
from .curves import MembershipCurve, StepCurve, align_counts
from .dataset import generate_example, read_judgments
from .errors import (
    ConfigError,
    ConstraintViolation,
    ContradictoryJudgment,
    DatasetError,
    EmptyPopulation,
    InvalidHedge,
    InvalidInterval,
    LexError,
    OutOfUniverse,
    ParseError,
    RangeError,
    UniverseMismatch,
    UnknownAtom,
    UnsupportedComparison,
    VagueError,
)
from .eventology import FOR, build_matrix
from .expressions import And, Atom, Or, eval_event, eval_tnorm, eval_vague, expr_atoms, parse
from .svg import render_steps
from .tnorms import TNorm, tconorm_apply, tnorm_apply

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

_USAGE_ERRORS = (
    LexError,
    ParseError,
    UnknownAtom,
    UnsupportedComparison,
    InvalidHedge,
)
_DATA_ERRORS = (
    DatasetError,
    ContradictoryJudgment,
    OutOfUniverse,
    InvalidInterval,
    EmptyPopulation,
    UniverseMismatch,
    ConfigError,
    ConstraintViolation,
    RangeError,
)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def _fmt(value: float, precision: int) -> str:
    s = f"{value:.{precision}f}".rstrip("0").rstrip(".")
    if s in ("", "-0"):
        return "0"
    return s


def _load_config(args: argparse.Namespace) -> Config:
    cfg = load_config(args.config) if args.config else Config()
    if getattr(args, "universe", None):
        cfg = cfg.override(universe=parse_universe(args.universe))
    if getattr(args, "step", None) is not None:
        if not args.step > 0:
            raise _UsageError(f"--step must be positive, got {args.step}")
        cfg = cfg.override(step=args.step)
    return cfg


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _expression_text(args: argparse.Namespace) -> str:
    if args.expr is not None and args.expr_file is not None:
        raise _UsageError("give either --expr or --expr-file, not both")
    if args.expr is not None:
        return args.expr
    if args.expr_file is not None:
        return Path(args.expr_file).read_text(encoding="utf-8").strip()
    raise _UsageError("an expression is required (--expr or --expr-file)")


def _load_dataset(args: argparse.Namespace, cfg: Config):
    judgments = read_judgments(args.dataset, cfg.universe)
    return judgments, build_matrix(judgments, cfg.universe)


def cmd_validate(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    judgments, matrix = _load_dataset(args, cfg)
    lines = [
        f"subjects={len(matrix.subjects)} names={len(matrix.names)}",
        f"judgments={len(judgments)}",
    ]
    for name in matrix.names:
        row = matrix.event(name, FOR)
        covered = sum(1 for region in row.regions if not region.is_empty)
        per_name = sum(1 for j in judgments if j.name == name)
        lines.append(
            f"{name}: judgments={per_name} coverage={covered}/{len(matrix.subjects)}"
        )
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _semantics_curve(args: argparse.Namespace, cfg: Config, matrix, expr):
    semantics = args.semantics
    if semantics == "event":
        return eval_event(expr, matrix, cfg.hedges)
    if semantics == "vague":
        bindings = {name: matrix.vague_curve(name) for name in expr_atoms(expr)}
        return eval_vague(expr, bindings, cfg.hedges)
    if semantics.startswith("tnorm:"):
        try:
            kind = TNorm.from_name(semantics.split(":", 1)[1])
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        bindings = {
            name: matrix.event(name).membership() for name in expr_atoms(expr)
        }
        return eval_tnorm(expr, kind, bindings, cfg.hedges)
    raise _UsageError(f"unknown semantics {semantics!r}")


def cmd_eval(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    text = _expression_text(args)
    expr = parse(text)
    _, matrix = _load_dataset(args, cfg)
    curve = _semantics_curve(args, cfg, matrix, expr)

    if args.format == "svg":
        if hasattr(curve, "lower_step"):  # vague curve: draw both span bounds
            named = [
                ("t", curve.lower_step()),
                ("1-f", curve.upper_step()),
            ]
        else:
            step = curve.as_step() if isinstance(curve, MembershipCurve) else curve
            named = [(text, step)]
        svg = render_steps(
            [(label, c.breakpoints, c.values) for label, c in named],
            cfg.universe,
            width=cfg.svg_width,
            height=cfg.svg_height,
            title=text,
        )
        _write_out(svg, args.out)
        return EXIT_OK

    p = cfg.precision
    lines = []
    if hasattr(curve, "lower_step"):  # vague semantics
        lines.append("omega,t,f,lower,upper")
        for omega, value in curve.sample(cfg.step):
            low, high = value.span
            lines.append(
                f"{_fmt(omega, p)},{_fmt(value.t, p)},{_fmt(value.f, p)},"
                f"{_fmt(low, p)},{_fmt(high, p)}"
            )
    elif isinstance(curve, MembershipCurve):
        lines.append("omega,value,value_exact")
        for omega, value in curve.sample(cfg.step):
            lines.append(
                f"{_fmt(omega, p)},{_fmt(float(value), p)},"
                f"{curve.count_at(omega)}/{curve.denominator}"
            )
    else:
        lines.append("omega,value")
        for omega, value in curve.sample(cfg.step):
            lines.append(f"{_fmt(omega, p)},{_fmt(value, p)}")
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    expr = parse(_expression_text(args))
    if not isinstance(expr, (And, Or)) or not (
        isinstance(expr.left, Atom) and isinstance(expr.right, Atom)
    ):
        raise UnsupportedComparison(
            "compare needs a single 'and' or 'or' of two atoms"
        )
    if expr.left.name == expr.right.name:
        raise UnsupportedComparison("compare needs two distinct atoms")
    _, matrix = _load_dataset(args, cfg)
    left = matrix.event(expr.left.name).membership()
    right = matrix.event(expr.right.name).membership()
    combined = eval_event(expr, matrix, cfg.hedges)
    is_and = isinstance(expr, And)

    def scalar(kind: TNorm, a: float, b: float) -> float:
        return tnorm_apply(kind, a, b) if is_and else tconorm_apply(kind, a, b)

    p = cfg.precision
    size = combined.denominator
    lines = ["omega,minkowski,t_min,t_prod,t_luk,frechet_ok"]
    for omega, value in combined.sample(cfg.step):
        a = left.value_at(omega)
        b = right.value_at(omega)
        # Bounds are checked in exact rational arithmetic.
        if is_and:
            ok = max(a + b - 1, Fraction(0)) <= value <= min(a, b)
        else:
            ok = max(a, b) <= value <= min(a + b, Fraction(1))
        row = [_fmt(omega, p), _fmt(float(value), p)]
        for kind in (TNorm.MINIMUM, TNorm.PRODUCT, TNorm.LUKASIEWICZ):
            row.append(_fmt(scalar(kind, float(a), float(b)), p))
        row.append("true" if ok else "false")
        lines.append(",".join(row))

    # Sup-norm deviation computed on the exact common refinement, not the grid.
    points, (left_counts, right_counts, combined_counts) = align_counts(
        [left, right, combined]
    )
    deviations = {}
    for kind in (TNorm.MINIMUM, TNorm.PRODUCT, TNorm.LUKASIEWICZ):
        worst = 0.0
        for lc, rc, cc in zip(left_counts, right_counts, combined_counts):
            approx = scalar(kind, lc / size, rc / size)
            worst = max(worst, abs(approx - cc / size))
        deviations[kind] = worst
    lines.append(
        f"# max_dev t_min={_fmt(deviations[TNorm.MINIMUM], p)} "
        f"t_prod={_fmt(deviations[TNorm.PRODUCT], p)} "
        f"t_luk={_fmt(deviations[TNorm.LUKASIEWICZ], p)}"
    )
    _write_out("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_example(args: argparse.Namespace) -> int:
    text = generate_example(args.seed, args.subjects)
    _write_out(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="vaguesets",
        description=(
            "Aggregate per-subject interval judgments into exact membership "
            "curves, combine them subject-by-subject, and compare against "
            "t-norm semantics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, dataset: bool = True) -> None:
        if dataset:
            p.add_argument("--dataset", required=True, help="judgment CSV file")
        p.add_argument("--config", help="key = value config file")
        p.add_argument("--universe", help="universe bounds as LO:HI")
        p.add_argument("--out", help="write output here instead of stdout")

    p_validate = sub.add_parser("validate", help="check a dataset and print a summary")
    common(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_eval = sub.add_parser("eval", help="evaluate an expression over a dataset")
    common(p_eval)
    p_eval.add_argument("--expr", help="expression text")
    p_eval.add_argument("--expr-file", help="file containing the expression")
    p_eval.add_argument(
        "--semantics",
        default="event",
        help="event | vague | tnorm:min | tnorm:prod | tnorm:luk",
    )
    p_eval.add_argument("--step", type=float, help="sample grid step")
    p_eval.add_argument("--format", choices=("csv", "svg"), default="csv")
    p_eval.set_defaults(func=cmd_eval)

    p_compare = sub.add_parser(
        "compare",
        help="compare the subject-by-subject curve of x and/or y with t-norms",
    )
    common(p_compare)
    p_compare.add_argument("--expr", help="an 'and' or 'or' of two distinct atoms")
    p_compare.add_argument("--expr-file", help="file containing the expression")
    p_compare.add_argument("--step", type=float, help="sample grid step")
    p_compare.set_defaults(func=cmd_compare)

    p_example = sub.add_parser("example", help="generate a synthetic dataset")
    p_example.add_argument("--seed", type=int, default=1)
    p_example.add_argument("--subjects", type=int, default=71)
    p_example.add_argument("--out", help="write the dataset here instead of stdout")
    p_example.set_defaults(func=cmd_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DATA_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except VagueError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
