"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error. Output is
plain text only, so GODDARD_NO_COLOR has nothing to switch off.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

from goddard.families import (
    Family,
    GoddardSpec,
    bivariate_agreement,
    closed_form,
    closed_to_series,
    direct_series,
    verify_theorem,
)
from goddard.numeric import sample, sample_grid

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_ORDER = 41
DEFAULT_K_MAX = 12
DEFAULT_TERMS = 30
BIVARIATE_X_CAP = 8

TABLE_HEADER = ["y", "partial_sum", "closed_form", "abs_error", "tail_bound", "bound_valid", "terms"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite, got {text!r}")
    return value


def fmt_float(x: float) -> str:
    return format(x, ".17g")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="goddard",
        description="Exact verification and numerical evaluation of the Goddard series S_k, A_k, B_k.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt_choices, fmt_default):
        p.add_argument("--format", choices=fmt_choices, default=fmt_default)
        p.add_argument("--out", metavar="PATH", help="write the payload to PATH instead of stdout")

    def family_k(p):
        p.add_argument("--family", choices=[f.value for f in Family], default="S")
        p.add_argument("--k", type=_nonneg_int, default=0)

    p = sub.add_parser("verify", help="compare direct and closed-form expansions exactly")
    p.add_argument("--k-max", type=_nonneg_int, default=DEFAULT_K_MAX)
    p.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER)
    common(p, ["json"], "json")

    p = sub.add_parser("coeffs", help="print exact coefficients of one series")
    family_k(p)
    p.add_argument("--order", type=_nonneg_int, default=DEFAULT_ORDER)
    common(p, ["json", "csv"], "json")

    p = sub.add_parser("eval", help="evaluate one series at a point")
    family_k(p)
    p.add_argument("--y", type=_finite_float, required=True)
    p.add_argument("--terms", type=_pos_int, default=DEFAULT_TERMS)
    common(p, ["json"], "json")

    p = sub.add_parser(
        "table",
        help="tabulate partial sums against closed forms",
        description="Sample steps+1 evenly spaced points of [from, to] (steps counts intervals).",
    )
    family_k(p)
    p.add_argument("--from", dest="y_from", type=_finite_float, required=True)
    p.add_argument("--to", dest="y_to", type=_finite_float, required=True)
    p.add_argument("--steps", type=_pos_int, default=10, help="number of intervals; rows = steps + 1")
    p.add_argument("--terms", type=_pos_int, default=DEFAULT_TERMS)
    common(p, ["csv", "json"], "csv")
    return parser


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL).writerows(rows)
    return buf.getvalue()


def _json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    report = verify_theorem(args.k_max, args.order)
    bivariate = bivariate_agreement(min(args.k_max, BIVARIATE_X_CAP), args.order)
    payload = report.to_json()
    payload["bivariate_match"] = bivariate
    code = EXIT_OK if report.all_match and bivariate else EXIT_MISMATCH
    return _json(payload), code


def cmd_coeffs(args) -> tuple[str, int]:
    spec = GoddardSpec(Family(args.family), args.k)
    direct = direct_series(spec, args.order)
    closed = closed_to_series(closed_form(spec), args.order)
    match = direct == closed
    if args.format == "csv":
        rows = [["power", "direct", "closed"]]
        rows += [[i, d, c] for i, (d, c) in enumerate(zip(direct.rendered(), closed.rendered()))]
        text = _csv(rows)
    else:
        text = _json(
            {
                "family": spec.family.value,
                "k": spec.k,
                "order": args.order,
                "direct": direct.rendered(),
                "closed": closed.rendered(),
                "match": match,
            }
        )
    return text, EXIT_OK if match else EXIT_MISMATCH


def cmd_eval(args) -> tuple[str, int]:
    spec = GoddardSpec(Family(args.family), args.k)
    return _json(sample(spec, args.y, args.terms).to_json()), EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    if args.y_from > args.y_to:
        raise _Usage(f"--from {args.y_from} exceeds --to {args.y_to}")
    spec = GoddardSpec(Family(args.family), args.k)
    samples = sample_grid(spec, args.y_from, args.y_to, args.steps, args.terms)
    if args.format == "json":
        return _json([s.to_json() for s in samples]), EXIT_OK
    rows = [TABLE_HEADER]
    for s in samples:
        rows.append(
            [
                fmt_float(s.y),
                fmt_float(s.partial_sum),
                fmt_float(s.closed_value),
                fmt_float(s.abs_error),
                fmt_float(s.tail_bound),
                "true" if s.bound_valid else "false",
                s.terms_used,
            ]
        )
    return _csv(rows), EXIT_OK


class _Usage(Exception):
    pass


COMMANDS = {"verify": cmd_verify, "coeffs": cmd_coeffs, "eval": cmd_eval, "table": cmd_table}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, code = COMMANDS[args.command](args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"goddard: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"goddard: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
