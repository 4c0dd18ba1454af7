"""Command-line frontend.

Four subcommands -- char, table, channels, gap -- emit flat records as
CSV (default) or JSON, to stdout or to --out.  Numbers are rendered with
12 significant digits in both formats so the two emitters round-trip.
Exit codes: 0 on success, 1 on solver failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from .criticality import critical_table, log_gap, pairing_gap
from .errors import SolverError
from .mathieu import DEFAULT_TOL, SymmetryClass, char_value, parse_label
from .model import classify_channels, count_open_channels, to_mathieu
from .oracle import oracle_char_value


def _format_value(value) -> str:
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.12g}"
    return str(value)


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_value(row[c]) for c in columns])
    return buf.getvalue()


def _json_text(columns, rows) -> str:
    # Hand-rolled so numeric fields carry exactly the same 12-digit
    # rendering as the CSV cells; non-finite floats become null.
    rendered = []
    for row in rows:
        fields = []
        for c in columns:
            value = row[c]
            if isinstance(value, float):
                text = _format_value(value) if math.isfinite(value) else "null"
            elif isinstance(value, int):
                text = str(value)
            else:
                text = json.dumps(value)
            fields.append(f"{json.dumps(c)}: {text}")
        rendered.append("  {" + ", ".join(fields) + "}")
    return "[\n" + ",\n".join(rendered) + "\n]\n"


def _add_output_args(parser):
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
    parser.add_argument("--out", metavar="PATH",
                        help="write to this file instead of stdout")


def _resolve_mode(args) -> tuple[SymmetryClass, int]:
    if args.label is not None:
        if args.family is not None or args.order is not None:
            raise ValueError("give either --label or --class/--order, not both")
        return parse_label(args.label)
    if args.family is None or args.order is None:
        raise ValueError("give --class together with --order, or a --label")
    return SymmetryClass.from_name(args.family), args.order


def _cmd_char(args):
    symmetry, order = _resolve_mode(args)
    q = to_mathieu(args.xi) if args.xi is not None else args.q
    cv = char_value(symmetry, order, q, args.tol)
    row = {
        "label": cv.label,
        "class": symmetry.cli_name,
        "order": order,
        "q": q,
        "xi": q / 4.0,
        "value": cv.value,
        "truncation": cv.truncation,
    }
    columns = ["label", "class", "order", "q", "xi", "value", "truncation"]
    if args.oracle:
        reference = oracle_char_value(symmetry, order, q, args.tol)
        row["oracle_value"] = reference
        row["discrepancy"] = cv.value - reference
        columns += ["oracle_value", "discrepancy"]
    return columns, [row]


def _cmd_table(args):
    if args.max_pairs < 1:
        raise ValueError("--max-pairs must be >= 1")
    points = critical_table(args.max_pairs, args.tol)
    columns = ["eigenvalue_label", "class", "order", "q_c", "xi_c", "residual"]
    rows = [
        {
            "eigenvalue_label": p.label,
            "class": p.symmetry.cli_name,
            "order": p.order,
            "q_c": p.q_c,
            "xi_c": p.xi_c,
            "residual": p.residual,
        }
        for p in points
    ]
    return columns, rows


def _cmd_channels(args):
    classified = classify_channels(args.xi, args.max_order, args.tol)
    count = count_open_channels(args.xi, args.max_order, args.tol)
    columns = ["xi", "max_order", "count", "label", "class", "order",
               "e_theta", "alpha", "regime"]
    rows = [
        {
            "xi": args.xi,
            "max_order": args.max_order,
            "count": count,
            "label": channel.label,
            "class": channel.symmetry.cli_name,
            "order": channel.order,
            "e_theta": channel.e_theta,
            "alpha": radial.alpha,
            "regime": radial.regime.value,
        }
        for channel, radial in classified
    ]
    return columns, rows


def _parse_q_list(text: str) -> list[float]:
    values = []
    for piece in text.split(","):
        piece = piece.strip()
        if piece:
            values.append(float(piece))
    if not values:
        raise ValueError("--q must list at least one value")
    if any(q <= 0 for q in values):
        raise ValueError("all q values must be > 0")
    return values


def _cmd_gap(args):
    if args.m < 0:
        raise ValueError("--m must be >= 0")
    columns = ["m", "q", "gap", "log_gap"]
    rows = []
    for q in _parse_q_list(args.q):
        gap = pairing_gap(args.m, q, args.tol)
        rows.append({"m": args.m, "q": q, "gap": gap.gap, "log_gap": log_gap(gap)})
    return columns, rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadspec",
        description="Angular Mathieu spectrum and critical strengths of a "
                    "charged particle in a planar electric-quadrupole field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    class_names = [member.cli_name for member in SymmetryClass]

    p_char = sub.add_parser("char", help="one characteristic value a_m(q) / b_m(q)")
    p_char.add_argument("--class", dest="family", choices=class_names,
                        help="symmetry family (with --order)")
    p_char.add_argument("--order", type=int, help="order m (with --class)")
    p_char.add_argument("--label", help="shorthand such as a0 or b3")
    strength = p_char.add_mutually_exclusive_group(required=True)
    strength.add_argument("--q", type=float, help="Mathieu strength q >= 0")
    strength.add_argument("--xi", type=float, help="quadrupole strength xi (q = 4 xi)")
    p_char.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_char.add_argument("--oracle", action="store_true",
                        help="also report the shooting-oracle value and discrepancy")
    _add_output_args(p_char)
    p_char.set_defaults(handler=_cmd_char)

    p_table = sub.add_parser(
        "table", help="critical strengths xi_c where curves cross zero")
    p_table.add_argument("--max-pairs", type=int, default=5,
                        help="number of (a_m, b_m+1) pairs (default 5)")
    p_table.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output_args(p_table)
    p_table.set_defaults(handler=_cmd_table)

    p_channels = sub.add_parser(
        "channels", help="per-channel radial classification at one strength")
    p_channels.add_argument("--xi", type=float, required=True,
                            help="quadrupole strength xi >= 0")
    p_channels.add_argument("--max-order", type=int, default=12)
    p_channels.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output_args(p_channels)
    p_channels.set_defaults(handler=_cmd_channels)

    p_gap = sub.add_parser(
        "gap", help="pairing gap b_m+1(q) - a_m(q) at one or more q")
    p_gap.add_argument("--m", type=int, required=True, help="pair index m >= 0")
    p_gap.add_argument("--q", required=True,
                       help="comma-separated list of strengths, all > 0")
    p_gap.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output_args(p_gap)
    p_gap.set_defaults(handler=_cmd_gap)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        columns, rows = args.handler(args)
    except SolverError as exc:
        print(f"quadspec: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))  # exits with code 2
    text = _csv_text(columns, rows) if args.format == "csv" else _json_text(columns, rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
