"""Command-line front end.

One subcommand per invocation; every number is printed exactly (decimal
integers, a/b fractions, or truncated decimal strings that state their
truncation direction).  Identical argv gives byte-identical output, so
the default OEIS mode is offline.

Exit codes: 0 success; 1 usage or environment error; 2 when `audit`
finds a failing VERIFIED_CLAIM or `oeis check` finds a mismatch.
Findings on AUDITED_CLAIM records are expected results and exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

from .audit import audit as audit_record
from .audit import overall_exit_status, render_json, render_text, run_all
from .exactmath import rat_str, truncate_decimal
from .expand import expand_power, parse_strategy
from .expseries import exp_convergence_report, exp_partial
from .findiff import difference_table
from .oeis import (
    OFFSETS,
    FetchMode,
    OeisError,
    compare,
    fetch_bfile,
    generate,
    serialize_bfile,
)
from .triangles import (
    parse_kind,
    render_triangle_csv,
    render_triangle_text,
    triangle_rows_json,
)

_DEFAULT_EXP_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool reserves 2 for findings."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2)


# ---------------------------------------------------------------------------
# handlers

def _cmd_triangle(args) -> int:
    try:
        kind = parse_kind(args.kind)
        if args.rows < 0:
            raise ValueError(f"--rows must be >= 0, got {args.rows}")
        if args.format == "text":
            out = render_triangle_text(kind, args.rows)
        elif args.format == "csv":
            out = render_triangle_csv(kind, args.rows)
        else:
            out = _dump(triangle_rows_json(kind, args.rows))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(out)
    return 0


def _cmd_expand(args) -> int:
    try:
        strategy = parse_strategy(args.strategy)
        result = expand_power(args.x, args.n, strategy)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        doc = {
            "x": result.x,
            "n": result.n,
            "strategy": str(result.strategy),
            "value": str(result.value),
        }
        if args.terms:
            doc["terms"] = [rat_str(t) for t in result.terms]
        print(_dump(doc))
        return 0
    lines = [
        f"x: {result.x}",
        f"n: {result.n}",
        f"strategy: {result.strategy}",
        f"value: {result.value}",
    ]
    if args.terms:
        lines.append("terms: " + ",".join(rat_str(t) for t in result.terms))
    print("\n".join(lines))
    return 0


def _cmd_difftable(args) -> int:
    try:
        table = difference_table(args.n, args.xmax, args.depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "text":
        print(table.render_text())
    elif args.format == "csv":
        print(table.render_csv())
    else:
        print(_dump({
            "power": table.n,
            "x_max": table.x_max,
            "depth": table.depth,
            "columns": [[str(v) for v in col] for col in table.columns],
        }))
    return 0


def _cmd_audit(args) -> int:
    try:
        if args.id:
            reports = (audit_record(args.id),)
        else:
            reports = run_all()
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        raise UsageError(str(msg)) from exc
    rendered = render_json(reports) if args.format == "json" else render_text(reports)
    print(rendered)
    return overall_exit_status(reports)


def _cmd_exp(args) -> int:
    try:
        if args.x < 0:
            raise ValueError(f"--x must be >= 0, got {args.x}")
        strategy = parse_strategy(args.strategy)
        if args.digits is not None:
            if args.digits < 1:
                raise ValueError(f"--digits must be >= 1, got {args.digits}")
            digits = args.digits
            n_terms = exp_convergence_report(args.x, digits)
        elif args.terms is not None:
            digits = _DEFAULT_EXP_DIGITS
            n_terms = args.terms
        else:
            digits = _DEFAULT_EXP_DIGITS
            n_terms = exp_convergence_report(args.x, digits)
        result = exp_partial(args.x, n_terms, strategy)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    dec = truncate_decimal(result.value, digits)
    if args.format == "json":
        print(_dump({
            "x": result.x,
            "terms_used": result.terms_used,
            "strategy": str(result.strategy),
            "value": rat_str(result.value),
            "decimal": {
                "text": dec.text,
                "digits": dec.digits,
                "direction": dec.direction,
            },
            "tail_bound": rat_str(result.tail_bound),
        }))
        return 0
    print("\n".join([
        f"x: {result.x}",
        f"terms_used: {result.terms_used}",
        f"strategy: {result.strategy}",
        f"value: {rat_str(result.value)}",
        f"decimal: {dec.text} (truncated {dec.direction}, {dec.digits} digits)",
        f"tail_bound: {rat_str(result.tail_bound)}",
    ]))
    return 0


def _cmd_oeis(args) -> int:
    mode = FetchMode[args.mode.upper()]
    try:
        if args.action == "check":
            report = compare(
                args.id, args.count, mode=mode,
                cache_dir=args.cache_dir, base_url=args.base_url,
            )
            if args.format == "json":
                mismatch = None
                if report.first_mismatch:
                    idx, expected, actual = report.first_mismatch
                    mismatch = {
                        "index": idx,
                        "bfile": str(expected),
                        "generated": str(actual),
                    }
                print(_dump({
                    "action": "check",
                    "id": report.sequence_id,
                    "mode": args.mode,
                    "terms_compared": report.terms_compared,
                    "ok": report.ok,
                    "first_mismatch": mismatch,
                }))
            elif report.ok:
                print(f"{report.sequence_id}: ok ({report.terms_compared} terms compared)")
            else:
                idx, expected, actual = report.first_mismatch
                print(
                    f"{report.sequence_id}: mismatch at index {idx}:"
                    f" b-file {expected}, generated {actual}"
                )
            return 0 if report.ok else 2

        if args.action == "fetch":
            b = fetch_bfile(
                args.id, mode=mode,
                cache_dir=args.cache_dir, base_url=args.base_url,
            )
            entries = b.entries[: args.count] if args.count else b.entries
            if args.format == "json":
                print(_dump({
                    "action": "fetch",
                    "id": b.sequence_id,
                    "source": b.source.value,
                    "offset": b.offset,
                    "count": len(entries),
                    "values": [str(v) for _, v in entries],
                }))
            else:
                sys.stdout.write("".join(f"{i} {v}\n" for i, v in entries))
            return 0

        # gen
        count = args.count if args.count else 50
        values = generate(args.id, count)
        offset = OFFSETS[args.id]
        if args.format == "json":
            print(_dump({
                "action": "gen",
                "id": args.id,
                "source": "generated",
                "offset": offset,
                "count": len(values),
                "values": [str(v) for v in values],
            }))
        else:
            sys.stdout.write(
                "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))
            )
        return 0
    except (OeisError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    except httpx.HTTPError as exc:
        print(f"error: {args.id}: {exc}", file=sys.stderr)
        return 1


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tripower",
        description=(
            "Exact integer and rational arithmetic for triangle"
            " coefficients, finite differences, power expansions,"
            " exponential partial sums, and the recorded-claim audit."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "triangle", help="print rows 0..N of a coefficient triangle",
    )
    p.add_argument(
        "kind",
        help="u | pascal | rascal | scaled-pascal | reduced1 | reduced2 | ones | v<M>",
    )
    p.add_argument("--rows", type=int, required=True, metavar="N",
                   help="last row index to print")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser(
        "expand", help="rebuild x^n from a row-expansion strategy",
    )
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", required=True,
                   help="strategy tag, e.g. v-row or gen-binomial:2:1")
    p.add_argument("--terms", action="store_true",
                   help="also print the individual summands")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser(
        "difftable", help="forward-difference table of x^n",
    )
    p.add_argument("--n", type=int, required=True, help="power")
    p.add_argument("--xmax", type=int, required=True, help="largest x")
    p.add_argument("--depth", type=int, required=True,
                   help="highest difference order")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(handler=_cmd_difftable)

    p = sub.add_parser(
        "audit", help="evaluate recorded claims exactly over their grids",
    )
    p.add_argument("--id", help="run a single record (default: all)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser(
        "exp", help="exact partial sums of sum x^n/n!",
    )
    p.add_argument("--x", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--digits", type=int,
                       help="pick N so the tail bound is below 10^-digits")
    group.add_argument("--terms", type=int, metavar="N",
                       help="sum terms n = 0..N")
    p.add_argument("--strategy", default="telescope-geom",
                   help="power-expansion strategy used per term")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_exp)

    p = sub.add_parser(
        "oeis", help="generate, fetch, or check the supported sequences",
    )
    p.add_argument("action", choices=("check", "fetch", "gen"))
    p.add_argument("--id", required=True, metavar="Axxxxxx")
    p.add_argument("--count", type=int,
                   help="terms to generate/compare (default: gen 50, check all)")
    p.add_argument("--mode", choices=("offline", "cached", "refresh"),
                   default="offline")
    p.add_argument("--cache-dir", help="override the b-file cache directory")
    p.add_argument("--base-url", help="override the fetch base URL")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_oeis)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"tripower {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


def main(argv=None) -> int:
    return run(argv)
