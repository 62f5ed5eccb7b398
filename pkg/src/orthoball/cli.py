"""Command line interface for the orthoscheme ball density survey."""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import survey
from .errors import OrthoBallError
from .orthoscheme import OrthoParams


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; computation problems exit 2; discrepancies 3
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="orthoball",
        description="Ball packing and covering densities of complete "
                    "hyperbolic orthoschemes.")
    parser.add_argument("--u", type=survey.order_from_text, default=None,
                        metavar="N|inf", help="first branch order")
    parser.add_argument("--v", type=survey.order_from_text, default=None,
                        metavar="N|inf", help="middle branch order")
    parser.add_argument("--w", type=survey.order_from_text, default=None,
                        metavar="N|inf", help="last branch order")
    parser.add_argument("--case", default="all", metavar="ID|all",
                        help="density case id (default: all)")
    parser.add_argument("--mode", default="both",
                        choices=("packing", "covering", "both"),
                        help="which optimization to run (default: both)")
    parser.add_argument("--table", default=None, metavar="ID|all",
                        help="regenerate reference tables and report "
                             "discrepancies")
    parser.add_argument("--sweep", default=None, metavar="SPEC",
                        help="grid spec like u=3..9,v=3..9,w=3..9,+inf; "
                             "alone it sweeps, with --find-extrema it "
                             "restricts the search grid")
    parser.add_argument("--find-extrema", action="store_true",
                        help="search the grid for the densest packing and "
                             "thinnest covering")
    parser.add_argument("--format", default="md",
                        choices=("md", "csv", "json"),
                        help="output format (default: md)")
    parser.add_argument("--precision", type=int, default=5, metavar="N",
                        help="digits in human-readable output (default: 5)")
    parser.add_argument("--tolerance", type=float,
                        default=survey.DEFAULT_TOLERANCE, metavar="T",
                        help="per-cell tolerance for table regeneration")
    parser.add_argument("--allowlist", default=None, metavar="PATH",
                        help="JSON list of known-irregular cells; the "
                             "special value 'bundled' uses the shipped list")
    return parser


def _load_allowlist(arg):
    if arg is None:
        return frozenset()
    if arg == "bundled":
        path = resources.files("orthoball") / "data" / \
            "known_discrepancies.json"
        return survey.load_allowlist(str(path))
    return survey.load_allowlist(arg)


def _emit_rows(rows: list[dict], fmt: str, precision: int,
               extrema=None, discrepancies=None):
    if fmt == "json":
        doc = {"results": rows,
               "discrepancies": discrepancies or [],
               "extrema": extrema}
        print(json.dumps(doc, indent=2))
    elif fmt == "csv":
        print(survey.rows_to_csv(rows), end="")
        for line in survey.discrepancy_lines(discrepancies or [], precision):
            print(line, file=sys.stderr)
    else:
        print(survey.rows_to_markdown(rows, precision))
        lines = survey.discrepancy_lines(discrepancies or [], precision)
        if lines:
            print()
            print("discrepancies:")
            for line in lines:
                print(line)


def _run_extrema(args) -> int:
    uv, vv, wv = survey.parse_sweep(args.sweep)
    ext = survey.find_extrema(args.case, uv, vv, wv, args.mode)
    winners = [r for r in (ext.packing, ext.covering) if r is not None]
    rows = [survey.result_row(r) for r in winners]
    extrema = {
        "packing": survey.result_row(ext.packing) if ext.packing else None,
        "covering": survey.result_row(ext.covering) if ext.covering else None,
    }
    if args.format == "md":
        p = args.precision
        for label, res in (("densest packing  ", ext.packing),
                           ("thinnest covering", ext.covering)):
            if res is None:
                continue
            row = survey.result_row(res)
            print("{} density {:.{p}f}  ({}, {}, {})  case {}  "
                  "radius {:.{p}f}  witness {}".format(
                      label, row["density"], row["u"], row["v"], row["w"],
                      row["case_id"], row["radius"], row["witness"], p=p))
    else:
        _emit_rows(rows, args.format, args.precision, extrema=extrema)
    return 0


def _run_regen(args) -> int:
    allow = _load_allowlist(args.allowlist)
    report = survey.regen_tables(args.table, args.mode, args.tolerance,
                                 allow)
    rows = [survey.result_row(r) for r in report.results]
    summary = ("cells compared: {}, beyond tolerance {:g}: {}".format(
        report.cells_total, args.tolerance, report.cells_failed))
    if args.format == "csv":
        _emit_rows(rows, "csv", args.precision,
                   discrepancies=report.discrepancies)
        print(summary, file=sys.stderr)
    elif args.format == "json":
        _emit_rows(rows, "json", args.precision,
                   discrepancies=report.discrepancies)
    else:
        _emit_rows(rows, "md", args.precision,
                   discrepancies=report.discrepancies)
        print()
        print(summary)
    return 3 if report.blocking else 0


def _run_sweep(args) -> int:
    uv, vv, wv = survey.parse_sweep(args.sweep)
    results = survey.sweep_rows(uv, vv, wv, args.case, args.mode)
    _emit_rows([survey.result_row(r) for r in results], args.format,
               args.precision)
    return 0


def _run_single(args) -> int:
    params = OrthoParams(args.u, args.v, args.w)
    results, failures = survey.run_single(params, args.case, args.mode)
    if not results:
        _, _, exc = failures[0]
        print(f"orthoball: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.case != "all":
        for case_id, mode, exc in failures:
            print(f"orthoball: {case_id} {mode}: {type(exc).__name__}: "
                  f"{exc}", file=sys.stderr)
    _emit_rows([survey.result_row(r) for r in results], args.format,
               args.precision)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    triple_given = [x is not None for x in (args.u, args.v, args.w)]
    try:
        if args.case != "all" and args.case not in survey.CASES:
            parser.error(f"unknown case id {args.case!r}")
        if args.find_extrema:
            if args.table or any(triple_given):
                parser.error("--find-extrema takes --sweep/--case/--mode "
                             "only")
            return _run_extrema(args)
        if args.table is not None:
            if args.sweep or any(triple_given):
                parser.error("--table does not combine with --sweep or "
                             "--u/--v/--w")
            return _run_regen(args)
        if args.sweep is not None:
            if any(triple_given):
                parser.error("--sweep does not combine with --u/--v/--w")
            return _run_sweep(args)
        if not all(triple_given):
            parser.error("give --u, --v and --w (or --table, --sweep, "
                         "--find-extrema)")
        return _run_single(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"orthoball: error: {exc}", file=sys.stderr)
        return 1
    except OrthoBallError as exc:
        print(f"orthoball: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
