"""Command-line interface.

Subcommands:
  indices   index comparisons for one order (text, json, csv)
  table     one row per order across a range (text, csv, json); the report
            path, optionally rendering PNG figures next to the output
  verify    run the full check suite over a range; exit 1 on any failure
  graph     export one generator graph (dot, edgelist)
  mdim      metric dimension for one order (text, json)

Exit codes: 0 success, 1 verification failure, 2 usage error. Output goes to
stdout unless --out is given. Relative --out paths resolve against
GENGRAPH_OUT_DIR when that variable is set. CSV columns for `table`, in
order: n, phi, edges, diameter, wiener, gutman, harmonic, randic, sombor,
metric_dimension. Floats are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from gengraph.generator_graph import (
    build_generator_graph,
    generator_graph_dot,
    generator_graph_edge_list,
)
from gengraph.graphs import bfs_distances
from gengraph.indices import compute_index_report
from gengraph.resolving import (
    DEFAULT_EXACT_SEARCH_CAP,
    constructive_resolving_set,
    is_resolving,
    metric_dimension_bruteforce,
    metric_dimension_formula,
    twin_lower_bound,
)
from gengraph.verify import run_verification

OUT_DIR_ENV = "GENGRAPH_OUT_DIR"

TABLE_COLUMNS = (
    "n", "phi", "edges", "diameter", "wiener", "gutman",
    "harmonic", "randic", "sombor", "metric_dimension",
)


def _fmt(value) -> str:
    """Deterministic rendering: integers verbatim, floats at 12 significant digits."""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{float(value):.12g}"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _resolve_out(path: str) -> Path:
    out = Path(path)
    base = os.environ.get(OUT_DIR_ENV)
    if base and not out.is_absolute():
        out = Path(base) / out
    return out


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        target = _resolve_out(out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)


def _order(value: str) -> int:
    try:
        n = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from exc
    if n < 2:
        raise argparse.ArgumentTypeError(f"group order must be at least 2 (trivial group excluded), got {n}")
    return n


def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from exc
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    return n


def cmd_indices(args) -> int:
    report = compute_index_report(args.n)
    if args.format == "json":
        text = json.dumps(report.as_dict(), indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "s", "index", "brute_force", "formula", "abs_difference", "agrees"])
        for c in report.comparisons:
            writer.writerow([report.n, report.s, c.name, _fmt(c.brute_force),
                             _fmt(c.formula), _fmt(c.abs_difference), _fmt(c.agrees)])
        text = buf.getvalue()
    else:
        lines = [f"n={report.n} s={report.s}"]
        header = f"{'index':<20} {'brute_force':>18} {'formula':>18} {'abs_diff':>20}  agrees"
        lines.append(header)
        for c in report.comparisons:
            lines.append(
                f"{c.name:<20} {_fmt(c.brute_force):>18} {_fmt(c.formula):>18}"
                f" {_fmt(c.abs_difference):>20}  {_fmt(c.agrees)}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _table_rows(n_min: int, n_max: int) -> list[dict]:
    rows = []
    for n in range(n_min, n_max + 1):
        gg = build_generator_graph(n)
        report = compute_index_report(n)
        dm = bfs_distances(gg.graph)
        diam = int(dm.entries.max()) if dm.connected else None
        rows.append({
            "n": n,
            "phi": gg.group.generator_count,
            "edges": gg.graph.edge_count,
            "diameter": diam,
            "wiener": report.comparison("wiener").brute_force,
            "gutman": report.comparison("gutman").brute_force,
            "harmonic": report.comparison("harmonic").brute_force,
            "randic": report.comparison("randic").brute_force,
            "sombor": report.comparison("sombor").brute_force,
            "metric_dimension": metric_dimension_formula(n),
        })
    return rows


def _render_cell(value) -> str:
    if value is None:
        return "disconnected"
    return _fmt(value)


def cmd_table(args) -> int:
    if args.n_min > args.n_max:
        raise ValueError(f"need --from <= --to, got [{args.n_min}, {args.n_max}]")
    rows = _table_rows(args.n_min, args.n_max)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in rows:
            writer.writerow([_render_cell(row[col]) for col in TABLE_COLUMNS])
        text = buf.getvalue()
    else:
        widths = {col: max(len(col), 14) for col in TABLE_COLUMNS}
        header = "".join(f"{col:>{widths[col]}}" for col in TABLE_COLUMNS)
        lines = [header]
        for row in rows:
            lines.append("".join(f"{_render_cell(row[col]):>{widths[col]}}" for col in TABLE_COLUMNS))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if args.figures:
        from gengraph.plots import render_report_figures

        if args.out is not None:
            fig_dir = _resolve_out(args.out).parent
        else:
            fig_dir = Path(os.environ.get(OUT_DIR_ENV, "."))
        written = render_report_figures(rows, fig_dir)
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    summary = run_verification(args.n_min, args.n_max, mdim_cap=args.mdim_cap)
    if args.format == "json":
        text = json.dumps(summary.as_dict(), indent=2) + "\n"
    else:
        lines = [f"verify n in [{summary.n_min}, {summary.n_max}] (mdim cap {summary.mdim_cap})"]
        for record in summary.records:
            for c in record.failures:
                lines.append(f"FAIL n={record.n} {c.name}: {c.details}")
        gaps = [c for _, c in summary.informational_notes if "exceeds" in c.details]
        lines.append(
            f"{summary.passed_checks} of {summary.counted_checks} counted checks passed, "
            f"{summary.failed_checks} failed"
        )
        lines.append(
            f"informational: all-pairs harmonic form differs from the edge sum for "
            f"{len(gaps)} of {len(summary.records)} orders (expected whenever n - phi(n) >= 2)"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if summary.failed_checks == 0 else 1


def cmd_graph(args) -> int:
    gg = build_generator_graph(args.n)
    if args.format == "edgelist":
        text = generator_graph_edge_list(gg)
    else:
        text = generator_graph_dot(gg)
    _emit(text, args.out)
    return 0


def cmd_mdim(args) -> int:
    gg = build_generator_graph(args.n)
    g = gg.graph
    n = args.n
    formula = metric_dimension_formula(n)
    payload: dict = {"n": n, "formula": formula}
    if n <= args.cap:
        result = metric_dimension_bruteforce(g, cap=args.cap)
        payload["search"] = {
            "dimension": result.dimension,
            "basis": list(result.basis),
            "basis_elements": [gg.element_of[v] for v in result.basis],
        }
        landmarks = result.basis
    else:
        witness = constructive_resolving_set(gg)
        payload["constructive_set"] = {
            "size": len(witness),
            "resolves": is_resolving(g, witness).resolves,
            "twin_lower_bound": twin_lower_bound(g),
        }
        landmarks = witness
    if args.representations:
        result = is_resolving(g, landmarks)
        payload["representations"] = {
            str(gg.element_of[u]): list(vec) for u, vec in result.representations.items()
        }
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"n={n}: metric dimension formula value {formula}"]
        if "search" in payload:
            found = payload["search"]
            lines.append(
                f"exhaustive search: dimension {found['dimension']}, "
                f"basis {tuple(found['basis'])}, elements {tuple(found['basis_elements'])}"
            )
        else:
            cs = payload["constructive_set"]
            lines.append(
                f"beyond exact-search cap: constructive set of size {cs['size']} "
                f"resolves={cs['resolves']}, twin lower bound {cs['twin_lower_bound']}"
            )
        if args.representations:
            lines.append("representations (element: distance vector):")
            for element, vec in payload["representations"].items():
                lines.append(f"  {element}: {tuple(vec)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gengraph",
        description="Generator graphs of cyclic groups: indices, structure, metric dimension.",
        epilog=f"table CSV column order: {', '.join(TABLE_COLUMNS)}. "
               f"Relative --out paths resolve against ${OUT_DIR_ENV} when set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indices", help="index comparisons for one order")
    p.add_argument("--n", type=_order, required=True, help="group order (>= 2)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("table", help="per-order report rows over a range")
    p.add_argument("--from", dest="n_min", type=_order, required=True, metavar="N_MIN")
    p.add_argument("--to", dest="n_max", type=_order, required=True, metavar="N_MAX")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--figures", action="store_true",
                   help="render PNG figures next to the output (or into $%s/cwd)" % OUT_DIR_ENV)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification suite over a range")
    p.add_argument("--from", dest="n_min", type=_order, required=True, metavar="N_MIN")
    p.add_argument("--to", dest="n_max", type=_order, required=True, metavar="N_MAX")
    p.add_argument("--mdim-cap", type=_positive, default=DEFAULT_EXACT_SEARCH_CAP,
                   help="largest order for exhaustive metric-dimension search")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export one generator graph")
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--format", choices=("dot", "edgelist"), default="dot")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("mdim", help="metric dimension for one order")
    p.add_argument("--n", type=_order, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_EXACT_SEARCH_CAP,
                   help="largest order for exhaustive search")
    p.add_argument("--representations", action="store_true",
                   help="include the representation table")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_mdim)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
