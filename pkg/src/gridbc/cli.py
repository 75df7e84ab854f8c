"""Command-line surface.

Subcommands: bc, cover, verify, solve, table, render.  Exit codes are a
stable contract: 0 success, 1 semantic failure (invalid cover, failed
self-check, incomplete solve), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any

from .construct import checkerboard_cover, optimal_cover
from .diagnostics import (
    BoundaryAnalysis,
    StaircaseClassification,
    boundary_analysis,
    classify_staircases,
    thick_edges,
)
from .grid import Cover, Grid, is_maximal, maximalize
from .jsonio import FormatError, dumps_cover, loads_elements
from .render import render_svg
from .solver import solve_exact
from .theory import bc_value, representable
from .verify import CoverReport, is_normalized, normalize_cover, verify_cover


def _write_out(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _bc_line(p: int, q: int) -> str:
    value = bc_value(p, q)
    lo, hi = min(p, q), max(p, q)
    if lo % 2 == 0:
        d = representable(lo, hi)
        if d is not None:
            return (
                f"{value} (p even, q-1 = {d.k}*{lo - 1} + 2*{d.ell}, "
                f"k={d.k} ell={d.ell})"
            )
    return f"{value} (floor branch)"


def cmd_bc(args: argparse.Namespace) -> int:
    print(_bc_line(args.p, args.q))
    return 0


def cmd_cover(args: argparse.Namespace) -> int:
    p, q = args.p, args.q
    try:
        if args.method == "checkerboard":
            cover = checkerboard_cover(p, q)
        else:
            cover = optimal_cover(p, q)
            lo, hi = min(p, q), max(p, q)
            if args.method == "optimal" and (
                lo % 2 == 1 or representable(lo, hi) is None
            ):
                print(
                    f"note: {p}x{q} is not on the pq/2-1 branch; "
                    f"emitting the checkerboard cover of size {p * q // 2}",
                    file=sys.stderr,
                )
        report = verify_cover(Grid(p, q), cover)
        if not report.valid:
            print("error: emitted cover failed self-verification", file=sys.stderr)
            return 1
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write_out(dumps_cover(cover), args.out)
    if args.out:
        print(f"wrote {len(cover)}-element cover for {p}x{q} to {args.out}")
    return 0


def _edge_list(edges) -> list[list[list[int]]]:
    return [[list(u), list(v)] for u, v in sorted(edges)]


def _analysis_dict(
    analysis: BoundaryAnalysis, classification: StaircaseClassification | None
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "boundary_stars": len(analysis.boundary_stars),
        "boundary_cycles": len(analysis.boundary_cycles),
        "fences": [
            {"size": f.size, "anchors": [list(sq.anchor) for sq in f.cycles]}
            for f in analysis.fences
        ],
        "links": [
            {"side": l.side, "length": l.length, "vertices": [list(v) for v in l.vertices]}
            for l in analysis.links
        ],
        "non_link_arcs": [[list(v) for v in arc] for arc in analysis.non_link_arcs],
        "b": {str(i): n for i, n in analysis.b.items()},
        "beta": analysis.beta,
        "c": analysis.c,
        "N": analysis.n_max,
    }
    if classification is not None:
        doc["staircases"] = {
            "n_pyramids": classification.n,
            "m_doubles": classification.m,
            "unclassified": len(classification.unclassified),
            "pyramid_links": [
                {"side": s.link.side, "length": s.length}
                for s, _ in classification.pyramids
            ],
            "double_links": [
                [
                    {"side": a.link.side, "length": a.length},
                    {"side": b.link.side, "length": b.length},
                ]
                for a, b in classification.doubles
            ],
        }
    return doc


def _report_lines(report: CoverReport) -> list[str]:
    head = "valid" if report.valid else "invalid"
    lines = [f"{head}, size {report.size}, waste {report.waste}"]
    lines.append(
        "t: " + (", ".join(f"t{i}={n}" for i, n in report.multiplicities.items()) or "-")
        + f", tau={report.tau}"
    )
    if report.uncovered:
        sample = ", ".join(f"{u}-{v}" for u, v in sorted(report.uncovered)[:5])
        lines.append(f"uncovered edges: {len(report.uncovered)} ({sample} ...)")
    for elem, reason in report.invalid_elements:
        lines.append(f"invalid element: {elem} ({reason})")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            grid, elements = loads_elements(fh.read())
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify_cover(grid, elements)
    doc: dict[str, Any] = {
        "p": grid.p,
        "q": grid.q,
        "valid": report.valid,
        "size": report.size,
        "waste": report.waste,
        "tau": report.tau,
        "t": {str(i): n for i, n in report.multiplicities.items()},
        "uncovered": _edge_list(report.uncovered),
        "invalid_elements": [str(b) for b, _ in report.invalid_elements],
    }
    lines = _report_lines(report)

    cover: Cover | None = None
    if not report.invalid_elements:
        try:
            cover = Cover.of(grid, elements)
        except ValueError:
            cover = None

    if args.normalize:
        if cover is None:
            print("error: cannot normalize a cover with invalid elements", file=sys.stderr)
            return 1
        normalized = normalize_cover(grid, maximalize(grid, cover))
        _write_out(dumps_cover(normalized), args.out)
        if args.out:
            lines.append(f"normalized cover written to {args.out}")
        cover = normalized

    if args.analyze:
        if cover is None:
            print("error: cannot analyze a cover with invalid elements", file=sys.stderr)
            return 1
        if not all(is_maximal(grid, b) for b in cover):
            print(
                "error: analysis needs maximal elements; rerun with --normalize",
                file=sys.stderr,
            )
            return 1
        analysis = boundary_analysis(grid, cover)
        classification = (
            classify_staircases(grid, cover, analysis)
            if is_normalized(grid, cover)
            else None
        )
        doc["analysis"] = _analysis_dict(analysis, classification)
        doc["thick_edges"] = _edge_list(thick_edges(grid, cover))
        lines.append(
            f"fences: {len(analysis.fences)} (b={analysis.b}), links: "
            f"{len(analysis.links)}, beta={analysis.beta}, c={analysis.c}"
        )
        if classification is None:
            lines.append("staircases: skipped (cover not normalized)")
        else:
            lines.append(
                f"staircases: n={classification.n} pyramids, m={classification.m} "
                f"doubles, unclassified={len(classification.unclassified)}"
            )

    if args.json:
        import json

        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0 if report.valid else 1


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        result = solve_exact(Grid(args.p, args.q), budget=args.budget)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if result.witness is not None and args.out:
        _write_out(dumps_cover(result.witness), args.out)
    if result.optimal:
        print(f"{result.size}")
        return 0
    print(f"incomplete [{result.lower_bound}, {result.upper_bound}]")
    return 1


def cmd_table(args: argparse.Namespace) -> int:
    rows = []
    for p in range(1, args.pmax + 1):
        cells = []
        for q in range(1, args.qmax + 1):
            lo, hi = min(p, q), max(p, q)
            starred = lo % 2 == 0 and representable(lo, hi) is not None
            cells.append(f"{bc_value(p, q)}{'*' if starred else ''}")
        rows.append(",".join(cells))
    print("\n".join(rows))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            grid, elements = loads_elements(fh.read())
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify_cover(grid, elements)
    if report.invalid_elements:
        for elem, reason in report.invalid_elements:
            print(f"error: invalid element {elem} ({reason})", file=sys.stderr)
        return 1
    svg = render_svg(Cover.of(grid, elements))
    _write_out(svg, args.svg)
    if args.svg:
        print(f"wrote {args.svg}")
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridbc",
        description="Biclique covering numbers of grid graphs: values, "
        "certified covers, verification, and structural analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bc", help="covering number and formula branch")
    s.add_argument("p", type=_positive)
    s.add_argument("q", type=_positive)
    s.set_defaults(func=cmd_bc)

    s = sub.add_parser("cover", help="emit a cover as JSON")
    s.add_argument("p", type=_positive)
    s.add_argument("q", type=_positive)
    s.add_argument("--method", choices=("auto", "checkerboard", "optimal"), default="auto")
    s.add_argument("--out", metavar="FILE")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("verify", help="verify a cover file")
    s.add_argument("file")
    s.add_argument("--normalize", action="store_true",
                   help="emit the normalized maximalized cover")
    s.add_argument("--analyze", action="store_true",
                   help="include boundary analysis and staircase classification")
    s.add_argument("--json", action="store_true", help="JSON report")
    s.add_argument("--out", metavar="FILE", help="where --normalize writes the cover")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact optimum by branch and bound")
    s.add_argument("p", type=_positive)
    s.add_argument("q", type=_positive)
    s.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    s.add_argument("--out", metavar="FILE", help="write the witness cover")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("table", help="CSV matrix of covering numbers")
    s.add_argument("pmax", type=_positive)
    s.add_argument("qmax", type=_positive)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("render", help="render a cover file to SVG")
    s.add_argument("file")
    s.add_argument("--svg", metavar="FILE", help="output path (default stdout)")
    s.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
