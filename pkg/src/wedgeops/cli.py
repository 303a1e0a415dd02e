"""Command line surface: summary tables, contraction diagnostics, clustering
ECDF data, and the invariant verification suite.

All tabular output is CSV with a header row, printed to stdout and optionally
mirrored into --out. Exit codes: 0 success, 1 input error, 2 violated
invariant or failed numerical contract.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    ConvergenceError,
    EdgeListParseError,
    InvariantViolation,
    PartitionAssignmentError,
    ResourceLimitError,
)
from .graph import Graph, load_edge_list
from .matio import dense_csv
from .partition import (
    BLOCK_EGO,
    BLOCK_TRAVERSING_SINGLETON,
    Partition,
    core_dominating_set,
    ego_traversing_partition,
    load_partition,
    transfer_diagnostics,
)
from .verify import graph_checks, partition_checks, random_suite
from .wedge import local_clustering, wedge_summary

__all__ = ["AnalysisRow", "ContractionRow", "main"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2

_INPUT_ERRORS = (
    OSError,
    EdgeListParseError,
    PartitionAssignmentError,
    ResourceLimitError,
    ValueError,
)


@dataclass(frozen=True)
class AnalysisRow:
    """One summary-table row; dom is the greedy dominating-set size and is
    algorithm-dependent (greedy max-coverage, smallest-id ties)."""

    name: str
    n: int
    m: int
    triangles: int
    m2: int
    omega: int
    Vc: int
    Vt: int
    dom: int

    HEADER = "name,n,m,triangles,m2,omega,Vc,Vt,dom"

    def csv_row(self) -> str:
        return (
            f"{self.name},{self.n},{self.m},{self.triangles},{self.m2},"
            f"{self.omega},{self.Vc},{self.Vt},{self.dom}"
        )


@dataclass(frozen=True)
class ContractionRow:
    """One contraction-table row; ratio depends on the same greedy choices as dom."""

    name: str
    blocks: int
    egoblocks: int
    TR_singletons: int
    B_edges: float
    B_internal: float
    ratio: float

    HEADER = "name,blocks,egoblocks,TR_singletons,B_edges,B_internal,ratio"

    def csv_row(self) -> str:
        return (
            f"{self.name},{self.blocks},{self.egoblocks},{self.TR_singletons},"
            f"{_num(self.B_edges)},{_num(self.B_internal)},{self.ratio:.6g}"
        )


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.10g}"


def _stem(path: str) -> str:
    return Path(path).stem


def _load(path: str):
    res = load_edge_list(path)
    return res.graph, res.labels


def _emit(text: str, out_dir: Path | None, filename: str) -> None:
    sys.stdout.write(text)
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / filename).write_text(text, encoding="utf-8")


def analysis_row(name: str, g: Graph) -> AnalysisRow:
    s = wedge_summary(g)
    dom = len(core_dominating_set(g))
    return AnalysisRow(
        name=name, n=s.n, m=s.m, triangles=s.tau, m2=s.m2, omega=s.omega,
        Vc=s.n_clustered, Vt=s.n_traversing, dom=dom,
    )


def contraction_row(name: str, g: Graph, p: Partition, *, built_here: bool) -> ContractionRow:
    d = transfer_diagnostics(g, p)
    blocks, egoblocks, singles = d.block_counts
    if built_here and blocks != egoblocks + singles:
        raise InvariantViolation("ego contraction produced a block of unknown kind")
    return ContractionRow(
        name=name, blocks=blocks, egoblocks=egoblocks, TR_singletons=singles,
        B_edges=d.b_edges, B_internal=d.b_internal, ratio=d.rho,
    )


def cmd_analyze(args) -> int:
    code = EXIT_OK
    lines = [AnalysisRow.HEADER]
    for path in args.inputs:
        try:
            g, _ = _load(path)
            lines.append(analysis_row(_stem(path), g).csv_row())
        except InvariantViolation as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = EXIT_INVARIANT
        except _INPUT_ERRORS as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = max(code, EXIT_INPUT)
    _emit("\n".join(lines) + "\n", args.out, "analysis.csv")
    return code


def cmd_contract(args) -> int:
    if args.partition is not None and len(args.inputs) != 1:
        print("--partition requires exactly one input graph", file=sys.stderr)
        return EXIT_INPUT
    code = EXIT_OK
    lines = [ContractionRow.HEADER]
    for path in args.inputs:
        name = _stem(path)
        try:
            g, labels = _load(path)
            if args.partition is not None:
                p = load_partition(args.partition, tuple(labels))
                built = False
            else:
                p = ego_traversing_partition(g, core_dominating_set(g))
                built = True
            lines.append(contraction_row(name, g, p, built_here=built).csv_row())
            if args.emit_matrices:
                d = transfer_diagnostics(g, p)
                out = args.out if args.out is not None else Path(".")
                out.mkdir(parents=True, exist_ok=True)
                (out / f"{name}.B.csv").write_text(dense_csv(d.B), encoding="utf-8")
                (out / f"{name}.M.csv").write_text(dense_csv(d.M), encoding="utf-8")
                (out / f"{name}.overcount.csv").write_text(
                    dense_csv(d.overcount), encoding="utf-8"
                )
        except InvariantViolation as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = EXIT_INVARIANT
        except _INPUT_ERRORS as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = max(code, EXIT_INPUT)
    _emit("\n".join(lines) + "\n", args.out, "contraction.csv")
    return code


def _ecdf_points(g: Graph) -> list[tuple[float, float]]:
    """Unique sorted clustering values with cumulative fractions."""
    values, _ = local_clustering(g)
    pts = []
    n = g.n
    seen = 0
    for x in sorted(values):
        seen += 1
        if pts and pts[-1][0] == float(x):
            pts[-1] = (float(x), seen / n)
        else:
            pts.append((float(x), seen / n))
    return pts


_PALETTE = ("#1f6f8b", "#c84b31", "#3a7d44", "#7d5ba6", "#b8860b", "#555555")


def _ecdf_svg(curves: list[tuple[str, list[tuple[float, float]]]]) -> str:
    """Step-line plot of ECDF curves on the unit square, one polyline per graph."""
    width, height, margin = 480, 360, 48
    span_x, span_y = width - 2 * margin, height - 2 * margin

    def px(x: float) -> float:
        return margin + x * span_x

    def py(y: float) -> float:
        return height - margin - y * span_y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="{margin}" y="{margin}" width="{span_x}" height="{span_y}" '
        'fill="none" stroke="#333"/>',
    ]
    for frac in (0.0, 0.5, 1.0):
        parts.append(
            f'<text x="{px(frac):.1f}" y="{height - margin + 16}" font-size="11" '
            f'text-anchor="middle">{frac:g}</text>'
        )
        parts.append(
            f'<text x="{margin - 8}" y="{py(frac) + 4:.1f}" font-size="11" '
            f'text-anchor="end">{frac:g}</text>'
        )
    for idx, (name, pts) in enumerate(curves):
        color = _PALETTE[idx % len(_PALETTE)]
        coords: list[tuple[float, float]] = []
        prev_f = 0.0
        for x, f in pts:
            coords.append((x, prev_f))
            coords.append((x, f))
            prev_f = f
        coords.append((1.0, prev_f))
        path = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in coords)
        parts.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        parts.append(
            f'<text x="{width - margin - 4}" y="{margin + 14 + 14 * idx}" font-size="11" '
            f'text-anchor="end" fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_ecdf(args) -> int:
    code = EXIT_OK
    lines = ["graph,x,F"]
    curves = []
    for path in args.inputs:
        name = _stem(path)
        try:
            g, _ = _load(path)
            pts = _ecdf_points(g)
            curves.append((name, pts))
            lines.extend(f"{name},{x:.10g},{f:.10g}" for x, f in pts)
        except InvariantViolation as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = EXIT_INVARIANT
        except _INPUT_ERRORS as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = max(code, EXIT_INPUT)
    _emit("\n".join(lines) + "\n", args.out, "ecdf.csv")
    if args.out is not None and curves:
        (args.out / "ecdf.svg").write_text(_ecdf_svg(curves), encoding="utf-8")
    return code


def cmd_verify(args) -> int:
    code = EXIT_OK
    results = []
    for path in args.inputs:
        name = _stem(path)
        try:
            g, _ = _load(path)
            results.extend(graph_checks(g, name, incidence_cap=args.max_incidence_cols))
            if not g.directed:
                s = core_dominating_set(g)
                p = ego_traversing_partition(g, s)
                results.extend(partition_checks(g, p, name + "/ego"))
        except (InvariantViolation, ConvergenceError) as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = EXIT_INVARIANT
        except _INPUT_ERRORS as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            code = max(code, EXIT_INPUT)
    try:
        results.extend(random_suite(args.seed))
    except (InvariantViolation, ConvergenceError) as exc:
        print(f"random suite: {exc}", file=sys.stderr)
        code = EXIT_INVARIANT
    text = "\n".join(r.line() for r in results) + "\n"
    _emit(text, args.out, "verify.txt")
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=sys.stderr)
    if failed:
        code = EXIT_INVARIANT
    return code


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wedgeops",
        description="Two-walk operator analytics: summary tables, contractions, "
        "clustering ECDFs, invariant verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, with_inputs_required=True):
        sp.add_argument(
            "inputs",
            nargs="+" if with_inputs_required else "*",
            help="edge-list files (u v [weight] per line, # comments)",
        )
        sp.add_argument("--out", type=Path, default=None, help="directory for output files")

    sp = sub.add_parser("analyze", help="summary invariant table, one CSV row per graph")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("contract", help="ego contraction diagnostics per graph")
    common(sp)
    sp.add_argument("--partition", default=None, help="partition file overriding the ego contraction")
    sp.add_argument(
        "--emit-matrices", action="store_true",
        help="write per-graph B/M/overcount CSV matrices",
    )
    sp.set_defaults(func=cmd_contract)

    sp = sub.add_parser("ecdf", help="local clustering ECDF points (CSV, optional SVG)")
    common(sp)
    sp.set_defaults(func=cmd_ecdf)

    sp = sub.add_parser("verify", help="run the invariant suite on inputs plus random graphs")
    common(sp, with_inputs_required=False)
    sp.add_argument("--seed", type=int, default=0, help="seed for the random-graph suite")
    sp.add_argument(
        "--max-incidence-cols", type=int, default=200_000,
        help="column cap for incidence-based checks",
    )
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
