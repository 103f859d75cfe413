"""Command line: ``edgeideal {invariants,construct,verify,plot}``.

Exit codes: 0 success, 1 a theorem check failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import EdgeIdealError, NoEdges
from .families import FAMILIES
from .graph import Graph, emit_edge_list, emit_graph6, members, parse_graph, parse_graph6
from .homology import FIELDS, regularity
from .invariants import invariant_record, v_number
from .plot import render_svg
from .recognition import is_bipartite, is_cameron_walker, is_chordal, is_forest
from .rv_sets import RVReport, default_workers, empirical_rv, is_connected_whisker, normalize_class


class UsageError(Exception):
    pass


def _load_graph(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.file is not None:
        return parse_graph(Path(args.file).read_text())
    raise UsageError("give a graph with --g6 or --file")


def cmd_invariants(args) -> int:
    G = _load_graph(args)
    if G.num_edges == 0:
        raise NoEdges()
    rec = invariant_record(G, regularity(G, args.field))
    wit = v_number(G)
    flags = {
        "chordal": is_chordal(G),
        "bipartite": is_bipartite(G),
        "forest": is_forest(G),
        "whisker": is_connected_whisker(G),
        "cameron_walker": is_cameron_walker(G),
    }
    if args.json:
        data = rec.as_dict()
        data["v_witness"] = members(wit.A)
        data["v_cover"] = members(wit.cover)
        data["classes"] = flags
        print(json.dumps(data, sort_keys=True))
        return 0
    print(f"graph6: {rec.graph6_key}")
    print(f"n={G.n} edges={G.num_edges}")
    print(f"v={rec.v_number} reg={rec.regularity} alpha={rec.alpha} m={rec.matching} "
          f"im={rec.induced_matching} gamma_e={rec.edge_domination}")
    print(f"v-witness: A={members(wit.A)} N(A)={members(wit.cover)}")
    print("classes: " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.items()))
    return 0


def cmd_construct(args) -> int:
    G = FAMILIES[args.family](args.n, args.r, args.v)
    if args.format == "edges":
        sys.stdout.write(emit_edge_list(G))
    else:
        print(emit_graph6(G))
    reg = regularity(G, args.field)
    v = v_number(G).size
    ok = (reg, v) == (args.r, args.v)
    print(f"check: reg={reg} v={v} {'OK' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def cmd_verify(args) -> int:
    try:
        ns = parse_range(args.n)
    except ValueError:
        raise UsageError(f"bad --n {args.n!r}; use N or LO..HI") from None
    classes = [normalize_class(c) for c in args.classes.split(",") if c]
    if args.corpus is None and max(ns) > 8:
        raise UsageError("n > 8 requires --corpus FILE (graph6)")
    threads = args.threads if args.threads is not None else default_workers()
    if threads < 1:
        raise UsageError("--threads must be >= 1")
    outdir = Path(args.output) if args.output else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    failed = False
    rows = []
    for n in ns:
        for cls in classes:
            report = empirical_rv(n, cls, corpus=args.corpus, field=args.field, workers=threads)
            if outdir:
                stem = outdir / f"rv_n{n}_{cls}"
                if args.format == "json":
                    stem.with_suffix(".json").write_text(report.to_json())
                elif args.format == "csv":
                    stem.with_suffix(".csv").write_text(report.to_csv())
                else:
                    stem.with_suffix(".svg").write_text(render_svg(report))
            for check in report.checks:
                failed |= check.status == "FAIL"
                rows.append((check.status, check.name, check.detail))
    width = max((len(r[1]) for r in rows), default=10)
    for status, name, detail in rows:
        print(f"{status:<5} {name:<{width}}  {detail}".rstrip())
    n_fail = sum(1 for r in rows if r[0] == "FAIL")
    print(f"summary: {len(rows)} checks, {n_fail} failed")
    return 1 if failed else 0


def cmd_plot(args) -> int:
    try:
        report = RVReport.from_json(Path(args.report).read_text())
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed report: {exc}") from None
    svg = render_svg(report)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgeideal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="all invariants of one graph")
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--file", help="file holding a graph6 line or an edge list")
    p.add_argument("--field", choices=FIELDS, default="f2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", help="build a witness graph")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.add_argument("--field", choices=FIELDS, default="f2")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="compare enumerated lattice sets with the closed forms")
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.add_argument("--classes", default="all", help="comma list: all,chordal,bipartite,forest,whisker,cw")
    p.add_argument("--corpus", help="graph6 file of graphs to use instead of native generation")
    p.add_argument("--field", choices=FIELDS, default="f2")
    p.add_argument("--threads", type=int, help="worker processes (default: $EDGEIDEAL_THREADS or all cores)")
    p.add_argument("--output", help="directory for per-(n, class) reports")
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="SVG scatter of a JSON report")
    p.add_argument("report")
    p.add_argument("--output")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, EdgeIdealError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
