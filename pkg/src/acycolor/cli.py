"""Command-line surface: color, verify, check, gen, oracle, bench.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 parse error, 3 sparsity violation (witness printed), 4 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import files
from .engine import acyclic_edge_color
from .errors import NotPropertyA, ParseError
from .generators import (
    GENERATOR_NAME,
    gen_2degenerate,
    gen_grid,
    gen_random_property_a,
    gen_two_forests,
)
from .graph import Graph
from .sparsity import check_property_a
from .verification import exact_acyclic_chromatic_index, verify

EXIT_PARSE = 2
EXIT_NOT_SPARSE = 3
EXIT_VERIFY = 4


def _open_or_stdin(path: str):
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="utf-8")


def _read_graph(path: str) -> Graph:
    with _open_or_stdin(path) as fh:
        return files.parse_graph(fh)


def _cmd_color(args) -> int:
    try:
        graph = _read_graph(args.graph)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        coloring, trace, palette = acyclic_edge_color(graph)
    except NotPropertyA as exc:
        ws = exc.witness
        count = sum(1 for u, v in graph.edges() if u in set(ws) and v in set(ws))
        print(
            f"not (2,1)-sparse: {len(ws)} vertices span {count} edges "
            f"(> {2 * len(ws) - 1}): {list(ws)}",
            file=sys.stderr,
        )
        return EXIT_NOT_SPARSE

    report = None
    if args.verify:
        report = verify(graph, coloring, palette.size)

    if args.trace:
        for entry in trace.entries:
            kind = entry.reason
            edge = entry.edge if entry.edge is not None else "-"
            print(f"trace {edge} {kind}", file=sys.stderr)

    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.json:
            payload = {
                "n": graph.n,
                "m": graph.m,
                "max_degree": graph.max_degree(),
                "palette": palette.size,
                "colors_used": len(coloring.colors_used()),
                "edges": [
                    [u, v, coloring.color_of(u, v)] for u, v in sorted(graph.edges())
                ],
                "trace": [
                    {"edge": list(e.edge) if e.edge else None, "reason": e.reason}
                    for e in trace.entries
                ],
                "verified": report.ok if report is not None else None,
            }
            json.dump(payload, out)
            out.write("\n")
        else:
            files.emit_coloring(graph, coloring, palette.size, out)
    finally:
        if out is not sys.stdout:
            out.close()

    if report is not None and not report.ok:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFY
    return 0


def _cmd_verify(args) -> int:
    try:
        if args.coloring is None:
            with _open_or_stdin(args.graph) as fh:
                assignment, k, graph = files.parse_coloring(fh)
            if graph is None:
                print("combined input lacks a 'p edge' header", file=sys.stderr)
                return EXIT_PARSE
        else:
            graph = _read_graph(args.graph)
            with _open_or_stdin(args.coloring) as fh:
                assignment, k, _ = files.parse_coloring(fh)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    limit = args.max_colors if args.max_colors is not None else k
    try:
        report = verify(graph, assignment, limit)
    except Exception as exc:
        print(f"verification input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(
        f"proper={report.proper} acyclic={report.acyclic} "
        f"colors_used={report.colors_used} bound_ok={report.bound_ok}"
    )
    if not report.proper:
        print(f"improper at vertex {report.offending_vertex}")
    if not report.acyclic:
        print(
            f"bichromatic cycle colors={report.cycle_colors} "
            f"vertices={list(report.cycle_vertices)}"
        )
    return 0 if report.ok else EXIT_VERIFY


def _cmd_check(args) -> int:
    try:
        graph = _read_graph(args.graph)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    verdict = check_property_a(graph)
    tf, triangle = graph.is_triangle_free()
    if verdict.satisfied:
        print("property-a: satisfied")
    else:
        ws = verdict.witness
        count = sum(1 for u, v in graph.edges() if u in set(ws) and v in set(ws))
        print(
            f"property-a: violated witness={list(ws)} "
            f"edges={count} bound={2 * len(ws) - 1}"
        )
    if tf:
        print("triangle-free: yes")
    else:
        print(f"triangle-free: no witness={list(triangle)}")
    return 0


def _cmd_gen(args) -> int:
    if args.family == "grid":
        graph = gen_grid(args.p1, args.p2 if args.p2 is not None else args.p1)
        desc = f"grid {args.p1}x{args.p2 if args.p2 is not None else args.p1}"
    elif args.family == "two-forests":
        graph = gen_two_forests(args.p1, args.seed)
        desc = f"two-forests n={args.p1}"
    elif args.family == "two-degenerate":
        graph = gen_2degenerate(args.p1, args.seed)
        desc = f"two-degenerate n={args.p1}"
    elif args.family == "random-property-a":
        if args.p2 is None:
            print("random-property-a needs N and M", file=sys.stderr)
            return EXIT_PARSE
        graph = gen_random_property_a(args.p1, args.p2, args.seed)
        desc = f"random-property-a n={args.p1} m={args.p2}"
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(args.family)
    comment = f"{desc} seed={args.seed} rng={GENERATOR_NAME}"
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        files.emit_graph(graph, out, comment=comment)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _cmd_oracle(args) -> int:
    try:
        graph = _read_graph(args.graph)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(exact_acyclic_chromatic_index(graph))
    return 0


def _cmd_bench(args) -> int:
    paths = sorted(Path(args.corpus).iterdir())
    print("file\tn\tm\tmax_degree\tcolors\tseconds")
    failures = 0
    for path in paths:
        if not path.is_file():
            continue
        try:
            with open(path, "r", encoding="utf-8") as fh:
                graph = files.parse_graph(fh)
        except ParseError:
            continue
        start = time.perf_counter()
        try:
            coloring, _, palette = acyclic_edge_color(graph)
        except NotPropertyA:
            print(f"{path.name}\t{graph.n}\t{graph.m}\t-\tnot-sparse\t-")
            continue
        elapsed = time.perf_counter() - start
        report = verify(graph, coloring, palette.size)
        if not report.ok:
            failures += 1
        print(
            f"{path.name}\t{graph.n}\t{graph.m}\t{graph.max_degree()}\t"
            f"{report.colors_used}\t{elapsed:.3f}"
        )
    return EXIT_VERIFY if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acycolor",
        description="Acyclic edge coloring with max-degree+3 colors for "
        "(2,1)-sparse graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph file")
    p.add_argument("graph", nargs="?", default="-", help="graph file or '-'")
    p.add_argument("-o", "--output", help="write the coloring here")
    p.add_argument("--verify", action="store_true", help="re-check the result")
    p.add_argument("--trace", action="store_true", help="dump the removal stack")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("graph", nargs="?", default="-",
                   help="graph file, or a combined coloring file")
    p.add_argument("coloring", nargs="?", help="coloring file")
    p.add_argument("--max-colors", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check", help="sparsity and triangle-freeness verdicts")
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument(
        "family",
        choices=("grid", "two-forests", "two-degenerate", "random-property-a"),
    )
    p.add_argument("p1", type=int, help="rows (grid) or vertex count")
    p.add_argument("p2", type=int, nargs="?", default=None,
                   help="cols (grid) or edge target (random-property-a)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="exact minimum color count (small graphs)")
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="color and time every graph in a directory")
    p.add_argument("corpus")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
