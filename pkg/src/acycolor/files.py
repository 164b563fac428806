"""Text formats for graphs and colorings.

Graph files are DIMACS-adjacent: a `p edge <n> <m>` line, then one
`e <u> <v>` line per edge with 0-based vertex ids; `#` lines are comments.
Coloring files start with `colors <k>`, optionally repeat the graph's
`p edge` header (so a single stream can feed the verifier), and carry one
`c <u> <v> <color>` line per edge with 1-based colors.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .errors import ParseError
from .graph import Graph, edge_key


def _tokens(stream: Iterable[str]):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(stream: Iterable[str]) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    for lineno, parts in _tokens(stream):
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad problem line") from exc
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                edges.append((int(parts[1]), int(parts[2])))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad edge line") from exc
        else:
            raise ParseError(f"line {lineno}: unknown record '{parts[0]}'")
    if n is None:
        raise ParseError("missing 'p edge' header")
    if m is not None and m != len(edges):
        raise ParseError(f"header announced {m} edges, found {len(edges)}")
    try:
        return Graph.from_edge_list(n, edges)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def emit_graph(graph: Graph, out: TextIO, comment: str | None = None) -> None:
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write(f"p edge {graph.n} {graph.m}\n")
    for u, v in sorted(graph.edges()):
        out.write(f"e {u} {v}\n")


def parse_coloring(stream: Iterable[str]):
    """Returns (assignment, declared_colors, embedded_graph_or_None)."""
    k = None
    n = None
    edges: list[tuple[int, int]] = []
    assignment: dict[tuple[int, int], int] = {}
    for lineno, parts in _tokens(stream):
        if parts[0] == "colors":
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'colors <k>'")
            k = int(parts[1])
        elif parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            n = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "c":
            if len(parts) != 4:
                raise ParseError(f"line {lineno}: expected 'c <u> <v> <color>'")
            try:
                u, v, col = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad coloring line") from exc
            e = edge_key(u, v)
            if e in assignment:
                raise ParseError(f"line {lineno}: edge {e} colored twice")
            assignment[e] = col
        else:
            raise ParseError(f"line {lineno}: unknown record '{parts[0]}'")
    if k is None:
        raise ParseError("missing 'colors <k>' header")
    graph = None
    if n is not None:
        all_edges = set(edges) | set(assignment)
        try:
            graph = Graph.from_edge_list(n, sorted(edge_key(*e) for e in all_edges))
        except Exception as exc:
            raise ParseError(str(exc)) from exc
    return assignment, k, graph


def emit_coloring(graph: Graph, assignment, k: int, out: TextIO) -> None:
    if hasattr(assignment, "assignment"):
        assignment = assignment.assignment()
    out.write(f"colors {k}\n")
    out.write(f"p edge {graph.n} {graph.m}\n")
    for u, v in sorted(graph.edges()):
        out.write(f"c {u} {v} {assignment[(u, v)]}\n")
