"""Top-level coloring algorithm: eliminate, base-solve, add back.

The induction behind the max-degree-plus-three bound becomes an explicit
stack: repeatedly strip pendant edges, and while the residual keeps max
degree at least five, remove the pivot/co-pivot edge of an unavoidable
configuration.  What remains (max degree <= 4) is solved exactly by
backtracking, then the stack is replayed in reverse through the extension
procedures.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Palette, PartialColoring
from .configurations import (
    Configuration,
    find_adjacent_degree2_pair,
    find_configuration_b2_to_b5,
    select_degree2_removal,
)
from .errors import NoConfiguration, NotPropertyA, SearchBudgetExceeded
from .extension import extend_coloring
from .graph import Graph, edge_key
from .sparsity import check_property_a

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class TraceEntry:
    edge: tuple[int, int] | None
    reason: str
    config: Configuration | None = None


@dataclass
class EliminationTrace:
    """Stack of removals; replaying them from the input graph reproduces the
    residual at every depth.  Also carries extension statistics."""

    entries: list[TraceEntry] = field(default_factory=list)
    branch_counts: dict[str, int] = field(default_factory=dict)
    repair_events: list[tuple[tuple[int, int], str]] = field(default_factory=list)

    def removed_edges(self) -> list[tuple[int, int]]:
        return [e.edge for e in self.entries if e.edge is not None]


def _strip_pendants(work: Graph, trace: EliminationTrace) -> None:
    while True:
        leaf = next((x for x in range(work.n) if work.degree(x) == 1), None)
        if leaf is None:
            return
        other = min(work.neighbors(leaf))
        e = edge_key(leaf, other)
        trace.entries.append(TraceEntry(e, "pendant"))
        work._delete(e)


def _select_removal(work: Graph) -> TraceEntry:
    has_degree2 = any(work.degree(x) == 2 for x in range(work.n))
    if has_degree2:
        pair = find_adjacent_degree2_pair(work)
        if pair is not None:
            u, up = pair
            cfg = Configuration("B1", u, up, tuple(sorted(work.neighbors(u))), ())
            return TraceEntry(edge_key(u, up), "b1-adjacent", cfg)
        sel = select_degree2_removal(work)
        if sel is not None:
            x, y = sel
            low = tuple(sorted(t for t in work.neighbors(x) if work.degree(t) <= 3))
            high = tuple(sorted(t for t in work.neighbors(x) if work.degree(t) > 3))
            cfg = Configuration("B1", x, y, low, high)
            return TraceEntry(edge_key(x, y), "b1-degree2", cfg)
        # no removable degree-2 edge: a B2-B5 pattern must exist instead
    cfg = find_configuration_b2_to_b5(work)
    if cfg is None:
        raise NoConfiguration("residual graph lost its unavoidable structure")
    return TraceEntry(edge_key(cfg.pivot, cfg.co_pivot), cfg.kind.lower(), cfg)


def acyclic_edge_color(
    graph: Graph,
    *,
    budget: int = DEFAULT_BUDGET,
    debug: bool = False,
) -> tuple[PartialColoring, EliminationTrace, Palette]:
    """Acyclic proper coloring of all edges with max-degree + 3 colors.

    Raises NotPropertyA when some induced subgraph spans too many edges.
    Deterministic for a fixed input.
    """
    verdict = check_property_a(graph)
    if not verdict.satisfied:
        raise NotPropertyA(verdict.witness)

    palette = Palette(graph.max_degree() + 3)
    work = graph.copy()
    trace = EliminationTrace()

    while True:
        _strip_pendants(work, trace)
        if work.m == 0:
            break
        if work.max_degree() <= 4:
            trace.entries.append(TraceEntry(None, "base-case"))
            break
        entry = _select_removal(work)
        trace.entries.append(entry)
        work._delete(entry.edge)

    col = PartialColoring(work)
    if work.m:
        col.load(_base_solve_raw(work, palette, budget))

    for entry in reversed(trace.entries):
        if entry.edge is None:
            continue
        work._insert(entry.edge)
        extend_coloring(
            work,
            entry.edge,
            col,
            palette,
            entry.config,
            counts=trace.branch_counts,
            repair_log=trace.repair_events,
            debug=debug,
        )

    return col.copy(graph), trace, palette


# -- base case ------------------------------------------------------------------


def base_case_solver(graph: Graph, palette: Palette, budget: int = DEFAULT_BUDGET) -> PartialColoring:
    """Exact backtracking coloring of a low-degree residual within the palette.

    Intended for max degree <= 4 with at most 2n-1 edges per component,
    where six colors are known to suffice.  Path and cycle components get
    closed-form colorings.
    """
    col = PartialColoring(graph)
    col.load(_base_solve_raw(graph, palette, budget))
    return col


def _base_solve_raw(graph: Graph, palette: Palette, budget: int) -> dict[tuple[int, int], int]:
    assignment: dict[tuple[int, int], int] = {}
    remaining = [budget]
    for comp in graph.connected_components():
        if len(comp) == 1:
            continue
        comp_set = set(comp)
        comp_edges = sorted(e for e in graph.edges() if e[0] in comp_set)
        if not comp_edges:
            continue
        degs = {v: graph.degree(v) for v in comp}
        if max(degs.values()) <= 2:
            assignment.update(_color_path_or_cycle(comp, comp_edges, graph))
        else:
            sub = _backtrack_component(graph, comp, comp_edges, palette.size, remaining)
            if sub is None:
                raise SearchBudgetExceeded(
                    f"no coloring found for a component of {len(comp_edges)} edges "
                    f"within {palette.size} colors (budget left: {remaining[0]})"
                )
            assignment.update(sub)
    return assignment


def _color_path_or_cycle(comp, comp_edges, graph: Graph):
    """Max degree 2: a path alternates two colors; a cycle spends a third on
    its closing edge."""
    is_cycle = len(comp_edges) == len(comp)
    if is_cycle:
        start = comp[0]
    else:
        start = next(v for v in comp if graph.degree(v) == 1)
    order = [start]
    prev = None
    cur = start
    while len(order) < len(comp):
        nxt = sorted(x for x in graph.neighbors(cur) if x != prev)
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    out = {}
    for i in range(len(order) - 1):
        out[edge_key(order[i], order[i + 1])] = 1 + (i % 2)
    if is_cycle:
        out[edge_key(order[-1], order[0])] = 3
    return out


def _backtrack_component(graph: Graph, comp, comp_edges, k: int, remaining):
    """Iterative most-constrained-first search with a color-symmetry cap.

    A frame below the stack top always has its assignment applied; the top
    frame is unapplied while its colors are being tried.
    """
    edges = comp_edges
    m = len(edges)
    vcol: dict[int, dict[int, int]] = {v: {} for v in comp}
    inc: dict[int, list[int]] = {v: [] for v in comp}
    for eid, (a, b) in enumerate(edges):
        inc[a].append(eid)
        inc[b].append(eid)
    ecol = [0] * m
    frontier: set[int] = set()
    colored = 0

    def closes_cycle(a, b, beta):
        va, vb = vcol[a], vcol[b]
        for alpha in va:
            if alpha not in vb:
                continue
            cur = va[alpha]
            want = beta
            last = alpha
            while cur != b:
                nxt = vcol[cur].get(want)
                if nxt is None:
                    break
                cur = nxt
                last = want
                want = alpha if want == beta else beta
            else:
                if last == alpha:
                    return True
        return False

    def pick() -> int:
        pool = frontier if frontier else range(m)
        best, best_key = -1, None
        for eid in pool:
            if ecol[eid]:
                continue
            a, b = edges[eid]
            key = (-len(vcol[a].keys() | vcol[b].keys()), eid)
            if best_key is None or key < best_key:
                best, best_key = eid, key
        return best

    # frame: [eid, last_tried, maxused_before, added_to_frontier, was_in_frontier]
    frames: list[list] = [[pick(), 0, 0, [], False]]
    while frames:
        fr = frames[-1]
        eid, last, maxbefore = fr[0], fr[1], fr[2]
        a, b = edges[eid]
        va, vb = vcol[a], vcol[b]
        chosen = 0
        for c in range(last + 1, min(k, maxbefore + 1) + 1):
            if remaining[0] <= 0:
                return None
            remaining[0] -= 1
            if c in va or c in vb or closes_cycle(a, b, c):
                continue
            chosen = c
            break
        if chosen:
            fr[1] = chosen
            ecol[eid] = chosen
            va[chosen] = b
            vb[chosen] = a
            colored += 1
            fr[4] = eid in frontier
            frontier.discard(eid)
            fr[3] = []
            for x in (a, b):
                for f in inc[x]:
                    if not ecol[f] and f not in frontier:
                        frontier.add(f)
                        fr[3].append(f)
            if colored == m:
                return {edges[i]: ecol[i] for i in range(m)}
            frames.append([pick(), 0, max(maxbefore, chosen), [], False])
        else:
            frames.pop()
            if frames:
                top = frames[-1]
                teid = top[0]
                ta, tb = edges[teid]
                c = ecol[teid]
                ecol[teid] = 0
                del vcol[ta][c]
                del vcol[tb][c]
                colored -= 1
                for f in top[3]:
                    frontier.discard(f)
                if top[4]:
                    frontier.add(teid)
    return None
