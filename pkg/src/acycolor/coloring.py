"""Partial edge colorings and the alternating-path machinery.

The bookkeeping keeps, for every vertex, a map color -> neighbour over its
colored incident edges, so properness is structural: a vertex can never
hold two incident edges of the same color.  Acyclicity is the checked
property; a candidate color beta for an uncolored edge ab is valid exactly
when no (alpha, beta, ab) critical path exists for a color alpha incident
to both endpoints (the two-ended alternating path that would close into a
bichromatic cycle).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import (
    EdgeAlreadyColored,
    ImproperExchange,
    MissingEdge,
    NotACandidate,
)
from .graph import Graph, edge_key


@dataclass(frozen=True)
class Palette:
    """Color set {1..size}; sized at max degree + 3 of the input graph."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("palette size must be nonnegative")

    def colors(self) -> range:
        return range(1, self.size + 1)

    def __contains__(self, color: int) -> bool:
        return 1 <= color <= self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors())

    def __len__(self) -> int:
        return self.size


@dataclass(frozen=True)
class BichromaticWalk:
    """A maximal two-colored alternating path (or cycle, when closed)."""

    colors: tuple[int, int]
    vertices: tuple[int, ...]
    closed: bool

    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        pairs = [edge_key(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed:
            pairs.append(edge_key(vs[-1], vs[0]))
        return frozenset(pairs)


class PartialColoring:
    """Partial map edge -> color over a graph, proper at every step."""

    __slots__ = ("graph", "_color", "_at")

    def __init__(self, graph: Graph):
        self.graph = graph
        self._color: dict[tuple[int, int], int] = {}
        # per-vertex map color -> neighbour along the edge with that color
        self._at: list[dict[int, int]] = [dict() for _ in range(graph.n)]

    # -- views -------------------------------------------------------------

    def color_of(self, u: int, v: int) -> int | None:
        return self._color.get(edge_key(u, v))

    def colors_at(self, v: int) -> set[int]:
        """F_v: the colors on v's colored incident edges."""
        return set(self._at[v])

    def partner(self, v: int, color: int) -> int | None:
        """The neighbour joined to v by the color-colored edge, if any."""
        return self._at[v].get(color)

    def seen_from(self, a: int, b: int) -> set[int]:
        """S_ab: colors at b other than the color of edge ab itself."""
        out = set(self._at[b])
        c = self._color.get(edge_key(a, b))
        if c is not None:
            out.discard(c)
        return out

    def assignment(self) -> dict[tuple[int, int], int]:
        return dict(self._color)

    def colored_count(self) -> int:
        return len(self._color)

    def colors_used(self) -> set[int]:
        return set(self._color.values())

    def is_total(self) -> bool:
        return len(self._color) == self.graph.m

    # -- candidates and validity -------------------------------------------

    def candidate_colors(self, u: int, v: int, palette: Palette) -> list[int]:
        """Colors absent from both endpoints, ascending."""
        if edge_key(u, v) in self._color:
            raise EdgeAlreadyColored(f"edge {edge_key(u, v)} already colored")
        fu, fv = self._at[u], self._at[v]
        return [c for c in palette.colors() if c not in fu and c not in fv]

    def maximal_bichromatic_walk(
        self, v: int, alpha: int, beta: int
    ) -> BichromaticWalk | None:
        """The unique maximal (alpha, beta) walk through v, or None.

        Closed means the two-color component through v is a cycle.
        """
        if alpha == beta:
            raise ValueError("walk colors must differ")
        if alpha not in self._at[v] and beta not in self._at[v]:
            return None
        forward = self._ray(v, alpha, beta)
        if forward and forward[-1] == v:
            return BichromaticWalk((alpha, beta), (v, *forward[:-1]), True)
        backward = self._ray(v, beta, alpha)
        vertices = tuple(reversed(backward)) + (v,) + tuple(forward)
        return BichromaticWalk((alpha, beta), vertices, False)

    def _ray(self, v: int, first: int, second: int) -> list[int]:
        """Follow alternating colors from v, first edge colored `first`."""
        out: list[int] = []
        want = first
        cur = v
        while True:
            nxt = self._at[cur].get(want)
            if nxt is None:
                return out
            out.append(nxt)
            if nxt == v:
                return out
            cur = nxt
            want = first if want == second else second

    def critical_path_exists(self, alpha: int, beta: int, a: int, b: int) -> bool:
        """True iff the maximal (alpha,beta) path starting at a via alpha is
        open, ends at b, and its last edge is alpha (odd length >= 3).

        This is exactly the obstruction that makes beta invalid for edge ab.
        """
        if alpha == beta or a == b:
            raise ValueError("colors and endpoints must be distinct")
        at = self._at
        if beta in at[a]:
            return False  # the maximal walk does not start at a
        cur = at[a].get(alpha)
        if cur is None:
            return False
        steps = 1
        last = alpha
        want = beta
        while True:
            if cur == b and last == alpha and steps >= 3 and want not in at[b]:
                return True
            nxt = at[cur].get(want)
            if nxt is None:
                return False
            cur = nxt
            steps += 1
            last = want
            want = alpha if want == beta else beta

    def is_valid_color(self, u: int, v: int, beta: int, palette: Palette) -> bool:
        """Fact-2 check: valid unless some shared color carries a critical path."""
        if beta not in self.candidate_colors(u, v, palette):
            raise NotACandidate(f"{beta} is not a candidate for {edge_key(u, v)}")
        return self._valid_unchecked(u, v, beta)

    def _valid_unchecked(self, u: int, v: int, beta: int) -> bool:
        shared = self._at[u].keys() & self._at[v].keys()
        if not shared:
            return True  # disjointness shortcut: no alternating path can close
        for alpha in shared:
            if self.critical_path_exists(alpha, beta, u, v):
                return False
        return True

    # -- mutation ------------------------------------------------------------

    def assign(self, u: int, v: int, color: int, *, check_valid: bool = True) -> None:
        """Color edge uv.  Unchecked mode skips only the acyclicity check;
        properness is always enforced."""
        e = edge_key(u, v)
        if e not in self.graph.edges():
            raise MissingEdge(f"edge {e} not in graph")
        if e in self._color:
            raise EdgeAlreadyColored(f"edge {e} already colored")
        if color in self._at[u] or color in self._at[v]:
            raise NotACandidate(f"{color} clashes with an edge adjacent to {e}")
        if check_valid and not self._valid_unchecked(u, v, color):
            raise NotACandidate(f"{color} closes a bichromatic cycle at {e}")
        self._color[e] = color
        self._at[u][color] = v
        self._at[v][color] = u

    def unassign(self, u: int, v: int) -> int:
        e = edge_key(u, v)
        if e not in self._color:
            raise MissingEdge(f"edge {e} is not colored")
        color = self._color.pop(e)
        del self._at[u][color]
        del self._at[v][color]
        return color

    def recolor(self, u: int, v: int, color: int, *, check_valid: bool = True) -> int:
        """Replace the color on a colored edge; returns the old color."""
        old = self.unassign(u, v)
        try:
            self.assign(u, v, color, check_valid=check_valid)
        except NotACandidate:
            self.assign(u, v, old, check_valid=False)
            raise
        return old

    def color_exchange(self, u: int, i: int, j: int) -> None:
        """Swap the colors of edges ui and uj (Fact 3 properness condition).

        Properness is guaranteed by the precondition; acyclicity is NOT
        re-established here, callers re-check where the argument requires.
        """
        if i == j:
            raise ValueError("exchange needs two distinct edges at u")
        ci = self.color_of(u, i)
        cj = self.color_of(u, j)
        if ci is None or cj is None:
            raise MissingEdge("both exchanged edges must be colored")
        if ci in self.seen_from(u, j) or cj in self.seen_from(u, i):
            raise ImproperExchange(
                f"swap of {ci}/{cj} at vertex {u} would break properness"
            )
        self.unassign(u, i)
        self.unassign(u, j)
        self.assign(u, i, cj, check_valid=False)
        self.assign(u, j, ci, check_valid=False)

    # -- misc ------------------------------------------------------------------

    def copy(self, graph: Graph | None = None) -> "PartialColoring":
        out = PartialColoring(graph if graph is not None else self.graph)
        out._color = dict(self._color)
        out._at = [dict(d) for d in self._at]
        return out

    def rebind(self, graph: Graph) -> None:
        """Point at another graph object (the engine's working copy evolves)."""
        self.graph = graph

    def load(self, assignment: Mapping[tuple[int, int], int]) -> None:
        for (u, v), c in sorted(assignment.items()):
            self.assign(u, v, c, check_valid=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self._color == other._color

    def __repr__(self) -> str:
        return f"PartialColoring({len(self._color)}/{self.graph.m} edges)"
