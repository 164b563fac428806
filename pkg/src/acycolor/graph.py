"""Simple undirected graphs with the queries the coloring algorithm needs.

Vertices are dense integers 0..n-1 (isolated vertices are representable).
Graphs behave as values: the public mutating operations return new
instances; the engine mutates only its own private copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DuplicateEdge, MissingEdge, SelfLoop, VertexOutOfRange


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalize an endpoint pair so both orderings compare equal."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GraphMetrics:
    n: int
    m: int
    max_degree: int
    min_degree: int
    degree_sequence: tuple[int, ...]


class Graph:
    """Adjacency sets plus a normalized edge set, kept mutually consistent."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int):
        if n < 0:
            raise VertexOutOfRange("vertex count must be nonnegative")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._edges: set[tuple[int, int]] = set()

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in pairs:
            g._check_vertex(u)
            g._check_vertex(v)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            e = edge_key(u, v)
            if e in g._edges:
                raise DuplicateEdge(f"duplicate edge {e}")
            g._insert(e)
        return g

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} outside [0, {self.n})")

    def _insert(self, e: tuple[int, int]) -> None:
        u, v = e
        self._edges.add(e)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def _delete(self, e: tuple[int, int]) -> None:
        u, v = e
        self._edges.remove(e)
        self._adj[u].remove(v)
        self._adj[v].remove(u)

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def metrics(self) -> GraphMetrics:
        degs = self.degrees()
        return GraphMetrics(
            n=self.n,
            m=self.m,
            max_degree=max(degs, default=0),
            min_degree=min(degs, default=0),
            degree_sequence=tuple(sorted(degs, reverse=True)),
        )

    def is_triangle_free(self) -> tuple[bool, tuple[int, int, int] | None]:
        """Return (True, None) or (False, witness_triangle)."""
        for u, v in sorted(self._edges):
            common = self._adj[u] & self._adj[v]
            if common:
                w = min(common)
                return False, tuple(sorted((u, v, w)))  # type: ignore[return-value]
        return True, None

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    # -- value-like operations -------------------------------------------

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g._edges = set(self._edges)
        g._adj = [set(a) for a in self._adj]
        return g

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = edge_key(u, v)
        if e not in self._edges:
            raise MissingEdge(f"edge {e} not in graph")
        g = self.copy()
        g._delete(e)
        return g

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = edge_key(u, v)
        if e in self._edges:
            raise DuplicateEdge(f"duplicate edge {e}")
        g = self.copy()
        g._insert(e)
        return g

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to 0..|S|-1 in sorted vertex order."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(vs)}
        g = Graph(len(vs))
        for u, v in self._edges:
            if u in index and v in index:
                g._insert(edge_key(index[u], index[v]))
        return g

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._edges)))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
