"""Recognition of the sparsity condition the coloring theorem needs.

A graph qualifies when every induced subgraph H spans at most 2|V(H)|-1
edges, i.e. the graph is (2,1)-sparse.  Recognition runs the (2,1) pebble
game: every vertex starts with two pebbles, inserting an edge costs one
pebble, and pebbles can be pulled back along the current orientation.  An
edge uv is insertable exactly when two pebbles can be gathered on {u, v};
when gathering gets stuck, the set of vertices reachable from {u, v}
already spans 2|R|-1 edges, so adding uv would breach the bound on R.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import TooLarge
from .graph import Graph, edge_key

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class SparsityVerdict:
    satisfied: bool
    witness: tuple[int, ...] | None = None


class PebbleState:
    """(2,1)-pebble-game state: an orientation plus per-vertex pebble counts.

    Invariant: pebbles[v] + out_degree(v) == 2 for every vertex, hence the
    total pebble count is 2n minus the number of accepted edges.
    """

    __slots__ = ("n", "pebbles", "out")

    def __init__(self, n: int):
        self.n = n
        self.pebbles = [2] * n
        self.out: list[set[int]] = [set() for _ in range(n)]

    def _find_pebble(self, roots: Sequence[int]) -> bool:
        """Pull one pebble onto roots[0] or roots[1], reorienting a path.

        Returns False when no free pebble is reachable.
        """
        parent = {r: -1 for r in roots}
        stack = list(roots)
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if self.pebbles[y] > 0:
                    self.pebbles[y] -= 1
                    while parent[y] != -1:
                        p = parent[y]
                        self.out[y].add(p)
                        self.out[p].remove(y)
                        y = p
                    self.pebbles[y] += 1
                    return True
                stack.append(y)
        return False

    def reachable(self, roots: Sequence[int]) -> set[int]:
        seen = set(roots)
        stack = list(roots)
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def try_insert(self, u: int, v: int) -> bool:
        """Accept edge uv if the sparsity count permits, else leave state as-is."""
        while self.pebbles[u] + self.pebbles[v] < 2:
            if not self._find_pebble((u, v)):
                return False
        if self.pebbles[u] == 0:
            u, v = v, u
        self.pebbles[u] -= 1
        self.out[u].add(v)
        return True


def check_property_a(graph: Graph) -> SparsityVerdict:
    """Pebble-game verdict; on rejection the witness set overspans the bound."""
    state = PebbleState(graph.n)
    for u, v in sorted(graph.edges()):
        if not state.try_insert(u, v):
            witness = state.reachable((u, v))
            return SparsityVerdict(False, tuple(sorted(witness)))
    return SparsityVerdict(True, None)


def property_a_bruteforce(graph: Graph, limit: int = BRUTE_FORCE_LIMIT) -> SparsityVerdict:
    """Ground truth by enumerating all induced subgraphs (2^n of them)."""
    n = graph.n
    if n > limit:
        raise TooLarge(f"brute force limited to n <= {limit}, got {n}")
    edges = sorted(graph.edges())
    masks = [(1 << u) | (1 << v) for u, v in edges]
    for subset in range(1 << n):
        count = 0
        for mask in masks:
            if mask & subset == mask:
                count += 1
        size = subset.bit_count()
        if size and count > 2 * size - 1:
            witness = tuple(i for i in range(n) if subset >> i & 1)
            return SparsityVerdict(False, witness)
    return SparsityVerdict(True, None)


def witness_violates(graph: Graph, witness: Iterable[int]) -> bool:
    """Check by direct counting that a witness set breaches 2|S|-1."""
    ws = set(witness)
    count = sum(1 for u, v in graph.edges() if u in ws and v in ws)
    return count > 2 * len(ws) - 1


def accepts_edge(state: PebbleState, u: int, v: int) -> bool:
    """Incremental acceptance test used by the random sparse generator."""
    return state.try_insert(*edge_key(u, v))
