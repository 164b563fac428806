"""Seeded instance generators for the graph classes the bound covers.

All randomness flows through random.Random (MT19937) so corpora are
reproducible byte-for-byte from (parameters, seed).
"""

from __future__ import annotations

import random

from .graph import Graph, edge_key
from .sparsity import PebbleState

GENERATOR_NAME = "python-random-mt19937"


def gen_grid(rows: int, cols: int) -> Graph:
    """rows x cols grid graph: triangle-free, planar, (2,1)-sparse."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")

    def vid(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph.from_edge_list(rows * cols, edges)


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    count = [0] * n
    for x in seq:
        count[x] += 1
    edges = []
    leaves = sorted(v for v in range(n) if count[v] == 0)
    for x in seq:
        leaf = leaves.pop(0)
        edges.append(edge_key(leaf, x))
        count[x] -= 1
        if count[x] == 0:
            # keep the leaf pool sorted so draws stay deterministic
            import bisect

            bisect.insort(leaves, x)
    edges.append(edge_key(leaves[0], leaves[1]))
    return edges


def gen_two_forests(n: int, seed: int) -> Graph:
    """Union of two random forests (each a thinned random spanning tree)."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    for _ in range(2):
        tree = _random_tree_edges(n, rng)
        for e in tree:
            if rng.random() < 0.9:  # thin to a proper forest now and then
                edges.add(e)
    return Graph.from_edge_list(n, sorted(edges))


def gen_2degenerate(n: int, seed: int) -> Graph:
    """Incremental construction: each vertex joins at most two earlier ones."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        k = min(v, rng.choice((1, 2, 2)))
        for w in rng.sample(range(v), k):
            edges.append((w, v))
    return Graph.from_edge_list(n, edges)


def gen_random_property_a(n: int, m_target: int, seed: int) -> Graph:
    """Random sparse graph: shuffled candidate pairs accepted through the
    pebble game until m_target edges or saturation."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    state = PebbleState(n)
    edges = []
    for u, v in pairs:
        if len(edges) >= m_target:
            break
        if state.try_insert(u, v):
            edges.append((u, v))
    return Graph.from_edge_list(n, edges)
