import random
from itertools import combinations

import pytest

from acycolor import Graph, Palette, PartialColoring


def cycle_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, list(combinations(range(n), 2)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edge_list(10, outer + spokes + inner)


def grid_graph(rows: int, cols: int) -> Graph:
    from acycolor import gen_grid

    return gen_grid(rows, cols)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def random_valid_coloring(graph: Graph, palette: Palette, rng: random.Random,
                          fraction: float = 1.0) -> PartialColoring:
    """Greedy randomized valid partial coloring (skips stuck edges)."""
    col = PartialColoring(graph)
    edges = sorted(graph.edges())
    rng.shuffle(edges)
    keep = int(round(len(edges) * fraction))
    for (u, v) in edges[:keep]:
        cands = col.candidate_colors(u, v, palette)
        rng.shuffle(cands)
        for c in cands:
            if col._valid_unchecked(u, v, c):
                col.assign(u, v, c)
                break
    return col


def brute_force_triangle(graph: Graph):
    """Independent triangle enumeration over all vertex triples."""
    for a, b, c in combinations(range(graph.n), 3):
        if graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(a, c):
            return (a, b, c)
    return None


def all_graphs_on(n: int):
    """Yield every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph.from_edge_list(n, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
