"""Unavoidable local configurations in (2,1)-sparse graphs with min degree 2.

Every such graph contains one of five patterns around a pivot vertex v:

  B1  deg(v) = 2
  B2  deg(v) = 3 with two neighbours of degree <= 4
  B3  deg(v) = 5 with three neighbours of degree <= 3
  B4  deg(v) = 6 with five neighbours of degree <= 3
  B5  deg(v) >= 7 with all neighbours of degree <= 3

The co-pivot u is a minimum-degree neighbour of v; N'(v) collects the
low-degree neighbours named in the pattern and N''(v) the rest.  The charge
function (deg(v) - 4, redistributed by the one discharging rule) certifies
unavoidability and is exposed as a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoConfiguration
from .graph import Graph

KINDS = ("B1", "B2", "B3", "B4", "B5")


@dataclass(frozen=True)
class Configuration:
    kind: str
    pivot: int
    co_pivot: int
    n_prime: tuple[int, ...]
    n_double_prime: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown configuration kind {self.kind}")


def _sorted_neighbors(graph: Graph, v: int) -> list[int]:
    return sorted(graph.neighbors(v), key=lambda x: (graph.degree(x), x))


def _classify(graph: Graph, v: int) -> Configuration | None:
    """Match vertex v against B2-B5 (B1 is handled by the caller)."""
    k = graph.degree(v)
    ordered = _sorted_neighbors(graph, v)
    if k == 3:
        if graph.degree(ordered[1]) <= 4:
            return Configuration("B2", v, ordered[0], tuple(ordered[:2]), tuple(ordered[2:]))
        return None
    if k == 5:
        if graph.degree(ordered[2]) <= 3:
            return Configuration("B3", v, ordered[0], tuple(ordered[:3]), tuple(ordered[3:]))
        return None
    if k == 6:
        if graph.degree(ordered[4]) <= 3:
            return Configuration("B4", v, ordered[0], tuple(ordered[:5]), tuple(ordered[5:]))
        return None
    if k >= 7:
        if graph.degree(ordered[-1]) <= 3:
            return Configuration("B5", v, ordered[0], tuple(ordered), ())
        return None
    return None


def find_configuration(graph: Graph) -> Configuration:
    """Return an unavoidable configuration (B1 first, then lowest pivot id).

    Precondition: every non-isolated vertex has degree >= 2 and the graph
    spans at most 2n-1 edges; NoConfiguration then never fires.
    """
    for v in range(graph.n):
        if graph.degree(v) == 2:
            ordered = _sorted_neighbors(graph, v)
            return Configuration("B1", v, ordered[0], tuple(ordered), ())
    cfg = find_configuration_b2_to_b5(graph)
    if cfg is None:
        raise NoConfiguration("no B1-B5 pattern; input violates the precondition")
    return cfg


def find_configuration_b2_to_b5(graph: Graph) -> Configuration | None:
    for v in range(graph.n):
        cfg = _classify(graph, v)
        if cfg is not None:
            return cfg
    return None


def find_adjacent_degree2_pair(graph: Graph) -> tuple[int, int] | None:
    """Smallest adjacent pair of degree-2 vertices, if any."""
    for u, v in sorted(graph.edges()):
        if graph.degree(u) == 2 and graph.degree(v) == 2:
            return (u, v)
    return None


def high_degree_neighbors(graph: Graph, x: int) -> list[int]:
    """M''(x): neighbours of x of degree greater than 3."""
    return sorted(y for y in graph.neighbors(x) if graph.degree(y) > 3)


def select_degree2_removal(graph: Graph) -> tuple[int, int] | None:
    """Edge (x, y) with y of degree 2 and x having at most three neighbours
    of degree > 3; the extension argument needs exactly those two facts.

    Returns None when no such x exists (then a B2-B5 configuration must
    exist instead and the caller falls back to it).
    """
    best = None
    for x in range(graph.n):
        low_pair = [y for y in graph.neighbors(x) if graph.degree(y) == 2]
        if not low_pair:
            continue
        if len(high_degree_neighbors(graph, x)) <= 3:
            cand = (x, min(low_pair))
            if best is None or cand < best:
                best = cand
    return best


def compute_charges(graph: Graph) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    """Charges deg(v)-4 before and after the single discharging rule
    (each vertex of degree >= 5 sends 1/2 to every 3-degree neighbour)."""
    phi = {v: Fraction(graph.degree(v) - 4) for v in range(graph.n)}
    phi_prime = dict(phi)
    half = Fraction(1, 2)
    for v in range(graph.n):
        if graph.degree(v) >= 5:
            for y in graph.neighbors(v):
                if graph.degree(y) == 3:
                    phi_prime[v] -= half
                    phi_prime[y] += half
    return phi, phi_prime
