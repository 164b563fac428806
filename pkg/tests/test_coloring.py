import random

import pytest

from acycolor import (
    EdgeAlreadyColored,
    Graph,
    ImproperExchange,
    NotACandidate,
    Palette,
    PartialColoring,
    verify,
)

from .conftest import cycle_graph, path_graph, random_graph, random_valid_coloring


def colored(graph, assignment):
    col = PartialColoring(graph)
    for (u, v), c in assignment.items():
        col.assign(u, v, c, check_valid=False)
    return col


# -- candidates ---------------------------------------------------------------


def test_candidates_p3():
    g = path_graph(3)
    col = colored(g, {(1, 2): 1})
    assert col.candidate_colors(0, 1, Palette(5)) == [2, 3, 4, 5]


def test_candidates_star():
    g = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    col = colored(g, {(0, 1): 1, (0, 2): 2})
    assert col.candidate_colors(0, 3, Palette(5)) == [3, 4, 5]


def test_candidates_exhausted():
    g = Graph.from_edge_list(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    col = colored(g, {(0, 2): 1, (0, 3): 2, (1, 4): 3, (1, 5): 4, (1, 6): 5})
    assert col.candidate_colors(0, 1, Palette(5)) == []


def test_candidates_requires_uncolored():
    g = path_graph(3)
    col = colored(g, {(0, 1): 1})
    with pytest.raises(EdgeAlreadyColored):
        col.candidate_colors(0, 1, Palette(5))


# -- walks -----------------------------------------------------------------------


def test_walk_open_path():
    g = cycle_graph(6)
    col = colored(
        g, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (3, 4): 2, (4, 5): 1, (0, 5): 3}
    )
    walk = col.maximal_bichromatic_walk(0, 1, 2)
    assert not walk.closed
    assert walk.vertices == (0, 1, 2, 3, 4, 5)
    assert len(walk.edge_set()) == 5


def test_walk_closed_cycle():
    col = colored(cycle_graph(4), {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    for v in range(4):
        walk = col.maximal_bichromatic_walk(v, 1, 2)
        assert walk.closed
        assert len(walk.edge_set()) == 4


def test_walk_absent_colors():
    col = colored(cycle_graph(4), {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2})
    assert col.maximal_bichromatic_walk(0, 4, 5) is None


def test_walk_uniqueness_from_both_ends(rng):
    # the maximal walk through v is unique: rebuilding it from either of its
    # ends yields the same edge set
    for _ in range(200):
        g = random_graph(rng.randint(4, 10), 0.5, rng)
        palette = Palette(g.max_degree() + 3)
        col = random_valid_coloring(g, palette, rng)
        v = rng.randrange(g.n)
        alpha, beta = rng.sample(range(1, palette.size + 1), 2)
        walk = col.maximal_bichromatic_walk(v, alpha, beta)
        if walk is None or walk.closed:
            continue
        first, last = walk.vertices[0], walk.vertices[-1]
        again = col.maximal_bichromatic_walk(first, alpha, beta)
        third = col.maximal_bichromatic_walk(last, alpha, beta)
        assert walk.edge_set() == again.edge_set() == third.edge_set()


# -- critical paths ----------------------------------------------------------------


def test_critical_path_basic():
    g = path_graph(4)
    col = colored(g, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    assert col.critical_path_exists(1, 2, 0, 3)


def test_critical_path_wrong_last_color():
    g = path_graph(4)
    col = colored(g, {(0, 1): 1, (1, 2): 2, (2, 3): 3})
    assert not col.critical_path_exists(1, 2, 0, 3)


def test_critical_path_even_length():
    g = path_graph(3)
    col = colored(g, {(0, 1): 1, (1, 2): 2})
    assert not col.critical_path_exists(1, 2, 0, 2)


# -- validity ---------------------------------------------------------------------


def test_validity_c4():
    g = cycle_graph(4)
    col = colored(g, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    assert not col.is_valid_color(3, 0, 2, Palette(5))
    assert col.is_valid_color(3, 0, 3, Palette(5))


def test_validity_requires_candidate():
    g = cycle_graph(4)
    col = colored(g, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    with pytest.raises(NotACandidate):
        col.is_valid_color(3, 0, 1, Palette(5))


def test_validity_disjoint_shortcut(rng):
    # empty S_ab/S_ba intersection makes every candidate valid
    for _ in range(300):
        g = random_graph(rng.randint(4, 9), 0.4, rng)
        palette = Palette(g.max_degree() + 3)
        col = random_valid_coloring(g, palette, rng, fraction=0.7)
        for (u, v) in sorted(g.edges()):
            if col.color_of(u, v) is not None:
                continue
            if col.seen_from(u, v) & col.seen_from(v, u):
                continue
            for c in col.candidate_colors(u, v, palette):
                assert col.is_valid_color(u, v, c, palette)
            break


def brute_force_valid(graph, col, u, v, c):
    """Assign unchecked, scan every color pair for a cycle, undo."""
    col.assign(u, v, c, check_valid=False)
    try:
        assignment = col.assignment()
        sub = Graph.from_edge_list(graph.n, sorted(assignment))
        report = verify(sub, assignment, 10**9)
        return report.acyclic
    finally:
        col.unassign(u, v)


def test_validity_agrees_with_bruteforce(rng):
    checked = 0
    while checked < 600:
        g = random_graph(rng.randint(4, 10), 0.5, rng)
        palette = Palette(g.max_degree() + 3)
        col = random_valid_coloring(g, palette, rng, fraction=0.8)
        uncolored = [e for e in sorted(g.edges()) if col.color_of(*e) is None]
        if not uncolored:
            continue
        u, v = uncolored[rng.randrange(len(uncolored))]
        for c in col.candidate_colors(u, v, palette):
            fast = col.is_valid_color(u, v, c, palette)
            slow = brute_force_valid(g, col, u, v, c)
            assert fast == slow
            checked += 1


def test_unchecked_assign_flags_exactly_one_cycle():
    g = cycle_graph(4)
    col = colored(g, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    col.assign(3, 0, 2, check_valid=False)
    report = verify(g, col, 5)
    assert report.proper and not report.acyclic
    assert report.cycle_colors == (1, 2)
    assert sorted(report.cycle_vertices) == [0, 1, 2, 3]


# -- assignment bookkeeping ----------------------------------------------------


def test_assign_unassign_roundtrip():
    g = cycle_graph(5)
    col = colored(g, {(0, 1): 1, (1, 2): 2})
    before = col.assignment()
    col.assign(2, 3, 1)
    col.unassign(2, 3)
    assert col.assignment() == before


def test_assign_rejects_adjacent_clash():
    g = path_graph(3)
    col = colored(g, {(0, 1): 1})
    with pytest.raises(NotACandidate):
        col.assign(1, 2, 1)


def test_assign_valid_stays_valid(rng):
    for _ in range(50):
        g = random_graph(8, 0.4, rng)
        palette = Palette(g.max_degree() + 3)
        col = random_valid_coloring(g, palette, rng)
        assignment = col.assignment()
        sub = Graph.from_edge_list(g.n, sorted(assignment))
        assert verify(sub, assignment, palette.size).ok


# -- color exchange ---------------------------------------------------------------


def test_exchange_improper():
    g = Graph.from_edge_list(4, [(0, 1), (0, 2), (1, 3)])
    col = colored(g, {(0, 1): 1, (0, 2): 2, (1, 3): 2})
    # swapping 0-1 and 0-2 would put color 2 on 0-1 while 1-3 already has 2
    with pytest.raises(ImproperExchange):
        col.color_exchange(0, 1, 2)


def test_exchange_p3():
    g = path_graph(3)
    col = colored(g, {(0, 1): 1, (1, 2): 2})
    col.color_exchange(1, 0, 2)
    assert col.color_of(0, 1) == 2 and col.color_of(1, 2) == 1


def _exchange_fixture(lam, xi, rho, extra):
    """Critical (lam, xi) path a-u-q-b with u also holding a rho edge."""
    g = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    col = colored(g, {(0, 1): lam, (1, 2): xi, (2, 3): lam, (1, 4): rho})
    return g, col


def test_exchange_breaks_critical_path():
    # Lemma 2 scenario: a proper exchange at an interior vertex of the
    # critical path destroys it
    lam, xi, rho = 1, 2, 3
    g, col = _exchange_fixture(lam, xi, rho, None)
    assert col.critical_path_exists(lam, xi, 0, 3)
    col.color_exchange(1, 2, 4)  # swap the xi edge with the rho edge
    assert not col.critical_path_exists(lam, xi, 0, 3)


def test_exchange_breaks_critical_path_randomized(rng):
    # randomized variants of the same scenario, re-verified by traversal
    broken = 0
    for _ in range(150):
        colors = rng.sample(range(1, 9), 3)
        lam, xi, rho = colors
        g, col = _exchange_fixture(lam, xi, rho, None)
        assert col.critical_path_exists(lam, xi, 0, 3)
        col.color_exchange(1, 2, 4)
        assert not col.critical_path_exists(lam, xi, 0, 3)
        broken += 1
    assert broken == 150
