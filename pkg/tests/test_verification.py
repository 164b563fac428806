import pytest

from acycolor import (
    Graph,
    MissingEdge,
    PartialInput,
    TooLarge,
    exact_acyclic_chromatic_index,
    verify,
)

from .conftest import complete_graph, cycle_graph, path_graph, random_graph


def test_verify_bichromatic_c4():
    g = cycle_graph(4)
    rep = verify(g, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2}, 4)
    assert rep.proper and not rep.acyclic
    assert rep.cycle_colors == (1, 2)
    assert sorted(rep.cycle_vertices) == [0, 1, 2, 3]
    assert not rep.ok


def test_verify_valid_c4():
    g = cycle_graph(4)
    rep = verify(g, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 3}, 4)
    assert rep.ok and rep.colors_used == 3


def test_verify_improper():
    g = path_graph(3)
    rep = verify(g, {(0, 1): 1, (1, 2): 1}, 4)
    assert not rep.proper and rep.offending_vertex == 1


def test_verify_partial_input():
    g = path_graph(3)
    with pytest.raises(PartialInput):
        verify(g, {(0, 1): 1}, 4)


def test_verify_extraneous_edge():
    g = path_graph(3)
    with pytest.raises(MissingEdge):
        verify(g, {(0, 1): 1, (1, 2): 2, (0, 2): 3}, 4)


def test_verify_bound():
    g = path_graph(4)
    rep = verify(g, {(0, 1): 1, (1, 2): 2, (2, 3): 5}, 2)
    assert rep.proper and rep.acyclic and not rep.bound_ok


def test_oracle_anchor_values():
    assert exact_acyclic_chromatic_index(path_graph(4)) == 2
    assert exact_acyclic_chromatic_index(cycle_graph(4)) == 3
    assert exact_acyclic_chromatic_index(cycle_graph(5)) == 3
    assert exact_acyclic_chromatic_index(complete_graph(4)) == 5
    k33 = Graph.from_edge_list(6, [(a, b + 3) for a in range(3) for b in range(3)])
    assert exact_acyclic_chromatic_index(k33) == 5


def test_oracle_guard():
    with pytest.raises(TooLarge):
        exact_acyclic_chromatic_index(complete_graph(7))


def test_oracle_empty_and_disconnected():
    assert exact_acyclic_chromatic_index(Graph.from_edge_list(4, [])) == 0
    two_paths = Graph.from_edge_list(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert exact_acyclic_chromatic_index(two_paths) == 2


def test_oracle_solution_verifies(rng):
    from acycolor.verification import solve_exact

    for _ in range(40):
        g = random_graph(rng.randint(3, 7), 0.5, rng)
        if g.m == 0:
            continue
        k = exact_acyclic_chromatic_index(g)
        assignment = solve_exact(g.n, sorted(g.edges()), k)
        assert assignment is not None
        rep = verify(g, assignment, k)
        assert rep.ok and rep.colors_used <= k
        if k > max(g.degrees()):
            assert solve_exact(g.n, sorted(g.edges()), k - 1) is None


def test_oracle_monotone_under_deletion(rng):
    for _ in range(25):
        g = random_graph(rng.randint(4, 7), 0.55, rng)
        if g.m == 0:
            continue
        base = exact_acyclic_chromatic_index(g)
        for e in sorted(g.edges()):
            assert exact_acyclic_chromatic_index(g.remove_edge(*e)) <= base
