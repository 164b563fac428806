import random

import pytest

from acycolor import Graph, TooLarge, check_property_a, property_a_bruteforce
from acycolor.sparsity import witness_violates

from .conftest import all_graphs_on, complete_graph, cycle_graph, grid_graph, random_graph


def test_k4_satisfies():
    assert property_a_bruteforce(complete_graph(4)).satisfied
    assert check_property_a(complete_graph(4)).satisfied


def test_k5_violates_with_checkable_witness():
    g = complete_graph(5)
    verdict = check_property_a(g)
    assert not verdict.satisfied
    assert witness_violates(g, verdict.witness)
    assert property_a_bruteforce(g).witness is not None


def test_k5_plus_isolated_vertices():
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    g = Graph.from_edge_list(15, edges)
    # global count passes (10 <= 29) but the induced clique fails
    assert g.m == 10 <= 2 * g.n - 1
    verdict = check_property_a(g)
    assert not verdict.satisfied
    assert set(verdict.witness) <= set(range(5))
    assert witness_violates(g, verdict.witness)


def test_grid_and_cycle_satisfy():
    assert property_a_bruteforce(grid_graph(3, 3)).satisfied
    assert check_property_a(grid_graph(3, 3)).satisfied
    assert property_a_bruteforce(cycle_graph(5)).satisfied


def test_bruteforce_guard():
    with pytest.raises(TooLarge):
        property_a_bruteforce(Graph.from_edge_list(21, []))


def test_pebble_equals_bruteforce_small():
    for n in range(6):
        for g in all_graphs_on(n):
            assert check_property_a(g).satisfied == property_a_bruteforce(g).satisfied


def test_pebble_equals_bruteforce_random(rng):
    for _ in range(120):
        n = rng.randint(4, 14)
        g = random_graph(n, rng.uniform(0.1, 0.8), rng)
        got = check_property_a(g)
        want = property_a_bruteforce(g)
        assert got.satisfied == want.satisfied
        if not got.satisfied:
            assert witness_violates(g, got.witness)


def test_acceptance_order_independent(rng):
    from acycolor.sparsity import PebbleState

    for _ in range(40):
        n = rng.randint(5, 12)
        g = random_graph(n, 0.5, rng)
        baseline = check_property_a(g).satisfied
        for _ in range(5):
            edges = sorted(g.edges())
            rng.shuffle(edges)
            state = PebbleState(g.n)
            ok = all(state.try_insert(u, v) for u, v in edges)
            assert ok == baseline


def test_subgraph_closure(rng):
    # deleting edges or vertices preserves a satisfied verdict
    from acycolor import gen_random_property_a

    for seed in range(20):
        g = gen_random_property_a(12, 23, seed)
        assert check_property_a(g).satisfied
        edges = sorted(g.edges())
        if edges:
            e = edges[rng.randrange(len(edges))]
            assert check_property_a(g.remove_edge(*e)).satisfied
        keep = [v for v in range(g.n) if rng.random() < 0.7]
        assert check_property_a(g.induced_subgraph(keep)).satisfied


def test_pebble_invariant_counts():
    from acycolor.sparsity import PebbleState

    g = grid_graph(3, 3)
    state = PebbleState(g.n)
    accepted = 0
    for u, v in sorted(g.edges()):
        assert state.try_insert(u, v)
        accepted += 1
        for x in range(g.n):
            assert state.pebbles[x] + len(state.out[x]) == 2
        assert sum(state.pebbles) == 2 * g.n - accepted
