import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acycolor import (
    DuplicateEdge,
    Graph,
    MissingEdge,
    SelfLoop,
    VertexOutOfRange,
    edge_key,
)

from .conftest import (
    brute_force_triangle,
    complete_graph,
    cycle_graph,
    grid_graph,
    petersen_graph,
)


def test_empty_graph():
    g = Graph.from_edge_list(3, [])
    assert g.n == 3 and g.m == 0
    assert g.metrics().degree_sequence == (0, 0, 0)


def test_duplicate_edge_normalization():
    with pytest.raises(DuplicateEdge):
        Graph.from_edge_list(3, [(0, 1), (1, 0)])


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        Graph.from_edge_list(3, [(1, 1)])


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        Graph.from_edge_list(3, [(0, 3)])


def test_c4_metrics():
    g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    m = g.metrics()
    assert (m.n, m.m, m.max_degree, m.min_degree) == (4, 4, 2, 2)


def test_k4_metrics():
    m = complete_graph(4).metrics()
    assert (m.n, m.m, m.max_degree, m.min_degree) == (4, 6, 3, 3)


def test_grid_metrics():
    m = grid_graph(3, 3).metrics()
    assert (m.n, m.m, m.max_degree, m.min_degree) == (9, 12, 4, 2)


def test_triangle_free_c4():
    flag, witness = cycle_graph(4).is_triangle_free()
    assert flag and witness is None


def test_triangle_free_k4():
    g = complete_graph(4)
    flag, witness = g.is_triangle_free()
    assert not flag
    a, b, c = witness
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


def test_triangle_free_petersen():
    g = petersen_graph()
    assert brute_force_triangle(g) is None  # oracle for the expectation
    flag, witness = g.is_triangle_free()
    assert flag and witness is None


def test_triangle_free_agrees_with_bruteforce(rng):
    from .conftest import random_graph

    for _ in range(60):
        g = random_graph(8, rng.random(), rng)
        assert g.is_triangle_free()[0] == (brute_force_triangle(g) is None)


def test_remove_edge_c4_gives_p4():
    g = cycle_graph(4)
    h = g.remove_edge(0, 1)
    assert h.m == 3 and h.metrics().degree_sequence == (2, 2, 1, 1)
    with pytest.raises(MissingEdge):
        h.remove_edge(0, 1)


def test_remove_then_add_roundtrips():
    g = grid_graph(2, 3)
    for e in g.edges():
        assert g.remove_edge(*e).add_edge(*e) == g


def test_induced_subgraph():
    assert complete_graph(4).induced_subgraph([0, 1, 2]) == complete_graph(3)
    assert cycle_graph(5).induced_subgraph([1, 2]) == Graph.from_edge_list(2, [(0, 1)])
    g = grid_graph(3, 3)
    assert g.induced_subgraph(range(g.n)) == g


def test_edge_key_orderings_equal():
    assert edge_key(3, 1) == edge_key(1, 3) == (1, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_handshake_identity(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    g = Graph.from_edge_list(n, chosen)
    assert sum(g.degrees()) == 2 * g.m


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.data())
def test_removal_roundtrip_property(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(
        st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs))
    )
    g = Graph.from_edge_list(n, chosen)
    e = data.draw(st.sampled_from(sorted(g.edges())))
    assert g.remove_edge(*e).add_edge(*e) == g
