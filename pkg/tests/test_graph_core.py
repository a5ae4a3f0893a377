import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fillet.graph_core import (
    Coherent, Graph, Mass, MassedGraph, Violation, ball, check_coherence,
    closed_neighbourhood, complement, components, covers, has_r_centre,
    induced_subgraph, is_anticomplete, is_connected, is_dominant, validate_mass,
)

from conftest import F, complete_graph, cycle_graph, graphs, path_graph


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_induced_subgraph_of_c5_is_path():
    sub, order = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert order == [0, 1, 2]
    assert sorted(sub.edges()) == [(0, 1), (1, 2)]


def test_induced_subgraph_trivial_cases():
    g = cycle_graph(5)
    sub, _ = induced_subgraph(g, range(5))
    assert sorted(sub.edges()) == sorted(g.edges())
    empty, order = induced_subgraph(g, [])
    assert empty.n == 0 and order == []


def test_complement_examples():
    assert complement(complete_graph(3)).edges() == []
    c5 = complement(cycle_graph(5))
    # C5 is self-complementary: the complement is the cycle 0-2-4-1-3
    assert sorted(c5.edges()) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert all(c5.degree(v) == 2 for v in range(5)) and is_connected(c5, range(5))


def test_ball_examples():
    assert ball(path_graph(4), 0, 2) == {0, 1, 2}
    assert ball(path_graph(4), 3, 0) == {3}
    assert ball(cycle_graph(6), 0, 2) == {4, 5, 0, 1, 2}


def test_anticomplete_and_covers_examples():
    p = path_graph(3)
    assert is_anticomplete(p, {0}, {2})
    assert not is_anticomplete(p, {0}, {1})
    assert is_anticomplete(cycle_graph(5), {0, 1}, {3})
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert covers(star, {0}, {1, 2, 3})
    assert covers(star, {1}, set())
    c4 = cycle_graph(4)
    assert covers(c4, {0}, {1, 3})
    assert not covers(c4, {0}, {2})


def test_coherence_examples():
    k2 = MassedGraph.uniform(complete_graph(2))
    assert isinstance(check_coherence(k2, F(3, 5)), Coherent)
    two = MassedGraph.uniform(Graph.empty(2))
    v = check_coherence(two, F(2, 5))
    assert isinstance(v, Violation) and v.kind == "heavy-vertex" and v.masses == (F(1, 2),)
    assert isinstance(check_coherence(MassedGraph.uniform(cycle_graph(7)), 2), Coherent)


def test_coherence_radius_mode_reports_heavy_ball():
    mg = MassedGraph.uniform(path_graph(9))
    v = check_coherence(mg, F(1, 3), r=1)
    assert v.kind == "heavy-ball" or v.kind == "anticomplete-pair"
    v = check_coherence(mg, F(1, 2), r=4)
    assert v.kind == "heavy-ball" and v.masses[0] >= F(1, 2)


def test_dominance_examples():
    c6 = MassedGraph.uniform(cycle_graph(6))
    assert is_dominant(c6, range(6), 1)
    star = MassedGraph.uniform(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert is_dominant(star, {0}, 1)
    assert is_dominant(c6, {0}, F(1, 2))
    assert not is_dominant(c6, {0}, F(2, 3))


def test_r_centre_examples():
    p5 = path_graph(5)
    assert has_r_centre(p5, {3}, 3, 0)
    assert has_r_centre(p5, range(5), 2, 2)
    assert not has_r_centre(p5, range(5), 2, 1)
    assert all(has_r_centre(cycle_graph(6), range(6), v, 3) for v in range(6))


def test_validate_mass_examples():
    assert validate_mass(MassedGraph.uniform(cycle_graph(5)))
    assert validate_mass(Mass.weighted([F(1, 2), F(1, 4), F(1, 4)]))

    class Short:
        n = 3

        def __call__(self, X):
            return F(9, 10) * len(X) / 3

    rep = validate_mass(Short())
    assert not rep and rep.clause == "mu(V) = 1" and rep.witness == (frozenset(range(3)),)


def test_weighted_mass_must_sum_to_one():
    with pytest.raises(ValueError):
        Mass.weighted([F(1, 2), F(1, 3)])


# -- properties -----------------------------------------------------------------

@given(graphs(max_n=8), st.data())
def test_anticomplete_matches_edge_scan(g, data):
    lab = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    A = {v for v in range(g.n) if lab[v] == 1}
    B = {v for v in range(g.n) if lab[v] == 2}
    crossing = sum(1 for u, v in g.edges() if (u in A and v in B) or (u in B and v in A))
    assert is_anticomplete(g, A, B) == (crossing == 0)


@given(graphs(max_n=8))
def test_complement_is_an_involution(g):
    assert sorted(complement(complement(g)).edges()) == sorted(g.edges())
    assert len(g.edges()) + len(complement(g).edges()) == g.n * (g.n - 1) // 2


@given(graphs(min_n=1, max_n=8), st.data())
def test_ball_is_monotone_and_closed(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    prev = set()
    for r in range(g.n + 1):
        b = ball(g, v, r)
        assert prev <= b
        assert ball(g, v, r + 1) >= closed_neighbourhood(g, b) >= b
        prev = b


@given(graphs(max_n=8))
def test_components_partition_vertices(g):
    comps = components(g, range(g.n))
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    for i, a in enumerate(comps):
        assert is_connected(g, a)
        for b in comps[i + 1:]:
            assert is_anticomplete(g, a, b)


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=50)
def test_uniform_mass_satisfies_axioms(g):
    assert validate_mass(MassedGraph.uniform(g))


@given(graphs(min_n=1, max_n=7), st.sampled_from([F(1, 4), F(1, 3), F(1, 2), F(2, 3)]))
def test_coherence_witness_is_genuine(g, eps):
    mg = MassedGraph.uniform(g)
    res = check_coherence(mg, eps)
    if isinstance(res, Violation):
        if res.kind == "heavy-vertex":
            assert mg.mu([res.v]) >= eps
        elif res.kind == "heavy-neighbourhood":
            assert mg.mu(g.adj[res.v]) >= eps
        else:
            assert not res.A & res.B and is_anticomplete(g, res.A, res.B)
            assert min(mg.mu(res.A), mg.mu(res.B)) >= eps
    else:
        assert not res.heuristic
        for A_size in range(1, g.n):
            for A in itertools.combinations(range(g.n), A_size):
                rest = set(range(g.n)) - closed_neighbourhood(g, A)
                assert mg.mu(A) < eps or mg.mu(rest) < eps
