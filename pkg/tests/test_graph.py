import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnkit.generators import complete, cycle, path, random_connected
from burnkit.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    ball,
    induced_subgraph,
    inverse_relabel,
    is_connected,
    min_degree,
    multi_source_bfs,
)
from conftest import connected_graphs
from oracles import naive_distances


def test_min_degree_examples():
    assert min_degree(path(5)) == 1
    assert min_degree(complete(6)) == 5
    assert min_degree(cycle(7)) == 2


def test_min_degree_empty_graph():
    with pytest.raises(GraphError, match="empty graph"):
        min_degree(Graph(0))


def test_multi_source_bfs_examples():
    p = path(5)
    assert multi_source_bfs(p, {0}).dist == (0, 1, 2, 3, 4)
    assert multi_source_bfs(p, {0, 4}).dist == (0, 1, 2, 1, 0)
    pair = Graph(2)
    assert multi_source_bfs(pair, {0})[1] is UNREACHABLE
    with pytest.raises(GraphError):
        multi_source_bfs(p, {7})
    with pytest.raises(GraphError):
        multi_source_bfs(p, set())


def test_ball_examples():
    assert ball(path(5), 2, 1) == {1, 2, 3}
    assert ball(cycle(6), 0, 2) == {4, 5, 0, 1, 2}
    for v in range(6):
        assert ball(complete(6), v, 0) == {v}


def test_is_connected_examples():
    assert is_connected(path(5))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1))
    with pytest.raises(GraphError):
        is_connected(Graph(0))


def test_induced_subgraph_examples():
    sub, relabel = induced_subgraph(path(5), {1, 2, 3})
    assert sub == path(3)
    assert relabel == {1: 0, 2: 1, 3: 2}
    assert induced_subgraph(complete(4), {0, 1})[0] == complete(2)
    sub, _ = induced_subgraph(cycle(6), {0, 2, 4})
    assert sub.n == 3 and sub.m == 0
    with pytest.raises(GraphError):
        induced_subgraph(path(3), set())


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 0)]), (3, [(0, 1), (1, 0)]), (2, [(0, 2)]), (-1, [])],
)
def test_graph_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        Graph(n, edges)


@given(connected_graphs(max_n=25))
def test_graph_invariants(g):
    degs = g.degrees()
    assert sum(degs) == 2 * g.m
    for u in range(g.n):
        assert list(g.adj(u)) == sorted(set(g.adj(u)))
        assert u not in g.adj(u)
        for w in g.adj(u):
            assert u in g.adj(w)


@settings(max_examples=60)
@given(st.integers(1, 50), st.integers(0, 60), st.integers(0, 2**64 - 1))
def test_bfs_matches_relaxation_oracle(n, extra, seed):
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    g = random_connected(n, extra, seed)
    for s in range(0, n, max(1, n // 5)):
        assert list(multi_source_bfs(g, {s}).dist) == naive_distances(g, s)


@given(connected_graphs(max_n=15))
def test_ball_agrees_with_bfs(g):
    for v in range(g.n):
        dist = multi_source_bfs(g, {v}).dist
        for r in range(max(dist) + 1):
            assert ball(g, v, r) == {u for u in range(g.n) if dist[u] <= r}


@given(connected_graphs(max_n=15), st.data())
def test_distance_map_edge_lipschitz(g, data):
    sources = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    dm = multi_source_bfs(g, sources)
    assert {v for v in range(g.n) if dm[v] == 0} == sources
    for u, v in g.edges:
        assert abs(dm[u] - dm[v]) <= 1


@given(connected_graphs(max_n=15), st.data())
def test_induced_subgraph_round_trip(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    sub, relabel = induced_subgraph(g, s)
    back = inverse_relabel(relabel)
    lifted = {tuple(sorted((back[u], back[v]))) for u, v in sub.edges}
    assert lifted == {(u, v) for u, v in g.edges if u in s and v in s}
