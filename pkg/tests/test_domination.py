from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnkit.burning import verify_schedule
from burnkit.domination import (
    HopDomWitness,
    burn_via_mindeg,
    burn_via_weakdeg,
    connected_2hop_dominating,
    greedy_cds,
    nonleaf_cds,
    verify_hop_domination,
)
from burnkit.generators import complete, cycle, path, petersen, random_regular, star
from burnkit.graph import Graph, GraphError, min_degree, multi_source_bfs
from conftest import connected_graphs
from oracles import is_cds, min_cds_size


def check_growth_trace(g, witness, trace):
    """Recompute every H_t and a_t from scratch and check the growth invariants."""
    k = min_degree(g)
    n = g.n
    h = {trace.start}
    a_values = trace.a_values()
    for step, a_t in zip(trace.steps, a_values):
        dist = multi_source_bfs(g, h).dist
        assert a_t == sum(1 for d in dist if d <= 1)
        assert dist[step.v] == 3
        assert step.path[0] in h and step.path[-1] == step.v and len(step.path) == 4
        assert all(b in g.adj(a) for a, b in zip(step.path, step.path[1:]))
        h.update(step.path)
        assert len(h) == step.size_after == 1 + 3 * (step.t + 1)
    assert h == set(witness.vertices)
    final = multi_source_bfs(g, h).dist
    assert a_values[-1] == sum(1 for d in final if d <= 1)
    assert max(final) <= 2
    assert a_values[0] >= k + 1
    for a, b in zip(a_values, a_values[1:]):
        assert b >= a + k + 1
    assert len(trace.steps) <= n // (k + 1) - 1


def test_2hop_examples():
    w, trace = connected_2hop_dominating(complete(6), 0)
    assert w.vertices == {0} and not trace.steps

    # hand simulation: 0-1-2-3 then 3-4-5-6
    w, trace = connected_2hop_dominating(path(7), 0)
    assert [s.path for s in trace.steps] == [(0, 1, 2, 3), (3, 4, 5, 6)]
    assert len(w) == 7 == 3 * (7 // 2) - 2

    w, trace = connected_2hop_dominating(cycle(6), 0)
    assert w.vertices == {0, 1, 2, 3} and len(trace.steps) == 1
    assert len(w) == 3 * (6 // 3) - 2

    for g in (complete(6), path(7), cycle(6)):
        check_growth_trace(g, *connected_2hop_dominating(g, 0))


def test_2hop_rejects_disconnected():
    with pytest.raises(GraphError):
        connected_2hop_dominating(Graph(3, [(0, 1)]))


def test_verify_hop_domination_examples():
    assert verify_hop_domination(path(5), HopDomWitness({2}, 2))
    assert not verify_hop_domination(path(7), HopDomWitness({3}, 2))
    assert not verify_hop_domination(cycle(6), HopDomWitness({0, 3}, 1))
    with pytest.raises(GraphError):
        verify_hop_domination(path(3), HopDomWitness({5}, 1))


def test_nonleaf_cds_examples():
    assert nonleaf_cds(path(4)).vertices == {1, 2}
    assert nonleaf_cds(star(5)).vertices == {0}
    assert nonleaf_cds(cycle(5)).vertices == set(range(5))
    with pytest.raises(GraphError, match="too small"):
        nonleaf_cds(path(2))


def test_greedy_cds_examples():
    assert len(greedy_cds(complete(4))) == 1
    assert greedy_cds(path(5)).vertices == {1, 2, 3}
    assert min_cds_size(path(5)) == 3
    assert greedy_cds(path(2)).vertices == {0, 1}


def test_greedy_cds_petersen():
    w = greedy_cds(petersen())
    assert verify_hop_domination(petersen(), w)
    assert min_cds_size(petersen()) == 4
    # leaf pruning in smallest-index order stalls one above the optimum
    assert w.vertices == {0, 4, 5, 7, 9}


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=40, max_extra=60), st.data())
def test_2hop_property(g, data):
    start = data.draw(st.integers(0, g.n - 1))
    w, trace = connected_2hop_dominating(g, start)
    assert verify_hop_domination(g, w)
    if g.n >= 2:
        assert len(w) <= 3 * (g.n // (min_degree(g) + 1)) - 2
    check_growth_trace(g, w, trace)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=3, max_n=30, max_extra=40))
def test_cds_producers_are_valid(g):
    for w in (nonleaf_cds(g), greedy_cds(g)):
        assert w.hops == 1
        assert verify_hop_domination(g, w)
        assert is_cds(g, w.vertices)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=3, max_n=11, max_extra=8))
def test_greedy_cds_never_beats_oracle(g):
    assert len(greedy_cds(g)) >= min_cds_size(g)


def test_mindeg_pipeline_examples():
    s, r = burn_via_mindeg(complete(6))
    assert r.h_size == 1 and s.length == 3 and verify_schedule(complete(6), s)

    # exact solver: b(C_6) = 3, b(P_4) = 2
    s, r = burn_via_mindeg(cycle(6))
    assert r.h_size == 4 and r.h_schedule_length == 2 and s.length == 4
    assert verify_schedule(cycle(6), s)


def test_mindeg_pipeline_large_regular():
    g = random_regular(2000, 8, 1)
    s, r = burn_via_mindeg(g)
    assert verify_schedule(g, s)
    assert r.bounds.thm1_ref == 26
    assert s.length == r.h_schedule_length + 2
    assert r.h_size <= r.lemma2_bound


def test_weakdeg_pipeline_examples():
    s, r = burn_via_weakdeg(star(9), Fraction(1, 2))
    assert r.branch == "leaf" and r.cds_size == 1 and s.length == 2

    # exact solver on P_7 gives 3
    s, r = burn_via_weakdeg(path(9), Fraction(1, 5))
    assert r.branch == "leaf" and r.cds_size == 7 and r.d_schedule_length == 3 and s.length == 4


def test_weakdeg_pipeline_cycle_with_chord_and_pendant():
    g = Graph(10, list(cycle(9).edges) + [(0, 4), (0, 9)])
    # one leaf already meets eps*n/3 = 2/3 at eps = 0.2
    s, r = burn_via_weakdeg(g, Fraction(1, 5))
    assert r.branch == "leaf" and verify_schedule(g, s)
    s, r = burn_via_weakdeg(g, Fraction(1, 2))
    assert r.branch == "reduction" and verify_schedule(g, s)
    assert s.length == r.d_schedule_length + 1
    assert s.length >= 3  # oracle burning number of this graph


def test_weakdeg_rejects_bad_epsilon_and_tiny_graphs():
    with pytest.raises(ValueError):
        burn_via_weakdeg(path(5), 0)
    with pytest.raises(GraphError):
        burn_via_weakdeg(path(2), Fraction(1, 2))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=3, max_n=30, max_extra=30), st.sampled_from([Fraction(1, 10), Fraction(1, 2), 1]))
def test_pipelines_always_valid(g, eps):
    s, r = burn_via_mindeg(g, exact_threshold=8)
    assert verify_schedule(g, s) and s.length == r.h_schedule_length + 2
    s, r = burn_via_weakdeg(g, eps, exact_threshold=8)
    assert verify_schedule(g, s) and s.length == r.d_schedule_length + 1
    leaves = sum(1 for v in range(g.n) if g.degree(v) == 1)
    if r.branch == "leaf":
        assert r.cds_size == g.n - leaves
