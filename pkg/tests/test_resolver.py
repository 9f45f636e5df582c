from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from strongdim.errors import NotResolving
from strongdim.frame import solve
from strongdim.generate import cycle_graph, path_graph
from strongdim.graph import bfs_distances
from strongdim.resolver import Landmarks, is_strong_resolving_set, landmark_distance, next_hop, strongly_resolves
from strongdim.srgraph import strong_resolving_graph
from strongdim.vertex_cover import is_vertex_cover

from oracles import all_pairs, resolves_by_definition
from strategies import connected_graphs


@given(connected_graphs(min_n=2, max_n=8))
def test_strongly_resolves_matches_definition(g):
    d = all_pairs(g)
    for w in range(g.n):
        for u, v in combinations(range(g.n), 2):
            assert strongly_resolves(g, w, u, v) == resolves_by_definition(d, w, u, v)


@given(connected_graphs(min_n=2, max_n=8), st.data())
@settings(max_examples=80)
def test_resolving_iff_cover_of_sr(g, data):
    r = data.draw(st.sets(st.integers(0, g.n - 1)))
    ok, pair = is_strong_resolving_set(g, r)
    assert ok == is_vertex_cover(strong_resolving_graph(g), r)
    if not ok:
        u, v = pair
        assert u not in r and v not in r
        assert not any(strongly_resolves(g, w, u, v) for w in r)


@given(connected_graphs(min_n=2, max_n=10))
def test_navigation_with_optimal_landmarks(g):
    lm = Landmarks(g, solve(g).vertices, check=True)
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(g.n):
            assert lm.distance(u, v) == dist[v]
            if u != v:
                path = lm.walk(u, v)
                assert len(path) - 1 == dist[v]
                assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def test_next_hop_prefers_smallest_label():
    g = cycle_graph(4)
    lm = solve(g).vertices
    a, c = g.id_of("x0"), g.id_of("x2")
    assert g.labels[next_hop(g, lm, a, c)] == "x1"
    assert landmark_distance(g, lm, a, c) == 2


def test_check_rejects_non_resolving():
    g = path_graph(4)
    with pytest.raises(NotResolving):
        Landmarks(g, [g.id_of("x1")], check=True)


def test_next_hop_at_target():
    g = path_graph(3)
    with pytest.raises(ValueError):
        next_hop(g, [0], 1, 1)
