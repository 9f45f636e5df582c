import pytest
from hypothesis import given, strategies as st

from strongdim.errors import BudgetExceeded
from strongdim.generate import complete_graph, cycle_graph
from strongdim.graph import Graph
from strongdim.vertex_cover import (default_budget, is_vertex_cover, min_vertex_cover,
                                    min_vertex_cover_containing)

from oracles import graph_mvc_exhaustive
from strategies import any_graphs


@given(any_graphs(max_n=12))
def test_mvc_matches_exhaustive(g):
    cover = min_vertex_cover(g)
    assert is_vertex_cover(g, cover.vertices)
    assert cover.size == len(cover.vertices) == graph_mvc_exhaustive(g)


@given(any_graphs(max_n=10), st.data())
def test_forced_cover_matches_exhaustive(g, data):
    forced = data.draw(st.sets(st.integers(0, g.n - 1), max_size=3))
    cover = min_vertex_cover_containing(g, forced)
    assert forced <= cover.vertices and is_vertex_cover(g, cover.vertices)
    assert cover.size == graph_mvc_exhaustive(g, forced)


@given(any_graphs(max_n=10), st.data())
def test_forcing_never_helps(g, data):
    forced = data.draw(st.sets(st.integers(0, g.n - 1), max_size=3))
    assert min_vertex_cover_containing(g, forced).size >= min_vertex_cover(g).size


def test_known_values():
    assert min_vertex_cover(complete_graph(7)).size == 6
    assert min_vertex_cover(cycle_graph(9)).size == 5
    assert min_vertex_cover(Graph.from_edge_list([], ["a"])).size == 0


def test_labels_are_sorted():
    g = Graph.from_edge_list([("b", "a")])
    assert min_vertex_cover(g).labels(g) in (["a"], ["b"])


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        min_vertex_cover(complete_graph(30), budget=5)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("STRONGDIM_VC_BUDGET", "123")
    assert default_budget() == 123
