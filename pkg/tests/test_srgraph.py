import pytest
from hypothesis import given

from strongdim.errors import Disconnected
from strongdim.generate import complete_graph, cycle_graph, grid_graph, path_graph
from strongdim.graph import Graph
from strongdim.srgraph import (all_maximally_distant_sets, is_mutually_maximally_distant,
                               maximally_distant_set, strong_resolving_graph)

from oracles import md_brute, sr_edges_brute
from strategies import connected_graphs


@given(connected_graphs())
def test_md_matches_definition(g):
    for w in range(g.n):
        assert maximally_distant_set(g, w) == md_brute(g, w)


@given(connected_graphs())
def test_sr_matches_definition(g):
    sr = strong_resolving_graph(g)
    assert sr.label_set(range(sr.n)) == sorted(g.labels)
    assert sr.edge_label_set() == sr_edges_brute(g)


@given(connected_graphs(min_n=2))
def test_md_never_contains_source_and_is_nonempty(g):
    for w, md in enumerate(all_maximally_distant_sets(g)):
        assert md and w not in md


@given(connected_graphs(min_n=2))
def test_mmd_symmetric(g):
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                assert is_mutually_maximally_distant(g, u, v) == is_mutually_maximally_distant(g, v, u)


def test_path_has_single_sr_edge():
    for n in range(2, 12):
        sr = strong_resolving_graph(path_graph(n))
        assert sr.edge_labels() == [tuple(sorted(("x0", f"x{n - 1}")))]


def test_complete_graph_sr_is_complete():
    sr = strong_resolving_graph(complete_graph(6))
    assert sr.edge_count == 15


def test_grid_sr_corner_diagonals():
    sr = strong_resolving_graph(grid_graph(3, 5))
    assert sr.edge_label_set() == {frozenset(("x1_1", "x3_5")), frozenset(("x1_5", "x3_1"))}


def test_even_cycle_sr_is_antipodal_matching():
    sr = strong_resolving_graph(cycle_graph(8))
    assert sr.edge_label_set() == {frozenset((f"x{i}", f"x{i + 4}")) for i in range(4)}


def test_cut_vertex_is_isolated_in_sr():
    g = Graph.from_edge_list([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "c")])
    sr = strong_resolving_graph(g)
    assert sr.degree(sr.id_of("c")) == 0


def test_single_vertex_and_disconnected():
    assert maximally_distant_set(Graph.from_edge_list([], ["a"]), 0) == {0}
    with pytest.raises(Disconnected):
        maximally_distant_set(Graph.from_edge_list([("a", "b"), ("c", "d")]), 0)
