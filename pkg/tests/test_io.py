import pytest
from hypothesis import given

from strongdim.decomposition import build_decomposition_tree
from strongdim.errors import ParseError
from strongdim.generate import cycle_graph
from strongdim.graph import Graph
from strongdim.io import decomposition_dot, format_edge_list, graph_dot, parse_edge_list, read_edge_list

from strategies import any_graphs


def test_comments_blank_lines_and_vertex_lines():
    g = parse_edge_list("# header\n\na b  # trailing\nv lonely\nb c\n")
    assert sorted(g.labels) == ["a", "b", "c", "lonely"]
    assert g.edge_count == 2


@pytest.mark.parametrize("text", ["", "# nothing\n", "a\n", "a b c\n", "a a\n"])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        read_edge_list(str(tmp_path / "none.txt"))


@given(any_graphs())
def test_round_trip(g):
    assert parse_edge_list(format_edge_list(g, "some\nheader")) == g


def test_graph_dot_lists_isolated_vertices():
    dot = graph_dot(Graph.from_edge_list([("a", "b")], ["z"]), "SR")
    assert dot.startswith("graph SR {")
    assert '"z";' in dot and '"a" -- "b";' in dot


def test_decomposition_dot():
    g = Graph.from_edge_list([("a", "b"), ("b", "v"), ("v", "a"), ("v", "c"), ("c", "d"), ("d", "v")])
    dot = decomposition_dot(build_decomposition_tree(g))
    assert dot.count("shape=box") == 2 and dot.count("shape=circle") == 1
    assert dot.count(" -- ") == 2


def test_cycle_dot_has_one_block():
    dot = decomposition_dot(build_decomposition_tree(cycle_graph(5)))
    assert dot.count("shape=box") == 1 and "circle" not in dot


def test_leading_v_token_declares_a_vertex():
    g = parse_edge_list("v a\na b\n")
    assert g.edge_count == 1 and sorted(g.labels) == ["a", "b"]
