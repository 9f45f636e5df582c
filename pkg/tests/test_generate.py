import random

import pytest
from hypothesis import given, strategies as st

from strongdim.generate import (ComponentSpec, cactus_cograph_instance, generate_instances, grid_graph,
                                parse_components, random_cograph, random_connected)
from strongdim.graph import is_connected
from strongdim.solvers.cograph import build_cotree


def test_parse_components():
    specs = parse_components("cycle:3-9, grid:2x2-3x3,cograph:8")
    assert specs == [ComponentSpec("cycle", (3,), (9,)), ComponentSpec("grid", (2, 2), (3, 3)),
                     ComponentSpec("cograph", (8,), (8,))]
    assert str(specs[1]) == "grid:2x2-3x3" and str(specs[2]) == "cograph:8"


@pytest.mark.parametrize("text", ["", "cycle:2", "blob:3", "grid:3", "cycle:5-3", "cycle"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_components(text)


@given(st.integers(1, 14), st.integers(0, 2**32))
def test_random_cograph_is_connected_cograph(n, seed):
    g = random_cograph(n, random.Random(seed))
    assert g.n == n and is_connected(g)
    build_cotree(g)


@given(st.integers(1, 14), st.integers(0, 2**32))
def test_random_connected(n, seed):
    assert is_connected(random_connected(n, random.Random(seed)))


def test_grid_size():
    g = grid_graph(3, 4)
    assert g.n == 12 and g.edge_count == 2 * 12 - 3 - 4


def test_instances_reproducible_and_bounded():
    specs = parse_components("cycle:3-9,grid:2x2-3x3,cograph:2-8,random:2-7")
    a = generate_instances(specs, 20, 42, max_components=6, max_vertices=40)
    b = generate_instances(specs, 20, 42, max_components=6, max_vertices=40)
    assert [x.graph for x in a] == [x.graph for x in b]
    for inst in a:
        assert is_connected(inst.graph) and inst.graph.n <= 40
        assert 1 <= len(inst.components) <= 6


def test_cactus_instance_size():
    inst = cactus_cograph_instance(500, 1)
    assert 500 <= inst.graph.n < 560 and is_connected(inst.graph)
    assert all(c["size"] <= 50 for c in inst.components)
