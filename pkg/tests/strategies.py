"""Hypothesis strategies producing small connected graphs."""

import random

from hypothesis import strategies as st

from strongdim.generate import random_cograph, random_connected
from strongdim.graph import Graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, 1)}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return Graph.from_ids(n, sorted(edges), [f"v{i}" for i in range(n)])


@st.composite
def cographs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    return random_cograph(n, random.Random(draw(st.integers(0, 2**32))))


@st.composite
def any_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_ids(n, edges)


def seeded_connected(seed, n):
    return random_connected(n, random.Random(seed))
