"""Fallback for arbitrary components: build SR(H) directly, then exact search."""

from __future__ import annotations

from ..graph import Graph
from ..srgraph import all_maximally_distant_sets, strong_resolving_graph
from ..vertex_cover import min_vertex_cover, min_vertex_cover_containing
from .base import ComponentAnswer


def generic_solver(h: Graph, excluded, queries, budget: int | None = None) -> ComponentAnswer:
    excluded = set(excluded)
    md = all_maximally_distant_sets(h)
    sr = strong_resolving_graph(h, md).without(excluded)
    base = min_vertex_cover(sr, budget)
    forced = {q: md[q] - excluded for q in queries}
    covers = {q: min_vertex_cover_containing(sr, f, budget) for q, f in forced.items()}

    def witness(q):
        return base.vertices if q is None else covers[q].vertices

    return ComponentAnswer("generic", base.size, {q: c.size for q, c in covers.items()}, witness)


class GenericSolver:
    name = "generic"

    def __init__(self, budget: int | None = None):
        self.budget = budget

    def detect(self, h: Graph):
        return True

    def solve(self, h: Graph, prepared, excluded, queries) -> ComponentAnswer:
        return generic_solver(h, excluded, queries, self.budget)
