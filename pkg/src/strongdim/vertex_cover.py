"""Exact minimum vertex covers by branch and bound.

Branches on a maximum-degree vertex (take it, or take all its neighbours),
applies degree-0/degree-1 reductions, and prunes with a maximal-matching
lower bound. Ties go to the smallest label so results are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceeded
from .graph import Graph, connected_components

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "STRONGDIM_VC_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class CoverResult:
    vertices: frozenset
    size: int

    @classmethod
    def of(cls, vertices: Iterable) -> CoverResult:
        vs = frozenset(vertices)
        return cls(vs, len(vs))

    def labels(self, g: Graph) -> list[str]:
        return g.label_set(self.vertices)


class _Search:
    def __init__(self, rank: list, budget: int):
        self.rank = rank
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)

    def matching_bound(self, adj: dict[int, set[int]]) -> int:
        matched = set()
        size = 0
        for u in adj:
            if u in matched:
                continue
            for v in adj[u]:
                if v not in matched:
                    matched.add(u)
                    matched.add(v)
                    size += 1
                    break
        return size

    def reduce(self, adj: dict[int, set[int]]) -> set[int]:
        """Apply degree-0/1 rules in place; returns the forced vertices."""
        taken = set()
        rank = self.rank
        while True:
            for u in [u for u, nb in adj.items() if not nb]:
                del adj[u]
            leaves = [u for u, nb in adj.items() if len(nb) == 1]
            if not leaves:
                return taken
            leaf = min(leaves, key=rank.__getitem__)
            (u,) = adj[leaf]
            taken.add(u)
            _remove(adj, u)

    def best(self, adj: dict[int, set[int]], limit: int) -> set[int] | None:
        """Minimum cover of ``adj`` if one smaller than ``limit`` exists."""
        self.tick()
        adj = {u: set(nb) for u, nb in adj.items()}
        taken = self.reduce(adj)
        if len(taken) >= limit:
            return None
        if not adj:
            return taken
        if len(taken) + self.matching_bound(adj) >= limit:
            return None
        rank = self.rank
        v = min(adj, key=lambda u: (-len(adj[u]), rank[u]))
        found = None
        room = limit - len(taken)

        with_v = {u: nb for u, nb in adj.items()}
        _remove_copy(with_v, v)
        sub = self.best(with_v, room - 1)
        if sub is not None:
            found = sub | {v}
            room = len(found)

        nbrs = adj[v]
        if len(nbrs) < room:
            without_v = {u: nb for u, nb in adj.items()}
            for u in sorted(nbrs, key=rank.__getitem__):
                _remove_copy(without_v, u)
            without_v.pop(v, None)
            sub = self.best(without_v, room - len(nbrs))
            if sub is not None:
                found = sub | nbrs

        return None if found is None else taken | found


def _remove(adj: dict[int, set[int]], u: int):
    for w in adj.pop(u):
        adj[w].discard(u)


def _remove_copy(adj: dict[int, set[int]], u: int):
    """Remove ``u``, copying each touched neighbour set (shared with caller)."""
    for w in adj.pop(u):
        if w in adj:
            adj[w] = adj[w] - {u}


def _label_rank(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=g.labels.__getitem__)
    rank = [0] * g.n
    for r, v in enumerate(order):
        rank[v] = r
    return rank


def _greedy_cover(adj: dict[int, set[int]]) -> set[int]:
    cover = set()
    for u in adj:
        for v in adj[u]:
            if u not in cover and v not in cover:
                cover.add(u)
                cover.add(v)
    return cover


def min_vertex_cover(g: Graph, budget: int | None = None) -> CoverResult:
    """Exact minimum vertex cover of ``g``; connected components solved apart."""
    search = _Search(_label_rank(g), default_budget() if budget is None else budget)
    cover: set[int] = set()
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        adj = {u: set(g.adj[u]) for u in comp}
        upper = _greedy_cover(adj)
        found = search.best(adj, len(upper))
        cover |= upper if found is None else found
    return CoverResult.of(cover)


def min_vertex_cover_containing(g: Graph, forced: Iterable[int], budget: int | None = None) -> CoverResult:
    """Smallest vertex cover of ``g`` that includes every vertex of ``forced``."""
    forced = {g.check(v) for v in forced}
    rest = min_vertex_cover(g.without(forced), budget)
    return CoverResult.of(forced | rest.vertices)


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges())
