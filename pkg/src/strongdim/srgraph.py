"""Maximally distant vertices and the strong resolving graph, by plain BFS."""

from __future__ import annotations

from .errors import Disconnected
from .graph import UNREACHABLE, Graph, bfs_distances


def _md_from_dist(g: Graph, dist: list[int]) -> set[int]:
    return {u for u in range(g.n) if all(dist[v] <= dist[u] for v in g.adj[u])}


def _connected_dist(g: Graph, w: int) -> list[int]:
    dist = bfs_distances(g, w)
    if UNREACHABLE in dist:
        raise Disconnected("graph is not connected")
    return dist


def maximally_distant_set(g: Graph, w: int) -> set[int]:
    """Vertices none of whose neighbours lies farther from ``w``."""
    return _md_from_dist(g, _connected_dist(g, w))


def all_maximally_distant_sets(g: Graph) -> list[set[int]]:
    return [maximally_distant_set(g, w) for w in range(g.n)]


def is_mutually_maximally_distant(g: Graph, u: int, v: int) -> bool:
    g.check(u)
    g.check(v)
    if u == v:
        raise ValueError("u and v must differ")
    return u in maximally_distant_set(g, v) and v in maximally_distant_set(g, u)


def strong_resolving_graph(g: Graph, md: list[set[int]] | None = None) -> Graph:
    """SR(G): same vertices, edges between mutually maximally distant pairs.

    One BFS per vertex. ``md`` may carry precomputed maximally distant sets.
    """
    if md is None:
        md = all_maximally_distant_sets(g)
    nbrs = [[v for v in md[u] if v != u and u in md[v]] for u in range(g.n)]
    return Graph(g.labels, nbrs)
