"""Checking strong resolving sets and routing with landmark distances.

With a strong resolving set ``R`` as landmarks, the distance between two
vertices is the largest gap between their distances to any landmark, so
each vertex only needs its distance vector to ``R`` to route greedily.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import NotResolving
from .graph import Graph, bfs_distances


def strongly_resolves(g: Graph, w: int, u: int, v: int, dist=None) -> bool:
    """True if a shortest ``w``-``u`` path passes ``v`` or a shortest ``w``-``v`` path passes ``u``."""
    g.check(w)
    g.check(u)
    g.check(v)
    if u == v:
        raise ValueError("u and v must differ")
    if dist is None:
        dw = bfs_distances(g, w)
        duv = bfs_distances(g, u)[v]
    else:
        dw = dist[w]
        duv = dist[u][v]
    return dw[u] == dw[v] + duv or dw[v] == dw[u] + duv


def is_strong_resolving_set(g: Graph, landmarks: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    """Check every pair outside ``landmarks``; returns (ok, first failing pair)."""
    r = sorted(set(landmarks))
    for w in r:
        g.check(w)
    dist = [bfs_distances(g, s) for s in range(g.n)]
    rset = set(r)
    outside = [v for v in range(g.n) if v not in rset]
    for u, v in combinations(outside, 2):
        duv = dist[u][v]
        if not any(dist[w][u] == dist[w][v] + duv or dist[w][v] == dist[w][u] + duv for w in r):
            return False, (u, v)
    return True, None


class Landmarks:
    """Distance vectors of every vertex to a fixed landmark set."""

    def __init__(self, g: Graph, landmarks: Iterable[int], check: bool = False):
        self.g = g
        self.landmarks = sorted(set(landmarks))
        if check:
            ok, pair = is_strong_resolving_set(g, self.landmarks)
            if not ok:
                raise NotResolving(tuple(g.labels[x] for x in pair))
        self.vectors = [bfs_distances(g, w) for w in self.landmarks]

    def distance(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return max((abs(d[u] - d[v]) for d in self.vectors), default=0)

    def next_hop(self, u: int, v: int) -> int:
        """Smallest-labelled neighbour of ``u`` one step closer to ``v``."""
        if u == v:
            raise ValueError("already at target")
        target = self.distance(u, v) - 1
        lab = self.g.labels
        hops = [x for x in self.g.adj[u] if self.distance(x, v) == target]
        if not hops:
            raise NotResolving((lab[u], lab[v]))
        return min(hops, key=lab.__getitem__)

    def walk(self, u: int, v: int) -> list[int]:
        path = [u]
        limit = self.g.n
        while path[-1] != v:
            path.append(self.next_hop(path[-1], v))
            if len(path) > limit:
                raise NotResolving((self.g.labels[u], self.g.labels[v]))
        return path


def landmark_distance(g: Graph, landmarks: Iterable[int], u: int, v: int, check: bool = False) -> int:
    g.check(u)
    g.check(v)
    return Landmarks(g, landmarks, check).distance(u, v)


def next_hop(g: Graph, landmarks: Iterable[int], u: int, v: int, check: bool = False) -> int:
    g.check(u)
    g.check(v)
    return Landmarks(g, landmarks, check).next_hop(u, v)
