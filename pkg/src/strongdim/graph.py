"""Undirected simple graphs with stable text labels and dense integer ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import SelfLoop, UnknownVertex

UNREACHABLE = -1


class Graph:
    """Immutable undirected simple graph.

    Vertices are ids ``0..n-1``; ``labels[i]`` is the external name of
    vertex ``i``. Neighbour lists are sorted tuples of ids.
    """

    __slots__ = ("labels", "adj", "_index", "_adj_sets")

    def __init__(self, labels: Sequence[str], adj: Sequence[Iterable[int]]):
        if len(labels) != len(adj):
            raise ValueError("labels and adjacency differ in length")
        self.labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate vertex labels")
        self.adj = tuple(tuple(sorted(set(nb))) for nb in adj)
        self._adj_sets = None
        n = len(self.labels)
        for u, nb in enumerate(self.adj):
            for v in nb:
                if v == u:
                    raise SelfLoop(self.labels[u])
                if not 0 <= v < n:
                    raise UnknownVertex(v)
        if any(u not in self.adj_sets[v] for u, nb in enumerate(self.adj) for v in nb):
            raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edge_list(cls, edges: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Graph:
        """Build a graph from label pairs; ids follow first appearance."""
        index: dict[str, int] = {}
        nbrs: list[set[int]] = []

        def vid(lab):
            lab = str(lab)
            if lab not in index:
                index[lab] = len(nbrs)
                nbrs.append(set())
            return index[lab]

        for lab in vertices:
            vid(lab)
        for a, b in edges:
            if str(a) == str(b):
                raise SelfLoop(str(a))
            u, v = vid(a), vid(b)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(list(index), nbrs)

    @classmethod
    def from_ids(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise SelfLoop(u if labels is None else labels[u])
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(labels, nbrs)

    @property
    def n(self) -> int:
        return len(self.labels)

    vertex_count = n

    @property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        if self._adj_sets is None:
            self._adj_sets = tuple(frozenset(nb) for nb in self.adj)
        return self._adj_sets

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.labels) == set(other.labels) and self.edge_label_set() == other.edge_label_set()

    __hash__ = None

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(label) from None

    def ids(self, labels: Iterable[str]) -> set[int]:
        return {self.id_of(lab) for lab in labels}

    def label_set(self, ids: Iterable[int]) -> list[str]:
        """Labels of ``ids`` sorted for output."""
        return sorted(self.labels[i] for i in ids)

    def has_vertex(self, label: str) -> bool:
        return label in self._index

    def check(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownVertex(v)
        return v

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adj) for v in nb if u < v]

    def edge_label_set(self) -> set[frozenset[str]]:
        lab = self.labels
        return {frozenset((lab[u], lab[v])) for u, v in self.edges()}

    def edge_labels(self) -> list[tuple[str, str]]:
        """Edges as label pairs, each pair and the list sorted."""
        lab = self.labels
        return sorted(tuple(sorted((lab[u], lab[v]))) for u, v in self.edges())

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph with local ids, plus the local -> global id map."""
        glob = sorted(set(vertices))
        local = {g: i for i, g in enumerate(glob)}
        nbrs = [[local[w] for w in self.adj[g] if w in local] for g in glob]
        return Graph([self.labels[g] for g in glob], nbrs), glob

    def without(self, vertices: Iterable[int]) -> Graph:
        """Same vertex set with every edge touching ``vertices`` removed."""
        drop = set(vertices)
        return Graph(self.labels, [() if u in drop else [v for v in nb if v not in drop] for u, nb in enumerate(self.adj)])


def bfs_distances(g: Graph, s: int) -> list[int]:
    """Hop distances from ``s``; ``UNREACHABLE`` outside its component."""
    g.check(s)
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps
