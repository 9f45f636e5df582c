"""Co-graph components via canonical co-trees.

In a connected co-graph two vertices are mutually maximally distant exactly
when they are non-adjacent or true twins, so the strong resolving graph is
again a co-graph. Its co-tree comes from the input's canonical co-tree by
swapping union and join and gathering each join's leaf children under a
fresh twin-join node. Minimum covers are then read off bottom-up
(``alg1_vc``); the forced covers for all vertices at once come from
top-down increments (``alg3_increments``) with ``n(parent) - n(leaf) + m(parent)``.
Excluded vertices are handled by giving their leaves weight 0.
"""

from __future__ import annotations

from collections import deque

from ..errors import NotACograph, UnknownVertex
from ..graph import Graph
from .base import ComponentAnswer

UNION = "union"
JOIN = "join"
TWIN_JOIN = "twin-join"
LEAF = "leaf"

_SWAP = {UNION: JOIN, JOIN: UNION, LEAF: LEAF}


class CoTree:
    """Rooted co-tree over node ids ``0..size-1``.

    ``vertex[x]`` is the graph vertex of leaf ``x``; ``leaf_of`` inverts it.
    ``n``, ``vc`` and ``m`` hold per-node counts; -1 marks undefined.
    """

    def __init__(self):
        self.kind: list[str] = []
        self.children: list[list[int]] = []
        self.parent: list[int] = []
        self.vertex: list[int | None] = []
        self.leaf_of: dict[int, int] = {}
        self.root = -1
        self.n: list[int] = []
        self.vc: list[int] = []
        self.m: list[int] = []

    def add(self, kind: str, parent: int = -1, vertex: int | None = None) -> int:
        x = len(self.kind)
        self.kind.append(kind)
        self.children.append([])
        self.parent.append(parent)
        self.vertex.append(vertex)
        self.n.append(-1)
        self.vc.append(-1)
        self.m.append(-1)
        if parent >= 0:
            self.children[parent].append(x)
        else:
            self.root = x
        if vertex is not None:
            self.leaf_of[vertex] = x
        return x

    def __len__(self):
        return len(self.kind)

    def is_leaf(self, x: int) -> bool:
        return self.kind[x] == LEAF

    def preorder(self) -> list[int]:
        out = []
        stack = [self.root]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(reversed(self.children[x]))
        return out

    def leaves(self, x: int) -> list[int]:
        """Graph vertices below node ``x``."""
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            if self.kind[y] == LEAF:
                out.append(self.vertex[y])
            else:
                stack.extend(self.children[y])
        return out

    def set_counts(self, excluded=()) -> None:
        """Fill ``n`` with leaf counts, excluded leaves weighing 0."""
        excluded = set(excluded)
        for x in reversed(self.preorder()):
            if self.kind[x] == LEAF:
                self.n[x] = 0 if self.vertex[x] in excluded else 1
            else:
                self.n[x] = sum(self.n[c] for c in self.children[x])

    def is_canonical(self) -> bool:
        for x, kind in enumerate(self.kind):
            if kind == LEAF:
                continue
            for c in self.children[x]:
                ck = self.kind[c]
                if ck == kind or (kind == TWIN_JOIN and ck != LEAF):
                    return False
                if kind == JOIN and ck == TWIN_JOIN:
                    return False
        return True

    def realize(self, labels) -> Graph:
        """The graph this co-tree describes (join-type nodes connect subtrees)."""
        edges = []
        for x, kind in enumerate(self.kind):
            if kind in (JOIN, TWIN_JOIN):
                parts = [self.leaves(c) for c in self.children[x]]
                for i in range(len(parts)):
                    for k in range(i + 1, len(parts)):
                        edges.extend((a, b) for a in parts[i] for b in parts[k])
        return Graph.from_ids(len(labels), edges, labels)


def _components(vertices: list[int], adjacent) -> list[list[int]]:
    """Connected components of the graph on ``vertices`` given by ``adjacent(u)``."""
    remaining = set(vertices)
    comps = []
    for s in vertices:
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            nxt = adjacent(u, remaining)
            remaining -= nxt
            comp.extend(nxt)
            queue.extend(nxt)
        comps.append(sorted(comp))
    return comps


def _induced_p4(h: Graph, vertices: list[int]) -> tuple[int, int, int, int]:
    inside = set(vertices)
    adj = h.adj_sets
    for b in vertices:
        for c in adj[b] & inside:
            if c < b:
                continue
            left = (adj[b] & inside) - adj[c] - {c}
            right = (adj[c] & inside) - adj[b] - {b}
            for a in sorted(left):
                for d in sorted(right):
                    if d not in adj[a]:
                        return a, b, c, d
    raise AssertionError("connected and co-connected part without induced P4")


def build_cotree(h: Graph) -> CoTree:
    """Canonical co-tree by recursive splitting into components / co-components.

    Raises ``NotACograph`` with an induced P4 (as labels) when a part is
    connected in both the graph and its complement.
    """
    adj = h.adj_sets
    tree = CoTree()
    if h.n == 0:
        raise ValueError("empty graph")

    def in_graph(u, remaining):
        return adj[u] & remaining

    def in_complement(u, remaining):
        return remaining - adj[u] - {u}

    stack: list[tuple[list[int], int]] = [(list(range(h.n)), -1)]
    while stack:
        part, parent = stack.pop()
        if len(part) == 1:
            tree.add(LEAF, parent, part[0])
            continue
        comps = _components(part, in_graph)
        if len(comps) > 1:
            node = tree.add(UNION, parent)
        else:
            comps = _components(part, in_complement)
            if len(comps) == 1:
                witness = _induced_p4(h, part)
                raise NotACograph([h.labels[v] for v in witness])
            node = tree.add(JOIN, parent)
        for comp in reversed(comps):
            stack.append((comp, node))
    return tree


def sr_cotree(tg: CoTree) -> CoTree:
    """Co-tree of the strong resolving graph, sharing node ids with ``tg``.

    Union and join swap; the leaf children of each new union node (an old
    join node) are moved under a new twin-join child, even if that leaves
    the union node with a single child.
    """
    if -1 in tg.n:
        tg.set_counts()
    ts = CoTree()
    for x in range(len(tg)):
        ts.kind.append(_SWAP[tg.kind[x]])
        ts.children.append(list(tg.children[x]))
        ts.parent.append(tg.parent[x])
        ts.vertex.append(tg.vertex[x])
        ts.n.append(tg.n[x])
        ts.vc.append(-1)
        ts.m.append(-1)
    ts.root = tg.root
    ts.leaf_of = dict(tg.leaf_of)
    for x in range(len(tg)):
        if ts.kind[x] != UNION:
            continue
        leaves = [c for c in ts.children[x] if ts.kind[c] == LEAF]
        if len(leaves) < 2:
            continue
        ts.children[x] = [c for c in ts.children[x] if ts.kind[c] != LEAF]
        tj = ts.add(TWIN_JOIN, x)
        ts.n[tj] = sum(ts.n[c] for c in leaves)
        for c in leaves:
            ts.children[tj].append(c)
            ts.parent[c] = tj
    return ts


def _join_choice(ts: CoTree, x: int) -> int:
    n = ts.n
    best = None
    for c in ts.children[x]:
        val = n[x] - n[c] + ts.vc[c]
        if best is None or val < best[0]:
            best = (val, c)
    return best[1]


def alg1_vc(ts: CoTree) -> CoTree:
    """Minimum vertex cover size of every subtree of an SR co-tree (``n`` must be set)."""
    for x in reversed(ts.preorder()):
        kind = ts.kind[x]
        if kind == LEAF:
            ts.vc[x] = 0
        elif kind == UNION:
            ts.vc[x] = sum(ts.vc[c] for c in ts.children[x])
        else:
            ts.vc[x] = min(ts.n[x] - ts.n[c] + ts.vc[c] for c in ts.children[x])
    return ts


def _sibling_sum(ts: CoTree, v: int, u: int) -> int:
    vals = ts.n if ts.kind[v] in (JOIN, TWIN_JOIN) else ts.vc
    return sum(vals[c] for c in ts.children[v] if c != u)


def alg2_xvc(tg: CoTree, ts: CoTree, w: int) -> int:
    """Forced cover size for one vertex by climbing from its leaf to the root."""
    if w not in tg.leaf_of:
        raise UnknownVertex(w)
    leaf = tg.leaf_of[w]
    if leaf == tg.root:
        return 0
    v = tg.parent[leaf]
    h = ts.n[v] - ts.n[leaf]
    while v != tg.root:
        u = v
        v = ts.parent[u]
        h += _sibling_sum(ts, v, u)
    return h


def alg3_increments(tg: CoTree, ts: CoTree) -> CoTree:
    """Top-down increments ``m`` for every inner node of ``tg`` (stored on ``ts``)."""
    for x in tg.preorder():
        if tg.kind[x] == LEAF:
            continue
        if x == tg.root:
            ts.m[x] = 0
        else:
            v = tg.parent[x]
            ts.m[x] = ts.m[v] + _sibling_sum(ts, v, x)
    return ts


def xvc_from_increments(tg: CoTree, ts: CoTree, w: int) -> int:
    leaf = tg.leaf_of[w]
    if leaf == tg.root:
        return 0
    u = tg.parent[leaf]
    return ts.n[u] - ts.n[leaf] + ts.m[u]


class CographAnalysis:
    """Both co-trees for one component with ``n``, ``vc`` and ``m`` filled."""

    def __init__(self, h: Graph, tg: CoTree, excluded=()):
        self.h = h
        self.excluded = set(excluded)
        self.tg = tg
        tg.set_counts(self.excluded)
        self.ts = sr_cotree(tg)
        alg1_vc(self.ts)
        alg3_increments(tg, self.ts)

    @property
    def mvc_size(self) -> int:
        return self.ts.vc[self.ts.root]

    def xvc_size(self, w: int) -> int:
        return xvc_from_increments(self.tg, self.ts, w)

    def _kept(self, x: int) -> list[int]:
        return [v for v in self.ts.leaves(x) if v not in self.excluded]

    def cover(self, x: int) -> list[int]:
        """Replay the bottom-up minima below SR node ``x``."""
        ts = self.ts
        out = []
        stack = [x]
        while stack:
            y = stack.pop()
            kind = ts.kind[y]
            if kind == UNION:
                stack.extend(ts.children[y])
            elif kind != LEAF:
                keep = _join_choice(ts, y)
                for c in ts.children[y]:
                    if c != keep:
                        out.extend(self._kept(c))
                stack.append(keep)
        return out

    def forced_cover(self, w: int) -> list[int]:
        tg, ts = self.tg, self.ts
        leaf = tg.leaf_of[w]
        if leaf == tg.root:
            return []
        u = tg.parent[leaf]
        out = [v for v in self._kept(u) if v != w]
        while u != tg.root:
            v = ts.parent[u]
            for c in ts.children[v]:
                if c == u:
                    continue
                out.extend(self._kept(c) if ts.kind[v] == JOIN else self.cover(c))
            u = v
        return out


def cograph_solver(h: Graph, excluded, queries, tree: CoTree | None = None) -> ComponentAnswer:
    if tree is None:
        tree = build_cotree(h)
    an = CographAnalysis(h, tree, excluded)
    sizes = {q: an.xvc_size(q) for q in queries}

    def witness(q):
        return an.cover(an.ts.root) if q is None else an.forced_cover(q)

    return ComponentAnswer("cograph", an.mvc_size, sizes, witness)


class CographSolver:
    name = "cograph"

    def detect(self, h: Graph):
        try:
            return build_cotree(h)
        except NotACograph:
            return None

    def solve(self, h: Graph, prepared, excluded, queries) -> ComponentAnswer:
        return cograph_solver(h, excluded, queries, prepared)
