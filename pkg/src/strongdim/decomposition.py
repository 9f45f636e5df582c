"""Biconnected components and the rooted block/separation-vertex tree."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import Disconnected, SizeTooSmall
from .graph import Graph, is_connected


@dataclass
class Block:
    """One biconnected component (a bridge counts as one)."""

    index: int
    vertices: list[int]  # global ids, sorted
    edges: list[tuple[int, int]]
    graph: Graph  # induced, locally relabelled
    local: dict[int, int] = field(repr=False)  # global id -> local id

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass
class DecompositionTree:
    """Bipartite tree of blocks (b-nodes) and separation vertices (s-nodes).

    Rooted at a block. For each block, ``parent_cut`` is the separation
    vertex above it (``None`` at the root) and ``child_cuts`` the separation
    vertices below it; for each separation vertex, ``cut_children`` lists
    the blocks hanging from it.
    """

    graph: Graph
    blocks: list[Block]
    cut_vertices: list[int]
    root: int
    parent_cut: list[int | None]
    child_cuts: list[list[int]]
    cut_parent: dict[int, int]
    cut_children: dict[int, list[int]]
    order: list[int]  # blocks, root first, parents before children

    def tree_edges(self) -> list[tuple[int, int]]:
        """(block index, separation vertex id) pairs."""
        return [(b, c) for b, blk in enumerate(self.blocks) for c in blk.vertices if c in self.cut_children or c in self.cut_parent]

    def children(self, b: int) -> list[tuple[int, int]]:
        """(separation vertex, child block) pairs below block ``b``."""
        return [(c, child) for c in self.child_cuts[b] for child in self.cut_children[c]]


def biconnected_components(g: Graph) -> tuple[list[tuple[list[int], list[tuple[int, int]]]], set[int]]:
    """Blocks as (sorted vertex ids, edges) plus the set of separation vertices.

    One iterative depth-first traversal with an edge stack.
    """
    if g.n == 0 or g.edge_count == 0:
        raise SizeTooSmall("need at least one edge")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    comps = []
    edge_stack: list[tuple[int, int]] = []
    time = 0
    root = 0
    disc[root] = low[root] = time
    time += 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for v in it:
            if disc[v] == -1:
                edge_stack.append((u, v))
                disc[v] = low[v] = time
                time += 1
                if u == root:
                    root_children += 1
                stack.append((v, u, iter(adj[v])))
                advanced = True
                break
            if v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                if disc[v] < low[u]:
                    low[u] = disc[v]
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        if low[u] < low[parent]:
            low[parent] = low[u]
        if low[u] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            block_edges = []
            while True:
                e = edge_stack.pop()
                block_edges.append(e)
                if e == (parent, u):
                    break
            verts = sorted({x for e in block_edges for x in e})
            comps.append((verts, block_edges))
    if root_children > 1:
        cuts.add(root)
    return comps, cuts


def build_decomposition_tree(g: Graph) -> DecompositionTree:
    comps, cuts = biconnected_components(g)
    blocks = []
    for i, (verts, edges) in enumerate(comps):
        sub, _ = g.induced(verts)
        blocks.append(Block(i, verts, edges, sub, {v: k for k, v in enumerate(verts)}))

    blocks_of_cut: dict[int, list[int]] = {c: [] for c in cuts}
    for blk in blocks:
        for v in blk.vertices:
            if v in blocks_of_cut:
                blocks_of_cut[v].append(blk.index)

    labels = g.labels
    smallest = min(range(g.n), key=labels.__getitem__)
    candidates = [b for b in blocks if smallest in b.local]
    root = min(candidates, key=lambda b: (b.size, b.index)).index

    nb = len(blocks)
    parent_cut: list[int | None] = [None] * nb
    child_cuts: list[list[int]] = [[] for _ in range(nb)]
    cut_parent: dict[int, int] = {}
    cut_children: dict[int, list[int]] = {c: [] for c in cuts}
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        b = queue.popleft()
        for c in blocks[b].vertices:
            if c not in blocks_of_cut or c == parent_cut[b]:
                continue
            cut_parent[c] = b
            child_cuts[b].append(c)
            for child in blocks_of_cut[c]:
                if child in seen:
                    continue
                seen.add(child)
                parent_cut[child] = c
                cut_children[c].append(child)
                order.append(child)
                queue.append(child)
    return DecompositionTree(g, blocks, sorted(cuts), root, parent_cut, child_cuts, cut_parent, cut_children, order)
