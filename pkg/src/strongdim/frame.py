"""Strong metric dimension by bottom-up combination over the block tree.

For every non-root block ``b`` with upward separation vertex ``s`` the pass
keeps two numbers about the subgraph hanging below ``s``:

* ``mvc``: minimum cover of its strong resolving graph without ``s``;
* ``xvc``: the same, forced to contain every vertex maximally distant from ``s``.

A block with children ``1..k`` attached at vertices ``v_1..v_k`` either takes
all children's forced covers (candidate 0), or leaves child ``j`` free and
instead forces the block's own vertices far from ``v_j`` (candidate ``j``).
The block itself only ever needs its restricted covers with the attachment
vertices and ``s`` removed, which is what the component solvers supply.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .decomposition import DecompositionTree, build_decomposition_tree
from .errors import Disconnected
from .graph import Graph, is_connected
from .solvers import ComponentAnswer, Solver, default_registry, solve_component


@dataclass
class SubtreeAnswer:
    mvc_size: int
    xvc_size: int | None  # None at the root
    choice: int
    candidates: list[int]


@dataclass
class BlockTrace:
    block: int
    kind: str
    vertices: list[str]
    mvc: int
    chosen_j: int
    candidates: list[int]
    subtree_mvc: int
    subtree_xvc: int | None


@dataclass
class SolveSummary:
    dimension: int
    resolving_set: list[str]
    vertices: frozenset[int]
    trace: list[BlockTrace] = field(default_factory=list)


@dataclass
class _BlockWork:
    answer: ComponentAnswer
    children: list[tuple[int, int]]  # (local attachment id, child block)
    parent_local: int | None
    result: SubtreeAnswer


@dataclass(frozen=True)
class ComponentQuery:
    """One block, the vertices to leave out, and the vertices to force-query."""

    component: Graph
    excluded: frozenset[int]
    md_queries: tuple[int, ...]


def answer_query(q: ComponentQuery, registry: Sequence[Solver] | None = None) -> ComponentAnswer:
    return solve_component(q.component, q.excluded, q.md_queries, registry)


def _combine(answer: ComponentAnswer, children, subtree: dict[int, SubtreeAnswer], parent_local) -> SubtreeAnswer:
    forced_children = sum(subtree[c].xvc_size for _, c in children)
    u0 = answer.mvc_size + forced_children
    candidates = [u0]
    for v, c in children:
        child = subtree[c]
        candidates.append(u0 - answer.mvc_size + answer.xvc_size[v] + child.mvc_size - child.xvc_size)
    best = min(range(len(candidates)), key=candidates.__getitem__)
    xvc = None
    if parent_local is not None:
        xvc = answer.xvc_size[parent_local] + forced_children
    return SubtreeAnswer(candidates[best], xvc, best, candidates)


def solve(g: Graph, registry: Sequence[Solver] | None = None, budget: int | None = None) -> SolveSummary:
    """Minimum strong resolving set of a connected graph."""
    if g.n <= 1:
        return SolveSummary(0, [], frozenset())
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    if registry is None:
        registry = default_registry(budget)
    tree = build_decomposition_tree(g)
    work = _bottom_up(tree, registry)
    chosen = _top_down(tree, work)
    trace = [
        BlockTrace(b, work[b].answer.kind, g.label_set(tree.blocks[b].vertices), work[b].answer.mvc_size,
                   work[b].result.choice, work[b].result.candidates, work[b].result.mvc_size, work[b].result.xvc_size)
        for b in tree.order
    ]
    dim = work[tree.root].result.mvc_size
    assert dim == len(chosen)
    return SolveSummary(dim, g.label_set(chosen), frozenset(chosen), trace)


def _bottom_up(tree: DecompositionTree, registry) -> dict[int, _BlockWork]:
    subtree: dict[int, SubtreeAnswer] = {}
    work: dict[int, _BlockWork] = {}
    for b in reversed(tree.order):
        blk = tree.blocks[b]
        local = blk.local
        children = [(local[c], child) for c, child in tree.children(b)]
        attach = sorted({v for v, _ in children})
        parent = tree.parent_cut[b]
        parent_local = None if parent is None else local[parent]
        excluded = set(attach)
        queries = list(attach)
        if parent_local is not None:
            excluded.add(parent_local)
            queries.append(parent_local)
        answer = answer_query(ComponentQuery(blk.graph, frozenset(excluded), tuple(queries)), registry)
        result = _combine(answer, children, subtree, parent_local)
        subtree[b] = result
        work[b] = _BlockWork(answer, children, parent_local, result)
    return work


def _top_down(tree: DecompositionTree, work: dict[int, _BlockWork]) -> set[int]:
    chosen: set[int] = set()
    stack = [(tree.root, False)]
    while stack:
        b, forced = stack.pop()
        w = work[b]
        glob = tree.blocks[b].vertices
        if forced:
            part = w.answer.cover(w.parent_local)
            free = None
        else:
            j = w.result.choice
            part = w.answer.cover(None if j == 0 else w.children[j - 1][0])
            free = None if j == 0 else j - 1
        chosen.update(glob[v] for v in part)
        for i, (_, child) in enumerate(w.children):
            stack.append((child, i != free))
    return chosen
