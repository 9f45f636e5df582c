"""Attaching child graphs to a parent graph at single vertices.

``merge`` glues each child ``G_i`` onto the parent ``H`` by deleting ``u_i``
and wiring its former neighbours to ``v_i``. ``md_composed`` and
``sr_edges_composed`` predict maximally distant sets and the strong
resolving graph of the result from the parts alone, with no search on the
merged graph; the test-suite checks them against the direct BFS route.

Child labels are prefixed ``"<i>."`` with the 1-based child index unless
``prefix=False``, in which case all labels must already be disjoint.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NotConnected, SizeTooSmall, UnknownVertex
from .graph import Graph, is_connected
from .srgraph import maximally_distant_set, strong_resolving_graph

Child = tuple[Graph, str]


def _child_label(i: int, label: str, prefix: bool) -> str:
    return f"{i + 1}.{label}" if prefix else label


def _check(children: Sequence[Child], h: Graph, attach: Sequence[str], prefix: bool):
    if len(children) != len(attach):
        raise ValueError("need one attachment vertex per child")
    for g, u in [*children, (h, None)]:
        if g.n < 2:
            raise SizeTooSmall("every operand needs at least two vertices")
        if not is_connected(g):
            raise NotConnected("every operand must be connected")
        if u is not None and not g.has_vertex(u):
            raise UnknownVertex(u)
    for v in attach:
        if not h.has_vertex(v):
            raise UnknownVertex(v)
    if not prefix:
        seen = set(h.labels)
        for g, _ in children:
            clash = seen.intersection(g.labels)
            if clash:
                raise ValueError(f"labels not disjoint: {sorted(clash)}")
            seen.update(g.labels)


def merge(children: Sequence[Child], h: Graph, attach: Sequence[str], prefix: bool = True) -> Graph:
    """Glue child ``i`` onto ``h`` by identifying its vertex ``u_i`` with ``attach[i]``."""
    _check(children, h, attach, prefix)
    edges: list[tuple[str, str]] = list(h.edge_labels())
    vertices: list[str] = list(h.labels)
    for i, ((g, u), v) in enumerate(zip(children, attach)):
        lab = [_child_label(i, x, prefix) for x in g.labels]
        ui = g.id_of(u)
        vertices.extend(lab[x] for x in range(g.n) if x != ui)
        for a, b in g.edges():
            a_lab = v if a == ui else lab[a]
            b_lab = v if b == ui else lab[b]
            edges.append((a_lab, b_lab))
    return Graph.from_edge_list(edges, vertices)


def _md_labels(g: Graph, v: str) -> set[str]:
    return {g.labels[x] for x in maximally_distant_set(g, g.id_of(v))}


def md_composed(children: Sequence[Child], h: Graph, attach: Sequence[str], w: str, prefix: bool = True) -> set[str]:
    """Maximally distant set of ``w`` in the merged graph, from the parts."""
    _check(children, h, attach, prefix)
    cut = set(attach)
    md_child = [
        {_child_label(i, x, prefix) for x in _md_labels(g, u)} for i, (g, u) in enumerate(children)
    ]
    if h.has_vertex(w):
        out = _md_labels(h, w) - cut
        for s in md_child:
            out |= s
        return out
    for j, (g, u) in enumerate(children):
        for x in g.labels:
            if x != u and _child_label(j, x, prefix) == w:
                out = {_child_label(j, y, prefix) for y in _md_labels(g, x) - {u}}
                out |= _md_labels(h, attach[j]) - cut
                for i, s in enumerate(md_child):
                    if i != j:
                        out |= s
                return out
    raise UnknownVertex(w)


def sr_edges_composed(children: Sequence[Child], h: Graph, attach: Sequence[str], prefix: bool = True) -> Graph:
    """Strong resolving graph of the merged graph, assembled from the parts.

    Union of: each child's own SR edges avoiding ``u_i``; the parent's SR
    edges avoiding the attachment vertices; all edges between the
    far-from-attachment sets of distinct children; and each child's such
    set joined to the parent vertices far from its attachment vertex.
    """
    j = merge(children, h, attach, prefix)
    cut = set(attach)
    edges: set[frozenset[str]] = set()

    sr_h = strong_resolving_graph(h)
    for a, b in sr_h.edge_labels():
        if a not in cut and b not in cut:
            edges.add(frozenset((a, b)))

    far: list[set[str]] = []
    for i, (g, u) in enumerate(children):
        sr_g = strong_resolving_graph(g)
        for a, b in sr_g.edge_labels():
            if u not in (a, b):
                edges.add(frozenset((_child_label(i, a, prefix), _child_label(i, b, prefix))))
        far.append({_child_label(i, x, prefix) for x in _md_labels(g, u)})

    for i in range(len(far)):
        for k in range(i + 1, len(far)):
            edges.update(frozenset((a, b)) for a in far[i] for b in far[k])

    for i, v in enumerate(attach):
        far_h = _md_labels(h, v) - cut
        edges.update(frozenset((a, b)) for a in far[i] for b in far_h)

    return Graph.from_edge_list((tuple(e) for e in edges), j.labels)
