"""Grid components (n x m, n, m >= 2).

The strong resolving graph of a grid has just the two diagonal corner
pairs as edges, and every maximally distant set consists of corners:
the opposite corner for a corner, the far side's two corners for a
boundary vertex, all four corners for an inner vertex.
"""

from __future__ import annotations

from ..errors import NotAGrid
from ..graph import Graph, bfs_distances
from .base import ComponentAnswer


def grid_coordinates(h: Graph) -> tuple[int, int, list[tuple[int, int]]] | None:
    """Return ``(rows, cols, coords)`` with 1-based coordinates, or None.

    Anchors the smallest-labelled degree-2 vertex at (1, 1) and reads
    coordinates off BFS distances to it and to the corner closing its row,
    then re-checks every edge against the claimed layout.
    """
    corners = [v for v in range(h.n) if len(h.adj[v]) == 2]
    if len(corners) != 4 or any(len(nb) not in (2, 3, 4) for nb in h.adj):
        return None
    lab = h.labels
    corners.sort(key=lab.__getitem__)
    c = corners[0]
    dc = bfs_distances(h, c)
    others = sorted(corners[1:], key=lambda v: (dc[v], lab[v]))
    a, b, opposite = others
    cols = dc[a] + 1
    if cols < 2 or h.n % cols:
        return None
    rows = h.n // cols
    if rows < 2 or dc[b] != rows - 1 or dc[opposite] != rows + cols - 2:
        return None
    if h.edge_count != 2 * rows * cols - rows - cols:
        return None
    da = bfs_distances(h, a)
    coords = []
    seen = set()
    for v in range(h.n):
        twice_row = dc[v] + da[v] - (cols - 1)
        if twice_row < 0 or twice_row % 2:
            return None
        i = twice_row // 2
        j = dc[v] - i
        if not (0 <= i < rows and 0 <= j < cols) or (i, j) in seen:
            return None
        seen.add((i, j))
        coords.append((i + 1, j + 1))
    for u, v in h.edges():
        (i1, j1), (i2, j2) = coords[u], coords[v]
        if abs(i1 - i2) + abs(j1 - j2) != 1:
            return None
    return rows, cols, coords


def grid_md(rows: int, cols: int, i: int, j: int) -> list[tuple[int, int]]:
    """Maximally distant positions of ``(i, j)`` in a ``rows x cols`` grid."""
    row_edge = i in (1, rows)
    col_edge = j in (1, cols)
    if row_edge and col_edge:
        return [(rows + 1 - i, cols + 1 - j)]
    if row_edge:
        return [(rows + 1 - i, 1), (rows + 1 - i, cols)]
    if col_edge:
        return [(1, cols + 1 - j), (rows, cols + 1 - j)]
    return [(1, 1), (rows, 1), (1, cols), (rows, cols)]


def grid_solver(h: Graph, excluded, queries, layout=None) -> ComponentAnswer:
    layout = layout or grid_coordinates(h)
    if layout is None:
        raise NotAGrid(f"{h!r} is not a grid")
    rows, cols, coords = layout
    at = {p: v for v, p in enumerate(coords)}
    excluded = set(excluded)
    lab = h.labels
    diagonals = [(at[1, 1], at[rows, cols]), (at[1, cols], at[rows, 1])]
    live = [e for e in diagonals if e[0] not in excluded and e[1] not in excluded]

    forced = {}
    for q in queries:
        i, j = coords[q]
        forced[q] = {at[p] for p in grid_md(rows, cols, i, j)} - excluded
    sizes = {q: len(f) + sum(1 for a, b in live if a not in f and b not in f) for q, f in forced.items()}

    def witness(q):
        chosen = set() if q is None else set(forced[q])
        for a, b in live:
            if a not in chosen and b not in chosen:
                chosen.add(min(a, b, key=lab.__getitem__))
        return chosen

    return ComponentAnswer("grid", len(live), sizes, witness)


class GridSolver:
    name = "grid"

    def detect(self, h: Graph):
        return grid_coordinates(h)

    def solve(self, h: Graph, prepared, excluded, queries) -> ComponentAnswer:
        return grid_solver(h, excluded, queries, prepared)
