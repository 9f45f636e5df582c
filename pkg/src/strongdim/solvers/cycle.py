"""Cycle components.

On an even cycle the strong resolving graph is the matching of antipodal
vertices; on an odd cycle ``x_0..x_{n-1}`` it is again a cycle, visiting
``x_0, x_s, x_2s, ...`` with ``s = (n-1)/2``. Removing excluded vertices
leaves paths, and a path on ``l`` vertices needs ``l // 2`` cover vertices.
Forcing a vertex splits its path, so each query costs O(1) after indexing.
"""

from __future__ import annotations

from ..errors import NotACycle
from ..graph import Graph
from .base import ComponentAnswer


def is_cycle(h: Graph) -> bool:
    if h.n < 3 or any(len(nb) != 2 for nb in h.adj):
        return False
    return len(cycle_order(h)) == h.n


def cycle_order(h: Graph) -> list[int]:
    """Walk the cycle from the smallest label towards its smaller-labelled neighbour."""
    lab = h.labels
    start = min(range(h.n), key=lab.__getitem__)
    nxt = min(h.adj[start], key=lab.__getitem__)
    order = [start]
    prev, cur = start, nxt
    while cur != start:
        order.append(cur)
        a, b = h.adj[cur]
        prev, cur = cur, (b if a == prev else a)
        if len(order) > h.n:
            break
    return order


def cycle_md(order: list[int], i: int) -> list[int]:
    """Maximally distant vertices of position ``i`` (as vertex ids)."""
    n = len(order)
    if n % 2 == 0:
        return [order[(i + n // 2) % n]]
    j = (i + n // 2) % n
    return [order[j], order[(j + 1) % n]]


def _gaps(length: int, forced: list[int]) -> list[tuple[int, int]]:
    """(start, size) of the unforced runs of a path with sorted forced positions."""
    out = []
    prev = -1
    for p in forced:
        out.append((prev + 1, p - prev - 1))
        prev = p
    out.append((prev + 1, length - prev - 1))
    return out


def path_cover_size(length: int, forced: list[int]) -> int:
    return len(forced) + sum(g // 2 for _, g in _gaps(length, forced))


def path_cover(path: list[int], forced: list[int]) -> list[int]:
    cover = [path[p] for p in forced]
    for start, size in _gaps(len(path), forced):
        cover.extend(path[start + k] for k in range(1, size, 2))
    return cover


class CycleStructure:
    """SR(H) minus the excluded vertices, as indexed paths (or one cycle)."""

    def __init__(self, h: Graph, excluded: set[int]):
        order = cycle_order(h)
        n = len(order)
        self.order = order
        self.pos = {v: i for i, v in enumerate(order)}
        self.ring: list[int] | None = None
        paths: list[list[int]] = []
        if n % 2 == 0:
            half = n // 2
            for i in range(half):
                pair = [v for v in (order[i], order[i + half]) if v not in excluded]
                paths.extend([pair] if len(pair) == 2 else [[v] for v in pair])
        else:
            step = (n - 1) // 2
            seq = [order[(t * step) % n] for t in range(n)]
            if not excluded:
                self.ring = seq
            else:
                first = next(t for t, v in enumerate(seq) if v in excluded)
                run: list[int] = []
                for k in range(1, n + 1):
                    v = seq[(first + k) % n]
                    if v in excluded:
                        if run:
                            paths.append(run)
                        run = []
                    else:
                        run.append(v)
        self.paths = paths
        self.where = {v: (p, k) for p, path in enumerate(paths) for k, v in enumerate(path)}
        self.base = [len(p) // 2 for p in paths]
        self.total = sum(self.base) if self.ring is None else (n + 1) // 2

    def forced_size(self, forced: list[int]) -> int:
        if not forced:
            return self.total
        if self.ring is not None:
            ks = self._ring_positions(forced)
            return path_cover_size(len(self.ring), [k - ks[0] for k in ks])
        size = self.total
        for p, ks in self._group(forced).items():
            size += path_cover_size(len(self.paths[p]), ks) - self.base[p]
        return size

    def forced_cover(self, forced: list[int]) -> list[int]:
        if self.ring is not None:
            if not forced:
                return self.ring[0::2]
            ks = self._ring_positions(forced)
            shift = ks[0]
            rotated = self.ring[shift:] + self.ring[:shift]
            return path_cover(rotated, [k - shift for k in ks])
        groups = self._group(forced)
        cover = []
        for p, path in enumerate(self.paths):
            cover.extend(path_cover(path, groups.get(p, [])))
        return cover

    def _ring_positions(self, forced: list[int]) -> list[int]:
        idx = {v: t for t, v in enumerate(self.ring)}
        return sorted(idx[v] for v in forced)

    def _group(self, forced: list[int]) -> dict[int, list[int]]:
        groups: dict[int, list[int]] = {}
        for v in forced:
            p, k = self.where[v]
            groups.setdefault(p, []).append(k)
        for ks in groups.values():
            ks.sort()
        return groups


def cycle_solver(h: Graph, excluded, queries) -> ComponentAnswer:
    if not is_cycle(h):
        raise NotACycle(f"{h!r} is not a cycle")
    excluded = set(excluded)
    st = CycleStructure(h, excluded)
    forced = {q: [v for v in cycle_md(st.order, st.pos[q]) if v not in excluded] for q in queries}
    sizes = {q: st.forced_size(f) for q, f in forced.items()}

    def witness(q):
        return st.forced_cover([] if q is None else forced[q])

    return ComponentAnswer("cycle", st.total, sizes, witness)


class CycleSolver:
    name = "cycle"

    def detect(self, h: Graph):
        return True if is_cycle(h) else None

    def solve(self, h: Graph, prepared, excluded, queries) -> ComponentAnswer:
        return cycle_solver(h, excluded, queries)
