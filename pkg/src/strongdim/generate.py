"""Seeded generators for component graphs and single-vertex compositions."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from .graph import Graph

# -- building blocks ---------------------------------------------------------


def path_graph(n: int, prefix: str = "x") -> Graph:
    return Graph.from_edge_list([(f"{prefix}{i}", f"{prefix}{i + 1}") for i in range(n - 1)], [f"{prefix}{i}" for i in range(n)])


def cycle_graph(n: int, prefix: str = "x") -> Graph:
    return Graph.from_edge_list([(f"{prefix}{i}", f"{prefix}{(i + 1) % n}") for i in range(n)])


def complete_graph(n: int, prefix: str = "x") -> Graph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return Graph.from_edge_list([(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)], labels)


def grid_label(i: int, j: int) -> str:
    return f"x{i}_{j}"


def grid_graph(rows: int, cols: int) -> Graph:
    """``rows x cols`` grid labelled ``x{i}_{j}`` with 1-based coordinates."""
    edges = []
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            if i < rows:
                edges.append((grid_label(i, j), grid_label(i + 1, j)))
            if j < cols:
                edges.append((grid_label(i, j), grid_label(i, j + 1)))
    return Graph.from_edge_list(edges, [grid_label(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1)])


def _cotree_edges(vertices: list[int], join: bool, rng: random.Random, out: list[tuple[int, int]]):
    if len(vertices) == 1:
        return
    parts_n = rng.randint(2, min(4, len(vertices)))
    rng.shuffle(vertices)
    cuts = sorted(rng.sample(range(1, len(vertices)), parts_n - 1))
    parts = [vertices[a:b] for a, b in zip([0, *cuts], [*cuts, len(vertices)])]
    if join:
        for i in range(len(parts)):
            for k in range(i + 1, len(parts)):
                out.extend((a, b) for a in parts[i] for b in parts[k])
    for p in parts:
        _cotree_edges(p, not join, rng, out)


def random_cograph(n: int, rng: random.Random, connected: bool = True, prefix: str = "x") -> Graph:
    """Random co-graph on ``n`` vertices; a join at the top keeps it connected."""
    edges: list[tuple[int, int]] = []
    _cotree_edges(list(range(n)), connected or rng.random() < 0.5, rng, edges)
    return Graph.from_ids(n, edges, [f"{prefix}{i}" for i in range(n)])


def random_connected(n: int, rng: random.Random, p: float | None = None, prefix: str = "x") -> Graph:
    """Random spanning tree plus each other pair independently with probability ``p``."""
    if p is None:
        p = rng.uniform(0.1, 0.6)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.add((a, b))
    return Graph.from_ids(n, sorted(edges), [f"{prefix}{i}" for i in range(n)])


# -- component specs ---------------------------------------------------------

KINDS = ("cycle", "grid", "cograph", "random", "path", "clique")


@dataclass(frozen=True)
class ComponentSpec:
    """A component kind with a size range; grids carry (rows, cols) ranges."""

    kind: str
    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def draw(self, rng: random.Random) -> tuple[int, ...]:
        return tuple(rng.randint(a, b) for a, b in zip(self.lo, self.hi))

    def __str__(self):
        def fmt(t):
            return "x".join(map(str, t))
        size = fmt(self.lo) if self.lo == self.hi else f"{fmt(self.lo)}-{fmt(self.hi)}"
        return f"{self.kind}:{size}"


_SPEC = re.compile(r"^(\w+):(\d+(?:x\d+)?)(?:-(\d+(?:x\d+)?))?$")


def parse_components(text: str) -> list[ComponentSpec]:
    """Parse ``cycle:3-9,grid:2x2-3x3,cograph:8,random:7``."""
    specs = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        m = _SPEC.match(token)
        if not m or m.group(1) not in KINDS:
            raise ValueError(f"bad component spec {token!r}")
        kind = m.group(1)
        lo = tuple(int(x) for x in m.group(2).split("x"))
        hi = tuple(int(x) for x in (m.group(3) or m.group(2)).split("x"))
        if len(lo) != len(hi) or len(lo) != (2 if kind == "grid" else 1):
            raise ValueError(f"bad size in {token!r}")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValueError(f"empty range in {token!r}")
        minimum = {"cycle": 3, "grid": 2}.get(kind, 2)
        if min(lo) < minimum:
            raise ValueError(f"{kind} needs size >= {minimum}")
        specs.append(ComponentSpec(kind, lo, hi))
    if not specs:
        raise ValueError("no components given")
    return specs


def build_component(kind: str, size: tuple[int, ...], rng: random.Random) -> Graph:
    if kind == "cycle":
        return cycle_graph(size[0])
    if kind == "grid":
        return grid_graph(*size)
    if kind == "cograph":
        return random_cograph(size[0], rng)
    if kind == "random":
        return random_connected(size[0], rng)
    if kind == "path":
        return path_graph(size[0])
    if kind == "clique":
        return complete_graph(size[0])
    raise ValueError(kind)


# -- compositions ------------------------------------------------------------


@dataclass
class Instance:
    graph: Graph
    seed: int
    components: list[dict] = field(default_factory=list)

    def metadata(self) -> dict:
        return {"seed": self.seed, "vertices": self.graph.n, "edges": self.graph.edge_count,
                "components": self.components}


def compose(parts: list[tuple[str, Graph]], rng: random.Random, seed: int = 0) -> Instance:
    """Attach each part to the graph built so far by identifying one vertex.

    Vertices are relabelled ``v0, v1, ...`` in creation order; the metadata
    records, per part, its kind, size, local vertex ``u`` and global vertex ``v``.
    """
    edges: list[tuple[int, int]] = []
    count = 0
    meta = []
    for idx, (kind, g) in enumerate(parts):
        if idx == 0:
            ids = list(range(g.n))
            count = g.n
            meta.append({"kind": kind, "size": g.n, "attach": None})
        else:
            u = rng.randrange(g.n)
            v = rng.randrange(count)
            ids = []
            for x in range(g.n):
                if x == u:
                    ids.append(v)
                else:
                    ids.append(count)
                    count += 1
            meta.append({"kind": kind, "size": g.n, "attach": {"u": g.labels[u], "v": f"v{v}"}})
        edges.extend((ids[a], ids[b]) for a, b in g.edges())
    graph = Graph.from_ids(count, edges, [f"v{i}" for i in range(count)])
    return Instance(graph, seed, meta)


def random_instance(specs: list[ComponentSpec], rng: random.Random, max_components: int | None = None,
                    max_vertices: int | None = None, seed: int = 0) -> Instance:
    """One composition. With ``max_components`` the parts are sampled from
    ``specs`` (1 to that many); otherwise every spec is used once, in order."""
    if max_components is None:
        chosen = list(specs)
    else:
        chosen = [rng.choice(specs) for _ in range(rng.randint(1, max_components))]
    parts: list[tuple[str, Graph]] = []
    total = 0
    for spec in chosen:
        size = spec.draw(rng)
        g = build_component(spec.kind, size, rng)
        added = g.n if not parts else g.n - 1
        if max_vertices is not None and parts and total + added > max_vertices:
            continue
        parts.append((spec.kind, g))
        total += added
    return compose(parts, rng, seed)


def generate_instances(specs: list[ComponentSpec], count: int, seed: int, max_components: int | None = None,
                       max_vertices: int | None = None) -> list[Instance]:
    master = random.Random(seed)
    out = []
    for _ in range(count):
        sub = master.getrandbits(64)
        out.append(random_instance(specs, random.Random(sub), max_components, max_vertices, sub))
    return out


def random_merge_tuple(rng: random.Random, max_children: int = 5, max_size: int = 10):
    """Random ``(children, parent, attach)`` for the merge operator."""

    def part(prefix):
        kind = rng.choice(("cycle", "path", "clique", "random", "cograph"))
        n = rng.randint(3 if kind == "cycle" else 2, max_size)
        if kind == "cycle":
            g = cycle_graph(n, prefix)
        elif kind == "path":
            g = path_graph(n, prefix)
        elif kind == "clique":
            g = complete_graph(n, prefix)
        elif kind == "cograph":
            g = random_cograph(n, rng, prefix=prefix)
        else:
            g = random_connected(n, rng, prefix=prefix)
        return g

    h = part("h")
    k = rng.randint(1, max_children)
    children = []
    for _ in range(k):
        g = part("g")
        children.append((g, rng.choice(g.labels)))
    attach = [rng.choice(h.labels) for _ in range(k)]
    return children, h, attach


def cactus_cograph_instance(target: int, seed: int, max_size: int = 50) -> Instance:
    """Large tree-like composition of cycles and co-graphs with at most
    ``max_size`` vertices per component, about ``target`` vertices in all."""
    rng = random.Random(seed)
    parts: list[tuple[str, Graph]] = []
    total = 0
    while total < target:
        room = target - total + 1
        if rng.random() < 0.5:
            n = rng.randint(3, max(3, min(max_size, room, 30)))
            parts.append(("cycle", cycle_graph(n)))
        else:
            n = rng.randint(2, max(2, min(max_size, room, 12)))
            parts.append(("cograph", random_cograph(n, rng)))
        total += parts[-1][1].n - (1 if len(parts) > 1 else 0)
    return compose(parts, rng, seed)
