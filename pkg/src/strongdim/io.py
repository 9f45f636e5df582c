"""Edge-list text format and DOT export.

Edge lists are UTF-8 text with one edge per line as two whitespace-separated
labels. ``#`` starts a comment, blank lines are skipped, and a line
``v <label>`` declares a vertex (so a vertex literally named ``v`` cannot
start a two-token line).
"""

from __future__ import annotations

import json

from .decomposition import DecompositionTree
from .errors import ParseError
from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    edges = []
    vertices = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "v":
            vertices.append(tokens[1])
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise ParseError(f"line {lineno}: self-loop on {tokens[0]!r}")
            edges.append((tokens[0], tokens[1]))
        else:
            raise ParseError(f"line {lineno}: expected two labels, got {len(tokens)} tokens")
    if not edges and not vertices:
        raise ParseError("no vertices or edges")
    return Graph.from_edge_list(edges, vertices)


def read_edge_list(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(str(exc)) from exc
    return parse_edge_list(text)


def format_edge_list(g: Graph, header: str | None = None) -> str:
    lines = [f"# {line}" for line in header.splitlines()] if header else []
    connected = set()
    for a, b in g.edges():
        connected.update((a, b))
    lines.extend(f"v {g.labels[x]}" for x in range(g.n) if x not in connected)
    lines.extend(f"{g.labels[a]} {g.labels[b]}" for a, b in g.edges())
    return "\n".join(lines) + "\n"


def _q(label: str) -> str:
    return json.dumps(label)


def graph_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT with every vertex listed, isolated ones included."""
    out = [f"graph {name} {{"]
    out.extend(f"  {_q(lab)};" for lab in sorted(g.labels))
    out.extend(f"  {_q(a)} -- {_q(b)};" for a, b in g.edge_labels())
    out.append("}")
    return "\n".join(out) + "\n"


def decomposition_dot(tree: DecompositionTree) -> str:
    """Blocks as boxes listing their labels, separation vertices as circles."""
    g = tree.graph
    out = ["graph T {"]
    for b in tree.order:
        members = " ".join(g.label_set(tree.blocks[b].vertices))
        extra = ", style=bold" if b == tree.root else ""
        out.append(f"  b{b} [shape=box, label={_q(members)}{extra}];")
    for c in sorted(tree.cut_parent, key=g.labels.__getitem__):
        out.append(f"  s{c} [shape=circle, label={_q(g.labels[c])}];")
    for b in tree.order:
        for c in tree.child_cuts[b]:
            out.append(f"  b{b} -- s{c};")
            out.extend(f"  s{c} -- b{child};" for child in tree.cut_children[c])
    out.append("}")
    return "\n".join(out) + "\n"
