"""Fixture graphs for the figure regressions.

Each builder is reconstructed from the facts stated about its figure
(labels, maximally distant sets, printed counts) and notes which ones pin it.
"""

from strongdim.graph import Graph
from strongdim.solvers.cograph import JOIN, LEAF, UNION, CoTree


def figure2_parts():
    """Children G1..G4, parent H and attachment vertices of the Fig. 2 composition.

    H is the 7-cycle i..o, the smallest parent found in which l, m are far
    from v1 = i, j, k from v2 = n, i, j from v3 = m, and o from l.
    """
    g1 = Graph.from_edge_list([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    g2 = Graph.from_edge_list([("e", "f")])
    g3 = Graph.from_edge_list([("g", "h")])
    g4 = Graph.from_edge_list([("p", "q"), ("q", "r"), ("q", "s"), ("q", "t")])
    h = Graph.from_edge_list([(a, b) for a, b in zip("ijklmno", "jklmnoi")])
    children = [(g1, "c"), (g2, "f"), (g3, "h"), (g4, "p")]
    attach = ["i", "n", "n", "m"]
    return children, h, attach


FIGURE1_EDGES = [("a", "g"), ("a", "h"), ("b", "e"), ("c", "d"), ("c", "f"),
                 ("d", "e"), ("d", "f"), ("e", "g"), ("f", "h")]


def figure1_graph():
    """Stand-in for Fig. 1: {a, b, g} is its unique minimum strong resolving set."""
    return Graph.from_edge_list(FIGURE1_EDGES)


def figure10_cograph():
    """13-vertex co-graph whose canonical co-tree reproduces the Fig. 10 / Fig. 9 counts.

    Root join over leaves a, b, c, d, the union {e, f, g, h}, and the union of
    i with the clique {j, k, l, m}.
    """
    tree = CoTree()
    labels = list("abcdefghijklm")
    vid = {lab: i for i, lab in enumerate(labels)}
    root = tree.add(JOIN)
    for lab in "abcd":
        tree.add(LEAF, root, vid[lab])
    pe = tree.add(UNION, root)
    for lab in "efgh":
        tree.add(LEAF, pe, vid[lab])
    pi = tree.add(UNION, root)
    tree.add(LEAF, pi, vid["i"])
    q = tree.add(JOIN, pi)
    for lab in "jklm":
        tree.add(LEAF, q, vid[lab])
    return tree.realize(labels), tree
