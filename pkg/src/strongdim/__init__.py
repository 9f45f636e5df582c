"""Strong metric dimension through biconnected decomposition."""

from .errors import (BudgetExceeded, Disconnected, NotACograph, NotResolving, SelfLoop,
                     StrongDimError, UnknownVertex)
from .frame import SolveSummary, solve
from .graph import Graph, bfs_distances, is_connected
from .srgraph import maximally_distant_set, strong_resolving_graph
from .vertex_cover import min_vertex_cover, min_vertex_cover_containing

__all__ = [
    "BudgetExceeded", "Disconnected", "Graph", "NotACograph", "NotResolving", "SelfLoop",
    "SolveSummary", "StrongDimError", "UnknownVertex", "bfs_distances", "is_connected",
    "maximally_distant_set", "min_vertex_cover", "min_vertex_cover_containing", "solve",
    "strong_resolving_graph",
]
