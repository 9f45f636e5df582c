"""Per-component solvers and the registry that picks one for each block."""

from __future__ import annotations

from typing import Protocol, Sequence

from ..errors import NoSolver
from ..graph import Graph
from .base import ComponentAnswer
from .cograph import CographSolver, build_cotree, cograph_solver
from .cycle import CycleSolver, cycle_solver, is_cycle
from .generic import GenericSolver, generic_solver
from .grid import GridSolver, grid_coordinates, grid_solver

CYCLE = "cycle"
GRID = "grid"
COGRAPH = "cograph"
GENERIC = "generic"


class Solver(Protocol):
    name: str

    def detect(self, h: Graph):
        """Return a prepared structure (anything not None) if ``h`` is handled."""

    def solve(self, h: Graph, prepared, excluded, queries) -> ComponentAnswer: ...


def default_registry(budget: int | None = None) -> list[Solver]:
    return [CycleSolver(), GridSolver(), CographSolver(), GenericSolver(budget)]


def detect_class(h: Graph) -> str:
    for solver in default_registry():
        if solver.detect(h) is not None:
            return solver.name
    return GENERIC


def solve_component(h: Graph, excluded, queries, registry: Sequence[Solver] | None = None) -> ComponentAnswer:
    """Answer the restricted-cover queries of one block with the first matching solver."""
    for solver in registry if registry is not None else default_registry():
        prepared = solver.detect(h)
        if prepared is not None:
            return solver.solve(h, prepared, excluded, queries)
    raise NoSolver(f"no solver accepts {h!r}")


__all__ = [
    "COGRAPH", "CYCLE", "GENERIC", "GRID", "ComponentAnswer", "CographSolver", "CycleSolver",
    "GenericSolver", "GridSolver", "Solver", "build_cotree", "cograph_solver", "cycle_solver",
    "default_registry", "detect_class", "generic_solver", "grid_coordinates", "grid_solver",
    "is_cycle", "solve_component",
]
