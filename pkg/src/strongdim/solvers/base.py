"""Shared answer type for per-component solvers."""

from __future__ import annotations

from typing import Callable, Iterable

from ..vertex_cover import CoverResult


class ComponentAnswer:
    """Restricted cover sizes of one component, with witnesses built on demand.

    For excluded vertices ``W`` and each query ``q`` this holds the size of a
    minimum cover of ``SR(H) - W`` (``mvc_size``) and of a minimum such cover
    forced to contain ``MD(H, q) - W`` (``xvc_size[q]``). Witness sets are
    produced lazily by ``cover()`` because the frame only needs a few.
    All vertex ids are local to ``H``.
    """

    def __init__(self, kind: str, mvc_size: int, xvc_size: dict[int, int],
                 witness: Callable[[int | None], Iterable[int]]):
        self.kind = kind
        self.mvc_size = mvc_size
        self.xvc_size = xvc_size
        self._witness = witness
        self._cache: dict[int | None, frozenset[int]] = {}

    def cover(self, query: int | None = None) -> frozenset[int]:
        """Witness for ``mvc`` (``query=None``) or for ``xvc[query]``."""
        if query not in self._cache:
            if query is not None and query not in self.xvc_size:
                raise KeyError(query)
            self._cache[query] = frozenset(self._witness(query))
        return self._cache[query]

    @property
    def mvc(self) -> CoverResult:
        return CoverResult.of(self.cover())

    @property
    def xvc(self) -> dict[int, CoverResult]:
        return {q: CoverResult.of(self.cover(q)) for q in self.xvc_size}

    def __repr__(self):
        return f"ComponentAnswer({self.kind}, mvc={self.mvc_size}, xvc={self.xvc_size})"
