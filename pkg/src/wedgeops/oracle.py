"""Brute-force enumerators used as ground truth in tests.

Everything here walks neighbor lists directly and never touches matrix
algebra, so results are computationally independent of the operator module.
Deliberately naive; guarded by a scale cap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError
from .graph import Graph
from .partition import Partition

__all__ = [
    "ORACLE_MAX_VERTICES",
    "Wedge",
    "WedgeList",
    "enumerate_wedges",
    "enumerate_triangles",
    "naive_block_two_walks",
]

ORACLE_MAX_VERTICES = 1000


def _guard(g: Graph) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        raise ResourceLimitError(
            f"oracle guard: {g.n} vertices exceeds cap {ORACLE_MAX_VERTICES}"
        )
    if g.directed:
        raise ValueError("oracle enumerators require an undirected graph")


@dataclass(frozen=True)
class Wedge:
    i: int
    j: int
    k: int
    closed: bool


@dataclass(frozen=True)
class WedgeList:
    """Every unordered two-path, canonical form (min endpoint, middle, max endpoint)."""

    wedges: tuple[Wedge, ...]

    @property
    def closed_count(self) -> int:
        return sum(1 for w in self.wedges if w.closed)

    @property
    def open_count(self) -> int:
        return sum(1 for w in self.wedges if not w.closed)

    def __len__(self) -> int:
        return len(self.wedges)


def enumerate_wedges(g: Graph) -> WedgeList:
    """List all unordered two-paths, each tagged open or closed."""
    _guard(g)
    nbr_sets = [set(ns) for ns in g.adjacency]
    out = []
    for j in range(g.n):
        ns = g.adjacency[j]
        for a in range(len(ns)):
            for b in range(a + 1, len(ns)):
                i, k = ns[a], ns[b]
                out.append(Wedge(i=i, j=j, k=k, closed=k in nbr_sets[i]))
    return WedgeList(wedges=tuple(out))


def enumerate_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """List each triangle once as (i, j, k) with i < j < k."""
    _guard(g)
    nbr_sets = [set(ns) for ns in g.adjacency]
    out = []
    for i in range(g.n):
        for j in g.adjacency[i]:
            if j <= i:
                continue
            for k in g.adjacency[j]:
                if k > j and k in nbr_sets[i]:
                    out.append((i, j, k))
    return out


def naive_block_two_walks(g: Graph, p: Partition) -> np.ndarray:
    """Blockwise two-walk mass by explicit enumeration of all walks u-v-w.

    Counts every ordered walk (u, v, w) with u ~ v ~ w, u and w free to
    coincide, adding the walk's weight product into the (block(u), block(w))
    cell. With unit weights this reproduces blockwise sums of the squared
    adjacency matrix.
    """
    _guard(g)
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} vertices but graph has {g.n}")
    block_of = p.block_of
    weighted = g.weights is not None
    m = np.zeros((p.r, p.r), dtype=np.float64 if weighted else np.int64)
    for v in range(g.n):
        ns = g.adjacency[v]
        for u in ns:
            for w in ns:
                if weighted:
                    m[block_of[u], block_of[w]] += g.edge_weight(u, v) * g.edge_weight(v, w)
                else:
                    m[block_of[u], block_of[w]] += 1
    return m
