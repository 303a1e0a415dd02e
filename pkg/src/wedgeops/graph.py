"""Graph container, edge-list I/O, deterministic generators, induced subgraphs.

Vertex ids are dense 0-based integers internally; external labels from edge-list
files live only in the sidecar label list returned by the loader.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import EdgeListParseError

__all__ = [
    "Graph",
    "VertexSet",
    "EdgeListResult",
    "parse_edge_list",
    "load_edge_list",
    "save_edge_list",
    "generate",
    "induced_subgraph",
]

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Graph:
    """Simple graph with sorted neighbor lists, optionally weighted or directed.

    Immutable after construction; safe to share across workers. For directed
    graphs ``adjacency[v]`` holds out-neighbors.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    weights: tuple[tuple[float, ...], ...] | None = None
    directed: bool = False

    @staticmethod
    def from_edges(
        n: int,
        edges: list[tuple[int, int]] | list[tuple[int, int, float]],
        directed: bool = False,
    ) -> "Graph":
        """Build a validated Graph from (u, v) or (u, v, w) tuples.

        Duplicate edges collapse (last weight wins). Self-loops, out-of-range
        ids, and negative weights are rejected.
        """
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        weighted = any(len(e) == 3 for e in edges)
        seen: dict[tuple[int, int], float] = {}
        for e in edges:
            u, v = e[0], e[1]
            w = float(e[2]) if len(e) == 3 else 1.0
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if w < 0:
                raise ValueError(f"negative weight {w} on edge ({u}, {v})")
            if not directed and u > v:
                u, v = v, u
            seen[(u, v)] = w
        nbrs: list[list[int]] = [[] for _ in range(n)]
        wts: list[list[float]] = [[] for _ in range(n)]
        for (u, v), w in sorted(seen.items()):
            nbrs[u].append(v)
            wts[u].append(w)
            if not directed:
                nbrs[v].append(u)
                wts[v].append(w)
        for ns in nbrs:
            ns.sort()
        if not directed:
            # re-align weights with the sorted neighbor order
            wmap = {(u, v): w for (u, v), w in seen.items()}
            for u in range(n):
                wts[u] = [wmap[(min(u, v), max(u, v))] for v in nbrs[u]]
        adjacency = tuple(tuple(ns) for ns in nbrs)
        weights = tuple(tuple(ws) for ws in wts) if weighted else None
        return Graph(n=n, adjacency=adjacency, weights=weights, directed=directed)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, ns in enumerate(self.adjacency):
            if any(ns[i] >= ns[i + 1] for i in range(len(ns) - 1)):
                raise ValueError(f"neighbor list of {v} not strictly increasing")
            if v in ns:
                raise ValueError(f"self-loop at vertex {v}")
        if not self.directed:
            nbr_sets = [set(ns) for ns in self.adjacency]
            for v, ns in enumerate(self.adjacency):
                for u in ns:
                    if v not in nbr_sets[u]:
                        raise ValueError(f"asymmetric edge ({v}, {u})")
        if self.weights is not None:
            for v, ws in enumerate(self.weights):
                if len(ws) != len(self.adjacency[v]):
                    raise ValueError(f"weight list of {v} misaligned")
                if any(w < 0 for w in ws):
                    raise ValueError(f"negative weight at vertex {v}")

    @cached_property
    def m(self) -> int:
        """Edge count (arc count for directed graphs)."""
        arcs = sum(len(ns) for ns in self.adjacency)
        return arcs if self.directed else arcs // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        ns = self.adjacency[u]
        pos = bisect.bisect_left(ns, v)
        return pos < len(ns) and ns[pos] == v

    def edge_weight(self, u: int, v: int) -> float:
        """Weight of edge (u, v); 1.0 for unweighted graphs, 0.0 if absent."""
        ns = self.adjacency[u]
        pos = bisect.bisect_left(ns, v)
        if pos >= len(ns) or ns[pos] != v:
            return 0.0
        return 1.0 if self.weights is None else self.weights[u][pos]

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as (u < v) pairs, or all arcs if directed."""
        if self.directed:
            return [(u, v) for u in range(self.n) for v in self.adjacency[u]]
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) int64 arrays over the sorted neighbor lists."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, ns in enumerate(self.adjacency):
            indptr[v + 1] = indptr[v] + len(ns)
        indices = np.fromiter(
            (u for ns in self.adjacency for u in ns), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 int64 adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for v, ns in enumerate(self.adjacency):
            a[v, list(ns)] = 1
        return a

    def weight_matrix(self) -> np.ndarray:
        """Dense float64 weighted adjacency (all-ones weights if unweighted)."""
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for v, ns in enumerate(self.adjacency):
            ws = self.weights[v] if self.weights is not None else (1.0,) * len(ns)
            a[v, list(ns)] = ws
        return a


@dataclass(frozen=True)
class VertexSet:
    """Strictly increasing tuple of vertex ids."""

    ids: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(self.ids[i] >= self.ids[i + 1] for i in range(len(self.ids) - 1)):
            raise ValueError("vertex ids must be strictly increasing")
        if self.ids and self.ids[0] < 0:
            raise ValueError("vertex ids must be nonnegative")

    @staticmethod
    def of(ids) -> "VertexSet":
        return VertexSet(tuple(sorted(set(int(i) for i in ids))))

    @cached_property
    def _member(self) -> frozenset:
        return frozenset(self.ids)

    def __contains__(self, v: int) -> bool:
        return v in self._member

    def __iter__(self):
        return iter(self.ids)

    def __len__(self) -> int:
        return len(self.ids)


@dataclass(frozen=True)
class EdgeListResult:
    """Loader output: the graph, internal-id -> external-label map, duplicate count."""

    graph: Graph
    labels: list[str] = field(default_factory=list)
    duplicate_lines: int = 0


def parse_edge_list(text: str, directed: bool = False) -> EdgeListResult:
    """Parse a line-oriented edge list into a Graph.

    Format: UTF-8 text, "#"-prefixed comments, whitespace-separated tokens,
    lines of the form "u v" or "u v w" (w a nonnegative decimal weight).
    Labels are arbitrary strings, remapped to 0..n-1 by first appearance.
    Duplicate edges collapse to one (last weight wins) and are counted.
    """
    label_to_id: dict[str, int] = {}
    labels: list[str] = []
    edges: dict[tuple[int, int], float] = {}
    weighted = False
    duplicates = 0

    def intern(label: str) -> int:
        if label not in label_to_id:
            label_to_id[label] = len(labels)
            labels.append(label)
        return label_to_id[label]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise EdgeListParseError(lineno, f"expected 2 or 3 tokens, got {len(tokens)}")
        if tokens[0] == tokens[1]:
            raise EdgeListParseError(lineno, f"self-loop on {tokens[0]!r}")
        u, v = intern(tokens[0]), intern(tokens[1])
        w = 1.0
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise EdgeListParseError(lineno, f"bad weight {tokens[2]!r}") from None
            if not np.isfinite(w):
                raise EdgeListParseError(lineno, f"non-finite weight {tokens[2]!r}")
            if w < 0:
                raise EdgeListParseError(lineno, f"negative weight {w}")
            weighted = True
        key = (u, v) if directed or u < v else (v, u)
        if key in edges:
            duplicates += 1
        edges[key] = w
    n = len(labels)
    edge_tuples = [(u, v, w) for (u, v), w in edges.items()] if weighted else list(edges)
    graph = Graph.from_edges(n, edge_tuples, directed=directed)
    return EdgeListResult(graph=graph, labels=labels, duplicate_lines=duplicates)


def load_edge_list(path: str | Path, directed: bool = False) -> EdgeListResult:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"), directed=directed)


def save_edge_list(g: Graph, labels: list[str] | None = None) -> str:
    """Serialize to the edge-list text format (inverse of parse_edge_list)."""
    name = (lambda v: labels[v]) if labels is not None else str
    lines = []
    for u, v in g.edges():
        if g.weights is None:
            lines.append(f"{name(u)} {name(v)}")
        else:
            lines.append(f"{name(u)} {name(v)} {g.edge_weight(u, v):g}")
    return "\n".join(lines) + ("\n" if lines else "")


def _splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 stream: (next_state, output word)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def generate(kind: str, params, seed: int = 0) -> Graph:
    """Deterministic graph generator.

    kind/params:
      - "path": n            path on n vertices
      - "cycle": n           cycle, n >= 3
      - "complete": n        clique K_n
      - "complete_bipartite": (a, b)
      - "cluster_graph": [s1, s2, ...]  disjoint cliques of the given sizes
      - "erdos_renyi": (n, p)

    erdos_renyi iterates pairs (i < j) in lexicographic order and draws one
    uniform deviate per pair from a splitmix64 stream seeded with ``seed``
    (u = word / 2**64; edge present iff u < p), so output is bit-stable
    across platforms. All other kinds ignore ``seed``.
    """
    if kind == "path":
        n = int(params)
        if n < 1:
            raise ValueError("path size must be >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        n = int(params)
        if n < 3:
            raise ValueError("cycle size must be >= 3 (no loops or multi-edges)")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        n = int(params)
        if n < 1:
            raise ValueError("clique size must be >= 1")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        a, b = (int(x) for x in params)
        if a < 1 or b < 1:
            raise ValueError("bipartite side sizes must be >= 1")
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "cluster_graph":
        sizes = [int(s) for s in params]
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError("clique sizes must be >= 1")
        edges = []
        base = 0
        for s in sizes:
            edges.extend((base + i, base + j) for i in range(s) for j in range(i + 1, s))
            base += s
        return Graph.from_edges(base, edges)
    if kind == "erdos_renyi":
        n, p = params
        n = int(n)
        p = float(p)
        if n < 1:
            raise ValueError("erdos_renyi size must be >= 1")
        if not (0.0 <= p <= 1.0):
            raise ValueError(f"edge probability must be in [0, 1], got {p}")
        state = seed & MASK64
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                state, word = _splitmix64(state)
                if word / 2.0**64 < p:
                    edges.append((i, j))
        return Graph.from_edges(n, edges)
    raise ValueError(f"unknown generator kind {kind!r}")


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on s with ids remapped to 0..|s|-1 preserving order.

    Returns (subgraph, remap) where remap maps original id -> new id.
    """
    if s.ids and s.ids[-1] >= g.n:
        raise ValueError(f"vertex {s.ids[-1]} out of range for n={g.n}")
    remap = {v: i for i, v in enumerate(s.ids)}
    weighted = g.weights is not None
    edges = []
    for u in s.ids:
        for pos, v in enumerate(g.adjacency[u]):
            if (g.directed or u < v) and v in remap:
                if weighted:
                    edges.append((remap[u], remap[v], g.weights[u][pos]))
                else:
                    edges.append((remap[u], remap[v]))
    sub = Graph.from_edges(len(s.ids), edges, directed=g.directed)
    return sub, remap
