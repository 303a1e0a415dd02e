"""Two-walk operator core: triadic/open decomposition, incidence matrices,
wedge and triangle counts, clustering coefficients, vertex classification.

All operations are pure functions of an immutable Graph. Counts use 64-bit
integers throughout; matrix-power formulas appear only as debug cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._kernels import edge_triangle_arcs
from .errors import InvariantViolation, ResourceLimitError
from .graph import Graph, VertexSet

__all__ = [
    "DEFAULT_INCIDENCE_CAP",
    "WedgeSummary",
    "IncidenceMatrix",
    "OperatorParts",
    "two_walk_operator",
    "triadic_open_decomposition",
    "wedge_summary",
    "edge_triangle_multiplicities",
    "two_incidence",
    "triangle_incidence",
    "local_clustering",
    "is_cluster_graph",
    "classify_vertices",
    "directed_wedge_operators",
]

DEFAULT_INCIDENCE_CAP = 10**6


def _require_undirected(g: Graph) -> None:
    if g.directed:
        raise ValueError("operation requires an undirected graph (see directed_wedge_operators)")


def _checked_square(m: np.ndarray) -> np.ndarray:
    """Integer matrix product m @ m with a 64-bit overflow guard."""
    peak = int(np.abs(m).max(initial=0))
    if m.shape[0] * peak * peak >= 2**62:
        raise OverflowError("matrix square would overflow 64-bit integers")
    return m @ m


def _arc_triangles(g: Graph) -> np.ndarray:
    indptr, indices = g.csr
    return edge_triangle_arcs(indptr, indices)


def _vertex_triangles(g: Graph) -> np.ndarray:
    """tau(v) for all v: each triangle at v contributes to two incident arcs."""
    indptr, _ = g.csr
    t = _arc_triangles(g)
    sums = np.zeros(g.n, dtype=np.int64)
    if len(t):
        # reduceat over nonempty rows only: their starts are strictly
        # increasing and in range, and empty rows contribute nothing anyway
        starts = indptr[:-1]
        nonempty = starts < indptr[1:]
        sums[nonempty] = np.add.reduceat(t, starts[nonempty])
    return sums // 2


@dataclass(frozen=True)
class WedgeSummary:
    """Scalar wedge invariants of one graph, plus their per-vertex refinements."""

    n: int
    m: int
    tau: int
    m2: int
    omega: int
    per_vertex_tau: np.ndarray
    per_vertex_pi2: np.ndarray
    d2: np.ndarray
    n_clustered: int
    n_traversing: int


def wedge_summary(g: Graph) -> WedgeSummary:
    """Count two-paths, triangles, and open wedges; classify vertex counts.

    Triangles come from sorted-neighbor intersection; in debug runs the total
    is cross-checked against the closed-walk trace formula on small graphs.
    """
    _require_undirected(g)
    deg = np.array(g.degrees, dtype=np.int64)
    pi2 = deg * (deg - 1) // 2
    tau_v = _vertex_triangles(g)
    tau = int(tau_v.sum()) // 3
    m2 = int(pi2.sum())
    omega = m2 - 3 * tau
    d2 = np.array([sum(g.degree(u) - 1 for u in g.adjacency[v]) for v in range(g.n)], dtype=np.int64)
    if __debug__ and g.n <= 512:
        a = g.adjacency_matrix()
        if int(np.trace(_checked_square(a) @ a)) != 6 * tau:
            raise InvariantViolation("intersection triangle count disagrees with walk trace")
    n_clustered = int((tau_v > 0).sum())
    return WedgeSummary(
        n=g.n,
        m=g.m,
        tau=tau,
        m2=m2,
        omega=omega,
        per_vertex_tau=tau_v,
        per_vertex_pi2=pi2,
        d2=d2,
        n_clustered=n_clustered,
        n_traversing=g.n - n_clustered,
    )


def two_walk_operator(g: Graph) -> np.ndarray:
    """Endpoint co-incidence operator: squared adjacency minus the degree diagonal.

    Off-diagonal entries count common neighbors; the diagonal vanishes for
    unweighted graphs, so row sums equal the endpoint wedge degrees d2. For
    weighted graphs the weighted adjacency replaces the 0/1 one and the
    subtracted diagonal holds the weighted degrees.
    """
    _require_undirected(g)
    if g.weights is None:
        a = g.adjacency_matrix()
        w = _checked_square(a)
        np.fill_diagonal(w, 0)
        return w
    a = g.weight_matrix()
    w = a @ a - np.diag(a.sum(axis=1))
    return w


def triadic_open_decomposition(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Split the two-walk operator into its edge-supported and nonedge-supported parts.

    Returns (T, O) with T + O equal to the operator off-diagonal, disjoint
    supports, and zero diagonals. On edges T carries triangle multiplicities;
    on nonedges O counts open wedges joining the pair.
    """
    _require_undirected(g)
    w = two_walk_operator(g)
    mask = g.adjacency_matrix().astype(bool)
    t = np.where(mask, w, 0)
    o = np.where(mask, 0, w)
    np.fill_diagonal(o, 0)
    return t, o


def edge_triangle_multiplicities(g: Graph) -> dict[tuple[int, int], int]:
    """Triangle count per undirected edge, keyed by (u, v) with u < v."""
    _require_undirected(g)
    indptr, indices = g.csr
    t = _arc_triangles(g)
    out: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        for k in range(int(indptr[u]), int(indptr[u + 1])):
            v = int(indices[k])
            if u < v:
                out[(u, v)] = int(t[k])
    return out


@dataclass(frozen=True)
class IncidenceMatrix:
    """0/1 vertex-by-object incidence; dense form materialized on demand.

    Two-path columns carry 1s at the two endpoints; triangle columns at all
    three vertices. column_labels holds the underlying (i, j, k) triples.
    """

    rows: int
    column_labels: tuple[tuple[int, int, int], ...]
    ones_per_column: int

    @property
    def cols(self) -> int:
        return len(self.column_labels)

    @cached_property
    def matrix(self) -> np.ndarray:
        b = np.zeros((self.rows, len(self.column_labels)), dtype=np.int64)
        for col, label in enumerate(self.column_labels):
            if self.ones_per_column == 2:
                i, _, k = label
                b[i, col] = 1
                b[k, col] = 1
            else:
                for vtx in label:
                    b[vtx, col] = 1
        return b

    def gram(self) -> np.ndarray:
        b = self.matrix
        return b @ b.T


def two_incidence(g: Graph, max_columns: int = DEFAULT_INCIDENCE_CAP) -> IncidenceMatrix:
    """Vertex-by-two-path incidence; columns sorted by (middle, min, max endpoint)."""
    _require_undirected(g)
    deg = np.array(g.degrees, dtype=np.int64)
    m2 = int((deg * (deg - 1) // 2).sum())
    if m2 > max_columns:
        raise ResourceLimitError(f"two-path count {m2} exceeds column cap {max_columns}")
    labels = []
    for j in range(g.n):
        ns = g.adjacency[j]
        for a in range(len(ns)):
            for b in range(a + 1, len(ns)):
                labels.append((ns[a], j, ns[b]))
    labels.sort(key=lambda w: (w[1], w[0], w[2]))
    return IncidenceMatrix(rows=g.n, column_labels=tuple(labels), ones_per_column=2)


def triangle_incidence(g: Graph, max_columns: int = DEFAULT_INCIDENCE_CAP) -> IncidenceMatrix:
    """Vertex-by-triangle incidence; columns in lexicographic vertex order."""
    _require_undirected(g)
    tau = int(_vertex_triangles(g).sum()) // 3
    if tau > max_columns:
        raise ResourceLimitError(f"triangle count {tau} exceeds column cap {max_columns}")
    nbr_sets = [set(ns) for ns in g.adjacency]
    labels = []
    for i in range(g.n):
        for j in g.adjacency[i]:
            if j <= i:
                continue
            for k in g.adjacency[j]:
                if k > j and k in nbr_sets[i]:
                    labels.append((i, j, k))
    labels.sort()
    return IncidenceMatrix(rows=g.n, column_labels=tuple(labels), ones_per_column=3)


def local_clustering(g: Graph) -> tuple[np.ndarray, float]:
    """Per-vertex clustering coefficients and the global transitivity.

    Vertices of degree < 2 get coefficient 0 by convention; transitivity is
    defined as 0 for graphs without two-paths.
    """
    s = wedge_summary(g)
    c = np.zeros(g.n, dtype=np.float64)
    pos = s.per_vertex_pi2 > 0
    c[pos] = s.per_vertex_tau[pos] / s.per_vertex_pi2[pos]
    transitivity = 3.0 * s.tau / s.m2 if s.m2 > 0 else 0.0
    return c, transitivity


def is_cluster_graph(g: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """True iff every wedge closes (each component a clique).

    On failure returns a witness open wedge (i, j, k): i and k both adjacent
    to the middle j but not to each other.
    """
    _require_undirected(g)
    nbr_sets = [set(ns) for ns in g.adjacency]
    for j in range(g.n):
        ns = g.adjacency[j]
        for a in range(len(ns)):
            for b in range(a + 1, len(ns)):
                if ns[b] not in nbr_sets[ns[a]]:
                    return False, (ns[a], j, ns[b])
    return True, None


def classify_vertices(g: Graph) -> tuple[VertexSet, VertexSet]:
    """Partition vertices into clustered (in some triangle) and traversing (in none).

    Runs two independent tests per vertex, triangle count and edgeless induced
    neighborhood, and insists they agree.
    """
    _require_undirected(g)
    tau_v = _vertex_triangles(g)
    nbr_sets = [set(ns) for ns in g.adjacency]
    clustered = []
    traversing = []
    for v in range(g.n):
        ns = g.adjacency[v]
        has_nbr_edge = any(
            ns[b] in nbr_sets[ns[a]] for a in range(len(ns)) for b in range(a + 1, len(ns))
        )
        if has_nbr_edge != (tau_v[v] > 0):
            raise InvariantViolation(f"triangle count and neighborhood test disagree at vertex {v}")
        (clustered if has_nbr_edge else traversing).append(v)
    return VertexSet(tuple(clustered)), VertexSet(tuple(traversing))


@dataclass(frozen=True)
class OperatorParts:
    """A directed two-step operator with its edge/nonedge-masked split."""

    operator: np.ndarray
    triadic: np.ndarray
    open_part: np.ndarray


def directed_wedge_operators(g: Graph) -> dict[str, OperatorParts]:
    """The four directed two-step operators, each with its support split.

    Keys: "out_out" (two-step walks), "in_in" (its reverse), "common_targets"
    (endpoints pointing at a shared middle), "common_sources" (endpoints fed
    by a shared middle). Masks use the directed arc set and its complement;
    diagonals are excluded from both parts.
    """
    if not g.directed:
        raise ValueError("operation requires a directed graph")
    a = g.adjacency_matrix()
    at = a.T.copy()
    mats = {
        "out_out": _checked_square(a),
        "in_in": _checked_square(at),
        "common_targets": a @ at,
        "common_sources": at @ a,
    }
    edge_mask = a.astype(bool)
    out = {}
    for name, x in mats.items():
        tri = np.where(edge_mask, x, 0)
        np.fill_diagonal(tri, 0)
        opn = np.where(edge_mask, 0, x)
        np.fill_diagonal(opn, 0)
        out[name] = OperatorParts(operator=x, triadic=tri, open_part=opn)
    return out
