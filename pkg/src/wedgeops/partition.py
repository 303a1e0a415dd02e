"""Vertex partitions and their quotient diagnostics.

Covers greedy dominating sets, the ego-traversing contraction, the
directed edge-sum quotient B, the aggregated two-walk matrix M, the
entrywise transfer inequality M <= B^2 with its explicit overcount
formula, and the equitable / wedge-equitable hierarchy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvariantViolation, PartitionAssignmentError
from .graph import Graph, VertexSet
from .wedge import classify_vertices

__all__ = [
    "BLOCK_EGO",
    "BLOCK_TRAVERSING_SINGLETON",
    "BLOCK_OTHER",
    "Partition",
    "TraversingTypes",
    "QuotientDiagnostics",
    "greedy_dominating_set",
    "core_dominating_set",
    "classify_traversing",
    "ego_traversing_partition",
    "quotient_edge_sum",
    "aggregated_two_walk",
    "transfer_diagnostics",
    "weighted_transfer_diagnostics",
    "is_equitable",
    "is_wedge_equitable",
    "parse_partition",
    "load_partition",
]

BLOCK_EGO = "ego"
BLOCK_TRAVERSING_SINGLETON = "traversing_singleton"
BLOCK_OTHER = "other"
_KINDS = (BLOCK_EGO, BLOCK_TRAVERSING_SINGLETON, BLOCK_OTHER)


@dataclass(frozen=True)
class Partition:
    """Blocks indexed 0..r-1; kinds tag ego blocks (with center), singletons, other.

    block_of maps each vertex to its block; blocks lists each block's members
    in ascending order. Both views are validated against each other. Every
    traversing_singleton block has exactly one member; every ego block
    contains its center.
    """

    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    block_kind: tuple[str, ...]
    block_center: tuple[int | None, ...]

    def __post_init__(self) -> None:
        n = len(self.block_of)
        r = len(self.blocks)
        if not (len(self.block_kind) == len(self.block_center) == r):
            raise ValueError("block metadata length does not match block count")
        seen = 0
        for a, members in enumerate(self.blocks):
            if not members:
                raise ValueError(f"block {a} is empty")
            if list(members) != sorted(set(members)):
                raise ValueError(f"block {a} is not a strictly increasing vertex list")
            kind = self.block_kind[a]
            if kind not in _KINDS:
                raise ValueError(f"unknown block kind {kind!r}")
            if kind == BLOCK_TRAVERSING_SINGLETON and len(members) != 1:
                raise ValueError(f"traversing_singleton block {a} has size {len(members)}")
            center = self.block_center[a]
            if kind == BLOCK_EGO:
                if center is None or center not in members:
                    raise ValueError(f"ego block {a} lacks a member center")
            elif center is not None:
                raise ValueError(f"non-ego block {a} carries a center")
            for v in members:
                if not 0 <= v < n or self.block_of[v] != a:
                    raise ValueError(f"vertex {v} of block {a} disagrees with block_of")
            seen += len(members)
        if seen != n:
            raise ValueError("blocks do not cover every vertex exactly once")

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def r(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_blocks(
        cls,
        blocks: list[list[int]] | tuple[tuple[int, ...], ...],
        n: int,
        kinds: tuple[str, ...] | None = None,
        centers: tuple[int | None, ...] | None = None,
    ) -> Partition:
        norm = tuple(tuple(sorted(b)) for b in blocks)
        block_of = [-1] * n
        for a, members in enumerate(norm):
            for v in members:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range 0..{n - 1}")
                if block_of[v] != -1:
                    raise ValueError(f"vertex {v} appears in two blocks")
                block_of[v] = a
        if any(b == -1 for b in block_of):
            missing = sum(1 for b in block_of if b == -1)
            raise ValueError(f"{missing} vertices are not covered by any block")
        if kinds is None:
            kinds = tuple(BLOCK_OTHER for _ in norm)
        if centers is None:
            centers = tuple(None for _ in norm)
        return cls(tuple(block_of), norm, tuple(kinds), tuple(centers))

    def indicator(self) -> np.ndarray:
        """n x r 0/1 block membership matrix."""
        s = np.zeros((self.n, self.r), dtype=np.int64)
        s[np.arange(self.n), np.array(self.block_of, dtype=np.int64)] = 1
        return s


@dataclass(frozen=True)
class TraversingTypes:
    """Split of the traversing vertices by their adjacency to the clustered core."""

    t1: VertexSet
    t2: VertexSet
    t3: VertexSet
    t4: VertexSet

    @property
    def union(self) -> tuple[int, ...]:
        return tuple(sorted([*self.t1, *self.t2, *self.t3, *self.t4]))

    @property
    def singleton_count(self) -> int:
        return len(self.t3) + len(self.t4)


@dataclass(frozen=True)
class QuotientDiagnostics:
    """B, M, their gap, and the off-diagonal transfer ratio for one partition.

    block_counts = (blocks, ego blocks, traversing singletons). b_edges sums
    B over unordered distinct block pairs; b_internal halves the diagonal.
    rho is 1 by convention when no off-diagonal two-step mass exists; it can
    reach 0 on adversarial partitions, so no lower bound is asserted here.
    """

    B: np.ndarray
    M: np.ndarray
    overcount: np.ndarray
    rho: float
    block_counts: tuple[int, int, int]
    b_edges: float
    b_internal: float


def _require_undirected(g: Graph) -> None:
    if g.directed:
        raise ValueError("partition diagnostics require an undirected graph")


def _check_partition(g: Graph, p: Partition) -> None:
    if p.n != g.n:
        raise ValueError(f"partition covers {p.n} vertices but graph has {g.n}")


def greedy_dominating_set(h: Graph) -> VertexSet:
    """Greedy max-coverage dominating set with smallest-id tie-breaking.

    Repeatedly picks the vertex whose closed neighborhood covers the most
    still-undominated vertices. Deterministic; not minimum.
    """
    undominated = set(range(h.n))
    chosen: list[int] = []
    while undominated:
        best, best_cover = -1, -1
        for v in range(h.n):
            cover = (v in undominated) + sum(1 for u in h.adjacency[v] if u in undominated)
            if cover > best_cover:
                best, best_cover = v, cover
        chosen.append(best)
        undominated.discard(best)
        undominated.difference_update(h.adjacency[best])
    return VertexSet(tuple(sorted(chosen)))


def core_dominating_set(g: Graph) -> VertexSet:
    """Greedy dominating set of the clustered core, in g's vertex ids."""
    _require_undirected(g)
    from .graph import induced_subgraph

    clustered, _ = classify_vertices(g)
    core, remap = induced_subgraph(g, clustered)
    inverse = {new: old for old, new in remap.items()}
    s = greedy_dominating_set(core)
    return VertexSet(tuple(sorted(inverse[v] for v in s)))


def _validate_dominators(g: Graph, s: VertexSet, clustered: VertexSet) -> None:
    cl = set(clustered)
    s_set = set(s)
    if not s_set <= cl:
        bad = sorted(s_set - cl)[0]
        raise ValueError(f"dominator {bad} is not a clustered vertex")
    for v in clustered:
        if v not in s_set and not any(u in s_set for u in g.adjacency[v]):
            raise ValueError(f"clustered vertex {v} is not dominated")


def _ego_assignments(
    g: Graph, s: VertexSet, clustered: VertexSet, traversing: VertexSet
) -> tuple[dict[int, int], list[int]]:
    """Map every assignable vertex to its dominator; return unassigned traversing.

    Clustered vertices go to their smallest-id adjacent dominator (dominators
    to themselves). Traversing vertices with a dominator neighbor go to the
    smallest such; those with only non-dominator clustered neighbors route
    through the smallest such neighbor's dominator. The rest stay unassigned.
    """
    s_set = set(s)
    cl = set(clustered)
    dom_of: dict[int, int] = {}
    for v in clustered:
        if v in s_set:
            dom_of[v] = v
        else:
            dom_of[v] = min(u for u in g.adjacency[v] if u in s_set)
    unassigned = []
    for v in traversing:
        in_s = [u for u in g.adjacency[v] if u in s_set]
        if in_s:
            dom_of[v] = min(in_s)
            continue
        in_core = [u for u in g.adjacency[v] if u in cl]
        if in_core:
            route = min(in_core)
            if route not in dom_of:
                raise PartitionAssignmentError(
                    f"vertex {v} routes through {route}, which has no dominator"
                )
            dom_of[v] = dom_of[route]
        else:
            unassigned.append(v)
    return dom_of, unassigned


def classify_traversing(g: Graph, s: VertexSet) -> TraversingTypes:
    """Split traversing vertices by adjacency to the dominators and the core.

    t1: a dominator neighbor exists. t2: only non-dominator clustered
    neighbors. t3/t4: no clustered neighbor at all; t3 when the assigned
    traversing neighbors point into exactly one ego region, t4 otherwise
    (zero or several regions). Only the t3-t4 union affects contraction.
    """
    _require_undirected(g)
    clustered, traversing = classify_vertices(g)
    _validate_dominators(g, s, clustered)
    s_set = set(s)
    cl = set(clustered)
    dom_of, unassigned = _ego_assignments(g, s, clustered, traversing)
    t1, t2 = [], []
    for v in traversing:
        if v in unassigned:
            continue
        if any(u in s_set for u in g.adjacency[v]):
            t1.append(v)
        else:
            t2.append(v)
    t3, t4 = [], []
    for v in unassigned:
        regions = {dom_of[u] for u in g.adjacency[v] if u in dom_of and u not in cl}
        (t3 if len(regions) == 1 else t4).append(v)
    return TraversingTypes(
        t1=VertexSet(tuple(t1)),
        t2=VertexSet(tuple(t2)),
        t3=VertexSet(tuple(sorted(t3))),
        t4=VertexSet(tuple(sorted(t4))),
    )


def ego_traversing_partition(g: Graph, s: VertexSet) -> Partition:
    """Contract each dominator's ego region to one block; isolate far traversers.

    Blocks are ordered: ego blocks by ascending dominator id, then singleton
    blocks by ascending vertex id. The block count always equals the number
    of dominators plus the number of traversing vertices with no clustered
    neighbor; this identity is asserted.
    """
    _require_undirected(g)
    clustered, traversing = classify_vertices(g)
    _validate_dominators(g, s, clustered)
    dom_of, unassigned = _ego_assignments(g, s, clustered, traversing)
    members: dict[int, list[int]] = {d: [] for d in s}
    for v, d in dom_of.items():
        members[d].append(v)
    blocks: list[list[int]] = []
    kinds: list[str] = []
    centers: list[int | None] = []
    for d in s:
        blocks.append(sorted(members[d]))
        kinds.append(BLOCK_EGO)
        centers.append(d)
    for v in sorted(unassigned):
        blocks.append([v])
        kinds.append(BLOCK_TRAVERSING_SINGLETON)
        centers.append(None)
    p = Partition.from_blocks(blocks, g.n, tuple(kinds), tuple(centers))
    if p.r != len(s) + len(unassigned):
        raise InvariantViolation("block count differs from dominators plus far traversers")
    return p


def quotient_edge_sum(g: Graph, p: Partition) -> np.ndarray:
    """Directed edge-sum quotient: B_ab counts ordered adjacent pairs across (a, b).

    Symmetric; B_aa is twice the internal edge count; total sum is 2m.
    """
    _require_undirected(g)
    _check_partition(g, p)
    ind = p.indicator()
    return ind.T @ g.adjacency_matrix() @ ind


def aggregated_two_walk(g: Graph, p: Partition) -> np.ndarray:
    """Blockwise sums of the squared adjacency matrix (diagonal included)."""
    _require_undirected(g)
    _check_partition(g, p)
    a = g.adjacency_matrix()
    ind = p.indicator()
    return ind.T @ (a @ a) @ ind


def _overcount_direct(adj: np.ndarray, p: Partition) -> np.ndarray:
    """Overcount via the explicit double sum over middle blocks.

    For each block c with blockwise-degree columns d(x), x in P_c, the
    contribution is outer(sum_x d(x), sum_y d(y)) minus sum_x outer(d(x), d(x)):
    exactly the sum over ordered pairs x != y of d_a(x) d_b(y).
    """
    ind = p.indicator().astype(adj.dtype)
    deg_blockwise = ind.T @ adj  # row a, column x: mass from x into block a
    out = np.zeros((p.r, p.r), dtype=adj.dtype)
    for members in p.blocks:
        cols = deg_blockwise[:, list(members)]
        rowsum = cols.sum(axis=1)
        out += np.outer(rowsum, rowsum) - cols @ cols.T
    return out


def _diagnostics(adj: np.ndarray, p: Partition, *, exact: bool) -> QuotientDiagnostics:
    ind = p.indicator().astype(adj.dtype)
    b = ind.T @ adj @ ind
    m = ind.T @ (adj @ adj) @ ind
    bsq = b @ b
    gap = bsq - m
    direct = _overcount_direct(adj, p)
    if exact:
        if not np.array_equal(gap, direct):
            raise InvariantViolation("subtraction and double-sum overcounts disagree")
        if gap.min(initial=0) < 0:
            raise InvariantViolation("negative overcount: transfer inequality violated")
    else:
        scale = max(1.0, float(np.abs(bsq).max(initial=0.0)))
        if not np.allclose(gap, direct, rtol=1e-9, atol=1e-9 * scale):
            raise InvariantViolation("subtraction and double-sum overcounts disagree")
        if gap.min(initial=0.0) < -1e-9 * scale:
            raise InvariantViolation("negative overcount: transfer inequality violated")
        gap = np.maximum(gap, 0)  # scrub float residue only
    off = ~np.eye(p.r, dtype=bool)
    denom = float(bsq[off].sum())
    rho = 1.0 if denom == 0 else float(m[off].sum()) / denom
    n_ego = sum(1 for k in p.block_kind if k == BLOCK_EGO)
    n_single = sum(1 for k in p.block_kind if k == BLOCK_TRAVERSING_SINGLETON)
    upper = np.triu(np.ones_like(b, dtype=bool), k=1)
    return QuotientDiagnostics(
        B=b,
        M=m,
        overcount=gap,
        rho=rho,
        block_counts=(p.r, n_ego, n_single),
        b_edges=float(b[upper].sum()),
        b_internal=float(np.trace(b)) / 2.0,
    )


def transfer_diagnostics(g: Graph, p: Partition) -> QuotientDiagnostics:
    """Quotient diagnostics with the overcount computed two independent ways.

    The matrix subtraction B^2 - M and the explicit middle-block double sum
    must agree entrywise in exact integers; disagreement raises, since it can
    only mean an implementation bug.
    """
    _require_undirected(g)
    _check_partition(g, p)
    return _diagnostics(g.adjacency_matrix(), p, exact=True)


def weighted_transfer_diagnostics(g: Graph, p: Partition) -> QuotientDiagnostics:
    """Transfer diagnostics with edge weights replacing counts.

    The two overcount computations must agree within 1e-9 relative; tiny
    negative float residue in the overcount is clamped to zero after the
    inequality is checked at the same tolerance.
    """
    _require_undirected(g)
    _check_partition(g, p)
    if g.weights is None:
        raise ValueError("weighted diagnostics require a weighted graph")
    return _diagnostics(g.weight_matrix(), p, exact=False)


def is_equitable(g: Graph, p: Partition) -> tuple[bool, tuple[int, int, int, int] | None]:
    """True iff blockwise degrees are constant on every block.

    Witness on failure: (a, c, x, y) with x, y in block c seeing different
    neighbor counts in block a.
    """
    _require_undirected(g)
    _check_partition(g, p)
    deg_blockwise = p.indicator().T @ g.adjacency_matrix()
    for c, members in enumerate(p.blocks):
        cols = deg_blockwise[:, list(members)]
        ref = cols[:, 0]
        diff = cols != ref[:, None]
        if diff.any():
            a, j = np.argwhere(diff)[0]
            return False, (int(a), c, members[0], members[int(j)])
    return True, None


def is_wedge_equitable(
    g: Graph, p: Partition
) -> tuple[bool, tuple[int, int, int, int, int] | None]:
    """True iff, per block triple, nonzero blockwise degrees share one support vertex.

    For blocks (a, b, c): all x in P_c with neighbors in P_a and all y with
    neighbors in P_b must coincide in a single common vertex (or one side must
    be empty). Equivalently, each block holds at most one non-isolated vertex.
    Witness on failure: (a, b, c, x, y) with x != y, x reaching P_a and y
    reaching P_b. On success the full overcount matrix (diagonal included) is
    asserted to vanish; off-diagonal alone is weaker, since a block whose two
    active vertices reach only one common block inflates just the diagonal.

    Implies equitable on graphs with minimum degree >= 1 (all blocks collapse
    to singletons). With isolated vertices the implication can fail: an edge
    plus an isolated vertex sharing a block is wedge-equitable, not equitable.
    """
    _require_undirected(g)
    _check_partition(g, p)
    deg_blockwise = p.indicator().T @ g.adjacency_matrix()
    for c, members in enumerate(p.blocks):
        cols = deg_blockwise[:, list(members)] > 0
        supports = [tuple(np.array(members)[cols[a]]) for a in range(p.r)]
        for a in range(p.r):
            xa = supports[a]
            if not xa:
                continue
            for b in range(a, p.r):
                xb = supports[b]
                if not xb:
                    continue
                if len(xa) == 1 and xa == xb:
                    continue
                witness = next((x, y) for x in xa for y in xb if x != y)
                return False, (a, b, c, int(witness[0]), int(witness[1]))
    diag = transfer_diagnostics(g, p)
    if diag.overcount.any():
        raise InvariantViolation("wedge-equitable partition shows nonzero overcount")
    return True, None


_KIND_TOKEN = re.compile(r"^(ego|traversing_singleton|other):(\S*)$")


def parse_partition(text: str, labels: tuple[str, ...]) -> Partition:
    """Parse one block per line, members named by external vertex labels.

    An optional first token "kind:" tags the block: "ego:CENTER" (center label
    required, must be a member), "traversing_singleton:", "other:". Untagged
    blocks are inferred: singletons become traversing_singleton, the rest
    other. "#" starts a comment; blank lines are skipped.
    """
    to_id = {lab: i for i, lab in enumerate(labels)}
    blocks: list[list[int]] = []
    kinds: list[str] = []
    centers: list[int | None] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = None
        center_label = None
        m = _KIND_TOKEN.match(tokens[0])
        if m:
            kind = m.group(1)
            center_label = m.group(2) or None
            tokens = tokens[1:]
        if not tokens:
            raise PartitionAssignmentError(f"line {lineno}: block has no members")
        ids = []
        for tok in tokens:
            if tok not in to_id:
                raise PartitionAssignmentError(f"line {lineno}: unknown vertex label {tok!r}")
            ids.append(to_id[tok])
        if kind is None:
            kind = BLOCK_TRAVERSING_SINGLETON if len(ids) == 1 else BLOCK_OTHER
        center = None
        if kind == BLOCK_EGO:
            if center_label is None:
                raise PartitionAssignmentError(f"line {lineno}: ego block needs ego:CENTER")
            if center_label not in to_id or to_id[center_label] not in ids:
                raise PartitionAssignmentError(
                    f"line {lineno}: ego center {center_label!r} is not a block member"
                )
            center = to_id[center_label]
        elif center_label is not None:
            raise PartitionAssignmentError(f"line {lineno}: only ego blocks take a center")
        blocks.append(ids)
        kinds.append(kind)
        centers.append(center)
    try:
        return Partition.from_blocks(blocks, len(labels), tuple(kinds), tuple(centers))
    except ValueError as exc:
        raise PartitionAssignmentError(str(exc)) from exc


def load_partition(path: str | Path, labels: tuple[str, ...]) -> Partition:
    return parse_partition(Path(path).read_text(encoding="utf-8"), labels)
