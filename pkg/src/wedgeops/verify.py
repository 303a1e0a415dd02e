"""Composable invariant checks over graphs and partitions.

Each check recomputes one identity from scratch and reports a CheckResult
with a witness on failure. The decomposition check accepts injected matrices
so a corrupted input can be demonstrated to fail. Random suites draw seeded
graphs and partitions for adversarial coverage.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import oracle
from .errors import InvariantViolation
from .graph import Graph, generate
from .partition import (
    BLOCK_OTHER,
    BLOCK_TRAVERSING_SINGLETON,
    Partition,
    core_dominating_set,
    ego_traversing_partition,
    is_equitable,
    is_wedge_equitable,
    transfer_diagnostics,
)
from .spectral import closure_norm_bound, symmetric_spectrum, triangle_spectral_bound
from .wedge import (
    edge_triangle_multiplicities,
    is_cluster_graph,
    triadic_open_decomposition,
    triangle_incidence,
    two_incidence,
    two_walk_operator,
    wedge_summary,
)

__all__ = [
    "CheckResult",
    "check_decomposition",
    "check_nonedge_sum",
    "check_two_path_gram",
    "check_triangle_gram",
    "check_openness",
    "check_spectral_bounds",
    "check_transfer",
    "check_equitable_hierarchy",
    "check_oracle_counts",
    "check_oracle_blocks",
    "random_partition",
    "graph_checks",
    "partition_checks",
    "random_suite",
]

_GRAM_CAP = 200_000
_SPECTRAL_CAP = 2000


@dataclass(frozen=True)
class CheckResult:
    check: str
    graph: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  [{self.detail}]" if self.detail and not self.passed else ""
        return f"{status}  {self.check}  {self.graph}{tail}"


def _result(check: str, graph: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(check=check, graph=graph, passed=bool(passed), detail=detail)


def check_decomposition(
    g: Graph,
    label: str,
    t: np.ndarray | None = None,
    o: np.ndarray | None = None,
) -> CheckResult:
    """T + O = W off-diagonal, disjoint supports on edges/nonedges, zero diagonals.

    t and o default to the library's own decomposition; passing a modified
    matrix demonstrates the check catches corruption.
    """
    w = two_walk_operator(g)
    if t is None or o is None:
        t0, o0 = triadic_open_decomposition(g)
        t = t0 if t is None else t
        o = o0 if o is None else o
    adj = g.adjacency_matrix().astype(bool)
    off = ~np.eye(g.n, dtype=bool)
    bad = np.argwhere((t + o != w) & off)
    if len(bad):
        i, j = bad[0]
        return _result(
            "decomposition_sum", label, False, f"T+O != W at ({i},{j}): {t[i,j]}+{o[i,j]} vs {w[i,j]}"
        )
    if np.any(t[~adj]) or np.any(np.diag(t)):
        return _result("decomposition_sum", label, False, "edge part supported off the edge set")
    if np.any(o[adj & off]) or np.any(np.diag(o)):
        return _result("decomposition_sum", label, False, "open part supported on an edge")
    if np.any((t != 0) & (o != 0)):
        return _result("decomposition_sum", label, False, "supports overlap")
    return _result("decomposition_sum", label, True)


def check_nonedge_sum(g: Graph, label: str) -> CheckResult:
    """Sum of the open part over unordered nonedges equals the open-wedge mass."""
    _, o = triadic_open_decomposition(g)
    s = wedge_summary(g)
    upper = int(np.triu(o, k=1).sum())
    ok = upper == s.omega
    return _result(
        "nonedge_sum", label, ok, "" if ok else f"sum {upper} vs omega {s.omega}"
    )


def check_two_path_gram(g: Graph, label: str, cap: int = _GRAM_CAP) -> CheckResult:
    """Gram of the two-path incidence minus A^2 is the diagonal d2 - d."""
    s = wedge_summary(g)
    if s.m2 > cap:
        return _result("two_path_gram", label, True, f"skipped: m2 {s.m2} over cap")
    b2 = two_incidence(g, max_columns=cap)
    gram = b2.gram()
    a = g.adjacency_matrix()
    diff = gram - a @ a
    expect = s.d2 - np.array(g.degrees, dtype=np.int64)
    if np.any(diff != np.diag(expect)):
        bad = np.argwhere(diff != np.diag(expect))[0]
        return _result("two_path_gram", label, False, f"mismatch at {tuple(int(x) for x in bad)}")
    return _result("two_path_gram", label, True)


def check_triangle_gram(g: Graph, label: str, cap: int = _GRAM_CAP) -> CheckResult:
    """Gram of the triangle incidence equals diag(per-vertex triangles) + edge part."""
    s = wedge_summary(g)
    if s.tau > cap:
        return _result("triangle_gram", label, True, f"skipped: tau {s.tau} over cap")
    bt = triangle_incidence(g, max_columns=cap)
    t, _ = triadic_open_decomposition(g)
    expect = np.diag(s.per_vertex_tau) + t
    gram = bt.gram()
    if np.any(gram != expect):
        bad = np.argwhere(gram != expect)[0]
        return _result("triangle_gram", label, False, f"mismatch at {tuple(int(x) for x in bad)}")
    return _result("triangle_gram", label, True)


def check_openness(g: Graph, label: str) -> CheckResult:
    """omega = 0 iff cluster graph; any witness must be a genuine open wedge."""
    s = wedge_summary(g)
    flag, witness = is_cluster_graph(g)
    if flag != (s.omega == 0):
        return _result("openness", label, False, f"omega {s.omega} but cluster-graph {flag}")
    if witness is not None:
        i, j, k = witness
        genuine = g.has_edge(i, j) and g.has_edge(j, k) and not g.has_edge(i, k) and i != k
        if not genuine:
            return _result("openness", label, False, f"witness {witness} is not an open wedge")
    return _result("openness", label, True)


def check_spectral_bounds(g: Graph, label: str) -> CheckResult:
    """Triangle and closure bound chains hold; spectral moments match exact counts."""
    if g.n > _SPECTRAL_CAP:
        return _result("spectral_bounds", label, True, f"skipped: n {g.n} over cap")
    s = wedge_summary(g)
    tb = triangle_spectral_bound(g)
    if not tb.holds:
        return _result("spectral_bounds", label, False, f"triangle bound: {tb.lhs} > {tb.rhs}")
    try:
        c1, c2 = closure_norm_bound(g)
    except InvariantViolation as exc:
        return _result("spectral_bounds", label, False, str(exc))
    if not (c1.holds and c2.holds):
        return _result("spectral_bounds", label, False, "closure chain violated")
    spectrum = symmetric_spectrum(g.adjacency_matrix().astype(np.float64))
    m2_val, m3_val = spectrum.moment(2), spectrum.moment(3)
    if abs(m2_val - 2 * g.m) > 1e-6 * max(1.0, 2 * g.m):
        return _result("spectral_bounds", label, False, f"second moment {m2_val} vs {2 * g.m}")
    if abs(m3_val - 6 * s.tau) > 1e-6 * max(1.0, 6 * s.tau):
        return _result("spectral_bounds", label, False, f"third moment {m3_val} vs {6 * s.tau}")
    return _result("spectral_bounds", label, True)


def check_transfer(g: Graph, p: Partition, label: str) -> CheckResult:
    """M <= B^2 entrywise; the two overcount computations agree (raises inside)."""
    try:
        d = transfer_diagnostics(g, p)
    except InvariantViolation as exc:
        return _result("transfer", label, False, str(exc))
    if np.any(d.M > d.B @ d.B):
        bad = np.argwhere(d.M > d.B @ d.B)[0]
        return _result("transfer", label, False, f"M > B^2 at {tuple(int(x) for x in bad)}")
    if not 0.0 <= d.rho <= 1.0:
        return _result("transfer", label, False, f"rho {d.rho} outside [0,1]")
    return _result("transfer", label, True)


def check_equitable_hierarchy(g: Graph, p: Partition, label: str) -> CheckResult:
    """Wedge-equitable iff zero total overcount; implies equitable at min degree >= 1.

    The implication needs every vertex non-isolated: an isolated vertex
    sharing a block with an active one is wedge-equitable (single support
    vertex) yet inequitable (blockwise degrees differ).
    """
    try:
        we, _ = is_wedge_equitable(g, p)
    except InvariantViolation as exc:
        return _result("equitable_hierarchy", label, False, str(exc))
    d = transfer_diagnostics(g, p)
    zero_total = not d.overcount.any()
    if we != zero_total:
        return _result(
            "equitable_hierarchy", label, False,
            f"wedge-equitable {we} but zero-overcount {zero_total}",
        )
    if we and min(g.degrees, default=1) > 0:
        eq, wit = is_equitable(g, p)
        if not eq:
            return _result("equitable_hierarchy", label, False, f"not equitable: witness {wit}")
    return _result("equitable_hierarchy", label, True)


def check_oracle_counts(g: Graph, label: str) -> CheckResult:
    """Brute-force wedge/triangle enumeration agrees with every matrix-side count."""
    s = wedge_summary(g)
    wl = oracle.enumerate_wedges(g)
    tris = oracle.enumerate_triangles(g)
    if len(wl) != s.m2 or wl.closed_count != 3 * s.tau or wl.open_count != s.omega:
        return _result(
            "oracle_counts", label, False,
            f"wedges {len(wl)}/{wl.closed_count}/{wl.open_count} vs {s.m2}/{3 * s.tau}/{s.omega}",
        )
    if len(tris) != s.tau:
        return _result("oracle_counts", label, False, f"{len(tris)} triangles vs tau {s.tau}")
    tau_v = np.zeros(g.n, dtype=np.int64)
    t_e: dict[tuple[int, int], int] = {}
    for i, j, k in tris:
        tau_v[[i, j, k]] += 1
        for e in ((i, j), (i, k), (j, k)):
            t_e[e] = t_e.get(e, 0) + 1
    if np.any(tau_v != s.per_vertex_tau):
        v = int(np.argwhere(tau_v != s.per_vertex_tau)[0][0])
        return _result("oracle_counts", label, False, f"tau({v}) {tau_v[v]} vs {s.per_vertex_tau[v]}")
    lib_te = edge_triangle_multiplicities(g)
    for e, cnt in lib_te.items():
        if t_e.get(e, 0) != cnt:
            return _result("oracle_counts", label, False, f"t_e {e}: {t_e.get(e, 0)} vs {cnt}")
    return _result("oracle_counts", label, True)


def check_oracle_blocks(g: Graph, p: Partition, label: str) -> CheckResult:
    """Aggregated two-walk matrix equals the walk-enumeration oracle exactly."""
    d = transfer_diagnostics(g, p)
    naive = oracle.naive_block_two_walks(g, p)
    if not np.array_equal(naive, d.M):
        bad = np.argwhere(naive != d.M)[0]
        return _result("oracle_blocks", label, False, f"M mismatch at {tuple(int(x) for x in bad)}")
    return _result("oracle_blocks", label, True)


def random_partition(n: int, rng: random.Random) -> Partition:
    """Uniform block assignment, target block count from {2,...,min(n,6)}.

    Blocks that come up empty are dropped and the rest renumbered, so the
    realized count may be smaller than the draw.
    """
    if n < 1:
        raise ValueError("partition needs at least one vertex")
    hi = min(n, 6)
    r = rng.randint(2, hi) if hi >= 2 else 1
    assign = [rng.randrange(r) for _ in range(n)]
    used = sorted(set(assign))
    renum = {b: i for i, b in enumerate(used)}
    blocks: list[list[int]] = [[] for _ in used]
    for v, b in enumerate(assign):
        blocks[renum[b]].append(v)
    kinds = tuple(
        BLOCK_TRAVERSING_SINGLETON if len(b) == 1 else BLOCK_OTHER for b in blocks
    )
    return Partition.from_blocks(blocks, n, kinds, tuple(None for _ in blocks))


def graph_checks(g: Graph, label: str, incidence_cap: int = _GRAM_CAP) -> list[CheckResult]:
    """Every per-graph identity check, oracle checks included at oracle scale."""
    out = [
        check_decomposition(g, label),
        check_nonedge_sum(g, label),
        check_two_path_gram(g, label, cap=incidence_cap),
        check_triangle_gram(g, label, cap=incidence_cap),
        check_openness(g, label),
        check_spectral_bounds(g, label),
    ]
    if g.n <= oracle.ORACLE_MAX_VERTICES:
        out.append(check_oracle_counts(g, label))
    return out


def partition_checks(g: Graph, p: Partition, label: str) -> list[CheckResult]:
    out = [
        check_transfer(g, p, label),
        check_equitable_hierarchy(g, p, label),
    ]
    if g.n <= oracle.ORACLE_MAX_VERTICES:
        out.append(check_oracle_blocks(g, p, label))
    return out


def random_suite(seed: int, graphs: int = 25) -> list[CheckResult]:
    """Seeded random graphs and partitions through every check, plus ego partitions."""
    rng = random.Random(seed)
    results: list[CheckResult] = []
    for idx in range(graphs):
        n = rng.randint(4, 16)
        p_edge = rng.choice([0.2, 0.35, 0.5])
        g = generate("erdos_renyi", (n, p_edge), seed=seed * 1009 + idx)
        label = f"random[{idx}](n={n},p={p_edge})"
        results.extend(graph_checks(g, label))
        part = random_partition(g.n, rng)
        results.extend(partition_checks(g, part, label + "/random-partition"))
        s = core_dominating_set(g)
        ego = ego_traversing_partition(g, s)
        results.extend(partition_checks(g, ego, label + "/ego-partition"))
    return results
