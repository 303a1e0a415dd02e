import numpy as np
import pytest

from wedgeops import (
    Graph,
    Partition,
    PartitionAssignmentError,
    VertexSet,
    aggregated_two_walk,
    classify_traversing,
    core_dominating_set,
    ego_traversing_partition,
    generate,
    greedy_dominating_set,
    is_equitable,
    is_wedge_equitable,
    parse_partition,
    quotient_edge_sum,
    transfer_diagnostics,
    weighted_transfer_diagnostics,
)
from wedgeops.partition import BLOCK_EGO, BLOCK_TRAVERSING_SINGLETON
from wedgeops.verify import random_partition

import random


APPENDIX_BLOCKS = [[0, 2], [1, 3]]  # c4 fixture labels 1,3 / 2,4


def c4_partition():
    return Partition.from_blocks(APPENDIX_BLOCKS, 4)


# Partition container


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition.from_blocks([[0, 1]], 3)  # vertex 2 uncovered
    with pytest.raises(ValueError):
        Partition.from_blocks([[0, 1], [1, 2]], 3)  # overlap
    with pytest.raises(ValueError):
        Partition.from_blocks([[0], []], 1)  # empty block
    with pytest.raises(ValueError):
        Partition(
            block_of=(0, 0),
            blocks=((0, 1),),
            block_kind=(BLOCK_TRAVERSING_SINGLETON,),
            block_center=(None,),
        )  # singleton kind with two members
    with pytest.raises(ValueError):
        Partition(
            block_of=(0, 0),
            blocks=((0, 1),),
            block_kind=(BLOCK_EGO,),
            block_center=(None,),
        )  # ego without center


def test_partition_indicator():
    p = Partition.from_blocks([[0, 2], [1]], 3)
    ind = p.indicator()
    assert ind.tolist() == [[1, 0], [0, 1], [1, 0]]
    assert p.block_of == (0, 1, 0)


# dominating sets


def test_greedy_clique_smallest_id(k3):
    assert tuple(greedy_dominating_set(k3)) == (0,)


def test_greedy_star_center():
    star = generate("complete_bipartite", (1, 4))
    assert tuple(greedy_dominating_set(star)) == (0,)


def test_greedy_path_five():
    s = greedy_dominating_set(generate("path", 5))
    assert tuple(s) == (1, 3)
    covered = set(s)
    g = generate("path", 5)
    for v in s:
        covered.update(g.adjacency[v])
    assert covered == set(range(5))


def test_greedy_empty_graph():
    g = Graph(n=0, adjacency=())
    assert len(greedy_dominating_set(g)) == 0


def test_greedy_dominates_random_graphs():
    for seed in range(30):
        g = generate("erdos_renyi", (12, 0.3), seed=seed)
        s = set(greedy_dominating_set(g))
        for v in range(g.n):
            assert v in s or any(u in s for u in g.adjacency[v])


def test_core_dominating_set_karate(karate):
    s = core_dominating_set(karate)
    assert len(s) > 0
    clustered = set()
    from wedgeops import classify_vertices

    cl, _ = classify_vertices(karate)
    clustered = set(cl)
    assert set(s) <= clustered
    for v in clustered:
        assert v in set(s) or any(u in set(s) for u in karate.adjacency[v])


# traversing classification


def test_classify_star_all_far():
    star = generate("complete_bipartite", (1, 3))
    tt = classify_traversing(star, VertexSet(()))
    assert tt.union == (0, 1, 2, 3)
    assert len(tt.t1) == len(tt.t2) == 0
    assert tt.singleton_count == 4


def test_classify_pendant_depends_on_dominator_choice():
    # triangle 0-1-2 plus pendant 3 attached to 0
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    tt = classify_traversing(g, VertexSet((0,)))
    assert tuple(tt.t1) == (3,)
    tt = classify_traversing(g, VertexSet((1,)))
    assert tuple(tt.t2) == (3,)


def test_classify_karate(karate):
    s = core_dominating_set(karate)
    tt = classify_traversing(karate, s)
    assert len(tt.union) == 2


def test_classify_rejects_non_dominating(karate):
    with pytest.raises(ValueError):
        classify_traversing(karate, VertexSet(()))


def test_classify_rejects_traversing_dominator(karate):
    from wedgeops import classify_vertices

    _, tr = classify_vertices(karate)
    bad = VertexSet((tr.ids[0],))
    with pytest.raises(ValueError):
        classify_traversing(karate, bad)


def test_far_traversers_split_by_attachment_regions():
    # two triangles bridged by paths: 6-7 hang off opposite ego regions,
    # 8 touches both regions through assigned traversers, 9 floats free
    g = Graph.from_edges(
        10,
        [
            (0, 1), (1, 2), (0, 2),      # triangle A
            (3, 4), (4, 5), (3, 5),      # triangle B
            (0, 6),                       # t1 traverser at A
            (3, 7),                       # t1 traverser at B
            (6, 8), (7, 8),               # 8 sees both regions -> t4
            (6, 9),                       # 9 sees only region A -> t3
        ],
    )
    s = VertexSet((0, 3))
    tt = classify_traversing(g, s)
    assert tuple(tt.t1) == (6, 7)
    assert tuple(tt.t3) == (9,)
    assert tuple(tt.t4) == (8,)


# ego-traversing partition


def test_ego_partition_clique(k3):
    p = ego_traversing_partition(k3, VertexSet((0,)))
    assert p.r == 1 and p.blocks == ((0, 1, 2),)
    assert p.block_kind == (BLOCK_EGO,) and p.block_center == (0,)


def test_ego_partition_triangle_pendant():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    p = ego_traversing_partition(g, VertexSet((0,)))
    assert p.r == 1 and p.blocks == ((0, 1, 2, 3),)


def test_ego_partition_karate(karate):
    s = core_dominating_set(karate)
    tt = classify_traversing(karate, s)
    p = ego_traversing_partition(karate, s)
    assert p.r == len(s) + tt.singleton_count
    assert sorted(v for b in p.blocks for v in b) == list(range(34))
    for kind, members, center in zip(p.block_kind, p.blocks, p.block_center):
        if kind == BLOCK_EGO:
            assert center in members and center in set(s)
        else:
            assert kind == BLOCK_TRAVERSING_SINGLETON and len(members) == 1


def test_ego_partition_no_core_all_singletons(c4):
    p = ego_traversing_partition(c4, VertexSet(()))
    assert p.r == 4
    assert all(k == BLOCK_TRAVERSING_SINGLETON for k in p.block_kind)


# quotient matrices


def test_quotient_edge_sum_counterexample(c4):
    b = quotient_edge_sum(c4, c4_partition())
    assert b.tolist() == [[0, 4], [4, 0]]


def test_quotient_edge_sum_identity_and_total(karate):
    singletons = Partition.from_blocks([[v] for v in range(karate.n)], karate.n)
    b = quotient_edge_sum(karate, singletons)
    assert np.array_equal(b, karate.adjacency_matrix())
    whole = Partition.from_blocks([list(range(karate.n))], karate.n)
    assert quotient_edge_sum(karate, whole).tolist() == [[2 * karate.m]]


def test_aggregated_two_walk_counterexample(c4):
    m = aggregated_two_walk(c4, c4_partition())
    assert m.tolist() == [[8, 0], [0, 8]]


def test_aggregated_two_walk_degenerate(k3):
    singletons = Partition.from_blocks([[0], [1], [2]], 3)
    a = k3.adjacency_matrix()
    assert np.array_equal(aggregated_two_walk(k3, singletons), a @ a)
    whole = Partition.from_blocks([[0, 1, 2]], 3)
    total = int(sum(d * d for d in k3.degrees))
    assert aggregated_two_walk(k3, whole).tolist() == [[total]]


# transfer diagnostics


def test_transfer_counterexample_exact(c4):
    d = transfer_diagnostics(c4, c4_partition())
    bsq = d.B @ d.B
    assert bsq.tolist() == [[16, 0], [0, 16]]
    assert d.M.tolist() == [[8, 0], [0, 8]]
    assert d.overcount.tolist() == [[8, 0], [0, 8]]
    assert d.overcount[0, 1] == 0
    assert d.rho == 1.0  # off-diagonal mass is zero on both sides


def test_transfer_singletons_zero_overcount(karate):
    singletons = Partition.from_blocks([[v] for v in range(karate.n)], karate.n)
    d = transfer_diagnostics(karate, singletons)
    assert not d.overcount.any()
    assert d.rho == 1.0


def test_transfer_bipartite_sides_positive_diagonal():
    g = generate("complete_bipartite", (2, 2))
    p = Partition.from_blocks([[0, 1], [2, 3]], 4)
    d = transfer_diagnostics(g, p)
    assert d.overcount[0, 0] > 0 and d.overcount[1, 1] > 0


def test_transfer_mass_conservation(karate):
    rng = random.Random(11)
    for _ in range(20):
        p = random_partition(karate.n, rng)
        d = transfer_diagnostics(karate, p)
        assert int(d.B.sum()) == 2 * karate.m
        assert int(d.M.sum()) == sum(dv * dv for dv in karate.degrees)
        assert np.all(d.M <= d.B @ d.B)
        assert np.array_equal(d.B, d.B.T)
        assert all(int(x) % 2 == 0 for x in np.diag(d.B))


def test_transfer_block_accounting(florentine):
    s = core_dominating_set(florentine)
    p = ego_traversing_partition(florentine, s)
    d = transfer_diagnostics(florentine, p)
    assert d.b_edges + d.b_internal == florentine.m
    blocks, ego, singles = d.block_counts
    assert blocks == ego + singles == p.r


# equitability


def test_equitable_counterexample_partition(c4):
    ok, witness = is_equitable(c4, c4_partition())
    assert ok and witness is None


def test_equitable_path_blocks(p3):
    ok, _ = is_equitable(p3, Partition.from_blocks([[0, 2], [1]], 3))
    assert ok


def test_not_equitable_path_four():
    g = generate("path", 4)
    blocks = [[0, 1], [2, 3]]
    ok, witness = is_equitable(g, Partition.from_blocks(blocks, 4))
    assert not ok
    a, c, x, y = witness

    def hits(v):
        return sum(1 for u in g.adjacency[v] if u in set(blocks[a]))

    assert hits(x) != hits(y)


def test_wedge_equitable_cases(c4, k3):
    ok, _ = is_wedge_equitable(c4, Partition.from_blocks([[v] for v in range(4)], 4))
    assert ok
    ok, witness = is_wedge_equitable(c4, c4_partition())
    assert not ok
    a, b, c, x, y = witness
    assert x != y
    ok, _ = is_wedge_equitable(k3, Partition.from_blocks([[0], [1], [2]], 3))
    assert ok


def test_wedge_equitable_implies_equitable_on_samples(karate):
    rng = random.Random(23)
    for seed in range(40):
        g = generate("erdos_renyi", (10, 0.4), seed=seed)
        p = random_partition(g.n, rng)
        weq, _ = is_wedge_equitable(g, p)
        if weq and min(g.degrees) > 0:
            eq, _ = is_equitable(g, p)
            assert eq


def test_isolated_vertex_breaks_the_hierarchy():
    # one edge plus an isolated vertex sharing its block: wedge-equitable
    # (single support vertex per block) yet inequitable — the hierarchy
    # implication genuinely needs minimum degree >= 1
    g = Graph.from_edges(3, [(0, 1)])
    p = Partition.from_blocks([[0, 2], [1]], 3)
    weq, _ = is_wedge_equitable(g, p)
    eq, _ = is_equitable(g, p)
    assert weq and not eq


def test_c4_separates_equitable_from_wedge_equitable(c4):
    # the strict-hierarchy witness: equitable holds, wedge-equitable fails
    assert is_equitable(c4, c4_partition())[0]
    assert not is_wedge_equitable(c4, c4_partition())[0]


# weighted diagnostics


def test_weighted_unit_weights_match_unweighted(c4):
    edges = [(u, v, 1.0) for u, v in c4.edges()]
    gw = Graph.from_edges(4, edges)
    d0 = transfer_diagnostics(c4, c4_partition())
    d1 = weighted_transfer_diagnostics(gw, c4_partition())
    assert np.allclose(d1.B, d0.B) and np.allclose(d1.M, d0.M)
    assert np.allclose(d1.overcount, d0.overcount)
    assert d1.rho == pytest.approx(d0.rho)


def test_weighted_scaling(c4):
    edges = [(u, v, 2.0) for u, v in c4.edges()]
    gw = Graph.from_edges(4, edges)
    d = weighted_transfer_diagnostics(gw, c4_partition())
    assert np.allclose(d.B, [[0, 8], [8, 0]])
    assert np.allclose(d.M, [[32, 0], [0, 32]])
    assert np.allclose(d.overcount, [[32, 0], [0, 32]])


def test_weighted_single_edge():
    g = Graph.from_edges(2, [(0, 1, 0.5)])
    p = Partition.from_blocks([[0], [1]], 2)
    d = weighted_transfer_diagnostics(g, p)
    assert not d.overcount.any()


def test_weighted_requires_weights(c4):
    with pytest.raises(ValueError):
        weighted_transfer_diagnostics(c4, c4_partition())


# partition files


def test_parse_partition_with_kinds(c4_result):
    labels = tuple(c4_result.labels)
    p = parse_partition("other: 1 3\nother: 2 4\n", labels)
    assert p.blocks == ((0, 2), (1, 3))
    p = parse_partition("1 3\n2 4\n", labels)
    assert p.block_kind == ("other", "other")
    p = parse_partition("1 2 3\n4\n", labels)
    assert p.block_kind == ("other", "traversing_singleton")


def test_parse_partition_ego_center(c4_result):
    labels = tuple(c4_result.labels)
    p = parse_partition("ego:1 1 2 3 4\n", labels)
    assert p.block_kind == ("ego",) and p.block_center == (0,)
    with pytest.raises(PartitionAssignmentError):
        parse_partition("ego: 1 2 3 4\n", labels)
    with pytest.raises(PartitionAssignmentError):
        parse_partition("ego:9 1 2 3 4\n", labels)


def test_parse_partition_errors(c4_result):
    labels = tuple(c4_result.labels)
    with pytest.raises(PartitionAssignmentError):
        parse_partition("1 9\n2 3 4\n", labels)  # unknown label
    with pytest.raises(PartitionAssignmentError):
        parse_partition("1 2\n2 3 4\n", labels)  # duplicate
    with pytest.raises(PartitionAssignmentError):
        parse_partition("1 2\n", labels)  # uncovered
    with pytest.raises(PartitionAssignmentError):
        parse_partition("other:\n", labels)  # no members
