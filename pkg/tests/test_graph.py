import math
import random

import pytest

from dompack import (
    Graph,
    GraphError,
    Multigraph,
    VertexRangeError,
    VertexSet,
    gen_named,
    is_dominating,
    is_packing,
)
from dompack.generators import GenSpec, derive_seed, gen_gnp


def vs(g, *members):
    return VertexSet(g.n, members)


def test_closed_neighborhood_examples():
    c4 = gen_named("C4")
    assert sorted(c4.closed_neighborhood(0)) == [0, 1, 3]
    k1 = Graph(1)
    assert sorted(k1.closed_neighborhood(0)) == [0]
    star = gen_named("star5")
    assert sorted(star.closed_neighborhood(0)) == [0, 1, 2, 3, 4, 5]


def test_second_closed_neighborhood_examples():
    c6 = gen_named("C6")
    assert sorted(c6.second_closed_neighborhood(0)) == [0, 1, 2, 4, 5]
    c4 = gen_named("C4")
    assert sorted(c4.second_closed_neighborhood(0)) == [0, 1, 2, 3]
    p5 = gen_named("P5")
    assert sorted(p5.second_closed_neighborhood(0)) == [0, 1, 2]


def test_distance_examples():
    p5 = gen_named("P5")
    assert p5.distance(0, 4) == 4
    assert p5.distance(2, 2) == 0
    two_edges = Graph(4, [(0, 1), (2, 3)])
    assert two_edges.distance(0, 3) == math.inf


def test_is_dominating_examples():
    c4 = gen_named("C4")
    assert is_dominating(c4, vs(c4, 0, 2))
    assert not is_dominating(c4, vs(c4, 0))
    assert is_dominating(c4, vs(c4), VertexSet.full(4))


def test_is_packing_examples():
    p5 = gen_named("P5")
    assert is_packing(p5, vs(p5, 0, 3))
    c4 = gen_named("C4")
    assert not is_packing(c4, vs(c4, 0, 2))
    assert not is_packing(c4, vs(c4, 0), vs(c4, 0))


def test_edit_operations():
    p3 = gen_named("P3")
    g, index_map = p3.delete_vertex(1)
    assert g.n == 2 and g.m == 0
    assert index_map == {0: 0, 2: 1}

    c4 = gen_named("C4")
    p4ish = c4.delete_edge(0, 1)
    assert p4ish.m == 3
    assert sorted(p4ish.degree(v) for v in range(4)) == [1, 1, 2, 2]
    assert p4ish.is_connected()

    p4 = gen_named("P4")
    cycle = p4.add_edge(0, 3)
    assert cycle.m == 4 and all(cycle.degree(v) == 2 for v in range(4))


def test_edit_errors():
    c4 = gen_named("C4")
    with pytest.raises(GraphError):
        c4.add_edge(0, 1)
    with pytest.raises(GraphError):
        c4.delete_edge(0, 2)
    with pytest.raises(VertexRangeError):
        c4.closed_neighborhood(4)


def test_graph_construction_rejects_non_simple():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(0)
    with pytest.raises(GraphError):
        Graph(513)


def test_neighborhood_containment_invariant():
    for i in range(50):
        g = gen_gnp(GenSpec("gnp", 3 + i % 10, derive_seed(900, i), {"edge_prob": 0.4}))
        for v in range(g.n):
            nv = g.closed_neighborhood(v)
            n2v = g.second_closed_neighborhood(v)
            assert v in nv and v in n2v
            assert nv.issubset(n2v)


def test_packing_matches_pairwise_distance():
    rng = random.Random(7)
    for i in range(80):
        g = gen_gnp(GenSpec("gnp", 4 + i % 9, derive_seed(901, i), {"edge_prob": 0.35}))
        members = [v for v in range(g.n) if rng.random() < 0.4]
        p = VertexSet(g.n, members)
        by_distance = all(
            g.distance(u, v) >= 3 for u in members for v in members if u < v
        )
        assert is_packing(g, p) == by_distance


def test_distance_symmetry_and_triangle_inequality():
    rng = random.Random(3)
    for i in range(30):
        g = gen_gnp(GenSpec("gnp", 8, derive_seed(902, i), {"edge_prob": 0.3}))
        for _ in range(20):
            u, v, w = rng.randrange(8), rng.randrange(8), rng.randrange(8)
            assert g.distance(u, v) == g.distance(v, u)
            assert g.distance(u, w) <= g.distance(u, v) + g.distance(v, w)


def test_vertex_set_operations():
    a = VertexSet(8, [0, 2, 4])
    b = VertexSet(8, [2, 3])
    assert sorted(a | b) == [0, 2, 3, 4]
    assert sorted(a & b) == [2]
    assert sorted(a - b) == [0, 4]
    assert not a.isdisjoint(b)
    assert (a & b).issubset(a)
    assert len(a) == 3 and 2 in a and 5 not in a
    assert sorted(a.complement()) == [1, 3, 5, 6, 7]
    with pytest.raises(GraphError):
        a | VertexSet(9, [1])
    with pytest.raises(VertexRangeError):
        VertexSet(4, [4])
    with pytest.raises(AttributeError):
        a.mask = 0


def test_multigraph_basics():
    mg = Multigraph(3, [(0, 1), (1, 0), (1, 2)])
    assert mg.m == 3
    assert mg.degree(1) == 3
    assert mg.multiplicity(0, 1) == 2
    assert not mg.is_simple
    assert mg.as_simple().m == 2
    with pytest.raises(GraphError):
        Multigraph(3, [(1, 1)])


def test_components():
    g = Graph(5, [(0, 1), (2, 3)])
    comps = g.components()
    assert [sorted(c) for c in comps] == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()
    assert gen_named("C5").is_connected()
