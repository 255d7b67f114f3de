import pytest

from dompack import (
    GenerationBudgetError,
    GraphError,
    exact_packing,
    find_homogeneous_ordering,
    find_simple_elimination_ordering,
    is_chordal_bipartite,
    is_tree,
)
from dompack.generators import (
    GenSpec,
    all_graphs,
    all_trees,
    derive_seed,
    gen_chordal_bipartite,
    gen_chordal_bipartite_with_stats,
    gen_distance_hereditary,
    gen_interval,
    gen_named,
    gen_rook,
    gen_tree,
    generate,
)

# Non-isomorphic tree counts (n = 1..12) and graph counts (n = 1..7).
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
GRAPH_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


def test_gen_tree_examples():
    assert gen_tree(GenSpec("tree", 1, 0)).n == 1
    g2 = gen_tree(GenSpec("tree", 2, 0))
    assert g2.m == 1
    g9 = gen_tree(GenSpec("tree", 9, 4242))
    assert g9.m == 8 and is_tree(g9)


def test_gen_tree_deterministic():
    spec = GenSpec("tree", 25, 987)
    assert gen_tree(spec).edges() == gen_tree(spec).edges()
    other = gen_tree(GenSpec("tree", 25, 988))
    assert other.edges() != gen_tree(spec).edges()


def test_gen_interval():
    g = gen_interval(GenSpec("interval", 20, 5))
    assert find_simple_elimination_ordering(g) is not None
    # tiny span: disjoint intervals, so (almost surely) no edges at all
    sparse = gen_interval(GenSpec("interval", 12, 5, {"span": 1e-9}))
    assert sparse.m == 0
    # huge span: heavily overlapping intervals
    dense = gen_interval(GenSpec("interval", 12, 5, {"span": 40.0}))
    assert dense.m > 50


def test_gen_chordal_bipartite():
    g, attempts = gen_chordal_bipartite_with_stats(
        GenSpec("chordal-bipartite", 12, 31, {"edge_prob": 0.3})
    )
    assert attempts >= 1
    assert is_chordal_bipartite(g)
    assert gen_chordal_bipartite(GenSpec("chordal-bipartite", 12, 31, {"edge_prob": 0.3})).edges() == g.edges()
    with pytest.raises(GraphError):
        gen_chordal_bipartite(GenSpec("chordal-bipartite", 17, 0))
    # mid-density bipartite graphs on 16 vertices almost always contain a
    # chordless 6-cycle, so a 2-attempt budget runs out
    with pytest.raises(GenerationBudgetError):
        gen_chordal_bipartite(GenSpec("chordal-bipartite", 16, 0, {"edge_prob": 0.5, "budget": 2}))


def test_gen_distance_hereditary():
    for i in range(15):
        g = gen_distance_hereditary(GenSpec("distance-hereditary", 3 + i % 12, derive_seed(1600, i)))
        assert find_homogeneous_ordering(g) is not None
    # pure growth modes: pendants build a tree, true twins a complete graph
    t = gen_distance_hereditary(GenSpec("distance-hereditary", 10, 3, {"ops": ["pendant"]}))
    assert is_tree(t)
    k = gen_distance_hereditary(GenSpec("distance-hereditary", 8, 3, {"ops": ["true-twin"]}))
    assert k.m == 8 * 7 // 2
    with pytest.raises(GraphError):
        gen_distance_hereditary(GenSpec("distance-hereditary", 5, 0, {"ops": ["clone"]}))


def test_gen_rook_examples():
    assert gen_rook(1, 1).n == 1
    c4ish = gen_rook(2, 2)
    assert c4ish.m == 4 and all(c4ish.degree(v) == 2 for v in range(4))
    r33 = gen_rook(3, 3)
    assert r33.n == 9 and all(r33.degree(v) == 4 for v in range(9))
    assert exact_packing(r33).value == 1  # diameter 2
    assert max(r33.distance(u, v) for u in range(9) for v in range(9)) == 2


def test_gen_named():
    assert gen_named("C4").m == 4
    ico = gen_named("icosahedron")
    assert ico.n == 12 and ico.m == 30 and all(ico.degree(v) == 5 for v in range(12))
    octa = gen_named("octahedron")
    assert octa.n == 6 and all(octa.degree(v) == 4 for v in range(6))
    k33 = gen_named("K3,3")
    assert k33.m == 9
    assert gen_named("K_{3,3}").edges() == k33.edges()
    assert gen_named("star5").n == 6
    with pytest.raises(GraphError):
        gen_named("zorb")


def test_generate_dispatch_replay():
    specs = [
        GenSpec("tree", 12, 5),
        GenSpec("interval", 10, 6),
        GenSpec("chordal-bipartite", 10, 7),
        GenSpec("distance-hereditary", 9, 8),
        GenSpec("rook", 9, 0, {"k": 3, "l": 3}),
        GenSpec("gnp", 10, 9, {"edge_prob": 0.4}),
        GenSpec("named", 4, 0, {"name": "C4"}),
        GenSpec("planar", 12, 10, {"m": 20}),
        GenSpec("max-planar", 9, 11),
        GenSpec("min-degree-4-planar", 20, 12),
    ]
    for spec in specs:
        round_tripped = GenSpec.from_json(spec.to_json())
        assert generate(round_tripped).edges() == generate(spec).edges()
    with pytest.raises(GraphError):
        generate(GenSpec("martian", 5, 0))


def test_derive_seed():
    assert derive_seed(0, 0) == derive_seed(0, 0)
    seen = {derive_seed(123, i) for i in range(1000)}
    assert len(seen) == 1000
    assert derive_seed(123, 0) != derive_seed(124, 0)


def test_all_trees_counts():
    for n in range(1, 11):
        assert len(all_trees(n)) == TREE_COUNTS[n - 1], n
    for t in all_trees(8):
        assert is_tree(t)


def test_all_graphs_counts():
    for n in range(1, 7):
        assert len(all_graphs(n)) == GRAPH_COUNTS[n - 1], n


def test_all_graphs_pairwise_nonisomorphic_n5():
    import networkx as nx

    graphs = [nx.Graph(g.edges()) for g in all_graphs(5)]
    for g in graphs:
        g.add_nodes_from(range(5))
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not nx.is_isomorphic(graphs[i], graphs[j])
