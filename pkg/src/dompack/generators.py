"""Seeded generators for every graph family the campaigns need.

Each generator is a pure function of its GenSpec, and class membership is
either guaranteed by construction (trees, rook graphs) or certified per
instance by the recognizers (interval, chordal bipartite, homogeneously
orderable).  Per-instance seeds in campaigns come from `derive_seed`, a
splitmix64-style mix of (master seed, instance index).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import GenerationBudgetError, GraphError
from .graph import Graph
from .recognition import (
    find_homogeneous_ordering,
    find_simple_elimination_ordering,
    is_chordal_bipartite,
)

_M64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def derive_seed(master: int, index: int) -> int:
    """splitmix64 finalizer applied to master + (index+1) * golden gamma."""
    z = (master + (index + 1) * _GAMMA) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    seed: int
    params: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {"family": self.family, "n": self.n, "seed": self.seed, "params": self.params},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> GenSpec:
        obj = json.loads(text)
        return cls(obj["family"], obj["n"], obj["seed"], obj.get("params", {}))


def gen_tree(spec: GenSpec) -> Graph:
    """Uniform random labeled tree via Prufer-sequence decode."""
    n = spec.n
    if n < 1:
        raise GraphError("trees need n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(spec.seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, edges)


def gen_interval(spec: GenSpec) -> Graph:
    """Intersection graph of n random intervals; strongly chordal by nature,
    but every output is still pushed through the elimination-ordering filter."""
    n = spec.n
    if n < 1:
        raise GraphError("interval graphs need n >= 1")
    rng = random.Random(spec.seed)
    span = spec.params.get("span", 0.3)
    intervals = []
    for _ in range(n):
        lo = rng.random()
        intervals.append((lo, lo + rng.random() * span))
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if intervals[i][0] <= intervals[j][1] and intervals[j][0] <= intervals[i][1]
    ]
    g = Graph(n, edges)
    if find_simple_elimination_ordering(g) is None:
        raise AssertionError("interval graph failed the strongly chordal filter")
    return g


def gen_chordal_bipartite(spec: GenSpec) -> Graph:
    g, _ = gen_chordal_bipartite_with_stats(spec)
    return g


def gen_chordal_bipartite_with_stats(spec: GenSpec) -> tuple[Graph, int]:
    """Rejection-sample random bipartite graphs until the recognizer accepts;
    returns (graph, attempts) so campaigns can report the acceptance rate."""
    n = spec.n
    if not 2 <= n <= 16:
        raise GraphError("chordal bipartite sampling is capped at 2 <= n <= 16")
    p = spec.params.get("edge_prob", 0.3)
    budget = spec.params.get("budget", 2000)
    for attempt in range(1, budget + 1):
        rng = random.Random(derive_seed(spec.seed, attempt))
        na = n // 2
        edges = [
            (i, na + j)
            for i in range(na)
            for j in range(n - na)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if is_chordal_bipartite(g):
            return g, attempt
    raise GenerationBudgetError(f"no chordal bipartite instance in {budget} attempts")


def gen_distance_hereditary(spec: GenSpec) -> Graph:
    """Grow from K_1 by random pendant / true-twin / false-twin additions;
    each emitted instance must pass the homogeneous-ordering filter, so
    membership in the homogeneously orderable class is certified, never
    assumed."""
    n = spec.n
    if n < 1:
        raise GraphError("distance-hereditary growth needs n >= 1")
    budget = spec.params.get("budget", 50)
    ops = tuple(spec.params.get("ops", ("pendant", "true-twin", "false-twin")))
    if not ops or any(op not in ("pendant", "true-twin", "false-twin") for op in ops):
        raise GraphError(f"unknown growth ops {ops!r}")
    for attempt in range(1, budget + 1):
        rng = random.Random(derive_seed(spec.seed, attempt))
        edges: list[tuple[int, int]] = []
        adj: list[set[int]] = [set()]
        for new in range(1, n):
            target = rng.randrange(new)
            op = rng.choice(ops)
            if op == "pendant":
                nbrs = {target}
            elif op == "true-twin":
                nbrs = adj[target] | {target}
            else:
                nbrs = set(adj[target])
            adj.append(set(nbrs))
            for u in nbrs:
                adj[u].add(new)
                edges.append((u, new))
        g = Graph(n, edges)
        if find_homogeneous_ordering(g) is not None:
            return g
    raise GenerationBudgetError(
        f"no homogeneously orderable instance in {budget} attempts"
    )


def gen_rook(k: int, l: int) -> Graph:
    """Cartesian product of complete graphs K_k and K_l (rook's graph)."""
    if k < 1 or l < 1:
        raise GraphError("rook graphs need k, l >= 1")
    edges = []
    for i in range(k):
        for j in range(l):
            v = i * l + j
            for jj in range(j + 1, l):
                edges.append((v, i * l + jj))
            for ii in range(i + 1, k):
                edges.append((v, ii * l + j))
    return Graph(k * l, edges)


def gen_gnp(spec: GenSpec) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = random.Random(spec.seed)
    p = spec.params.get("edge_prob", 0.5)
    edges = [
        (i, j) for i in range(spec.n) for j in range(i + 1, spec.n) if rng.random() < p
    ]
    return Graph(spec.n, edges)


def _cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycles need n >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def _path(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def _complete(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _star(k: int) -> Graph:
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


_OCTAHEDRON = [
    (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 4), (2, 5), (3, 4), (3, 5),
]

# Icosahedron as a gyroelongated pentagonal bipyramid: apexes 0 and 11,
# upper pentagon 1..5, lower pentagon 6..10.
_ICOSAHEDRON = (
    [(0, i) for i in range(1, 6)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(11, i) for i in range(6, 11)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6)]
)


def gen_named(name: str) -> Graph:
    """Canonical constructions: C_n, P_n, K_n, K_{a,b}, star_k, octahedron,
    icosahedron."""
    s = name.strip().lower().replace("_", "").replace("{", "").replace("}", "")
    if s == "octahedron":
        return Graph(6, _OCTAHEDRON)
    if s == "icosahedron":
        return Graph(12, _ICOSAHEDRON)
    try:
        if s.startswith("star"):
            return _star(int(s[4:]))
        if s.startswith("c"):
            return _cycle(int(s[1:]))
        if s.startswith("p"):
            return _path(int(s[1:]))
        if s.startswith("k") and "," in s:
            a, b = s[1:].split(",")
            return _complete_bipartite(int(a), int(b))
        if s.startswith("k"):
            return _complete(int(s[1:]))
    except ValueError:
        pass
    raise GraphError(f"unknown named graph {name!r}")


def generate(spec: GenSpec) -> Graph:
    """Dispatch on GenSpec.family; every family is replayable from its spec."""
    family = spec.family
    if family == "tree":
        return gen_tree(spec)
    if family == "interval":
        return gen_interval(spec)
    if family == "chordal-bipartite":
        return gen_chordal_bipartite(spec)
    if family == "distance-hereditary":
        return gen_distance_hereditary(spec)
    if family == "rook":
        k = spec.params.get("k", spec.n)
        l = spec.params.get("l", k)
        return gen_rook(k, l)
    if family == "gnp":
        return gen_gnp(spec)
    if family == "named":
        return gen_named(spec.params["name"])
    if family == "planar":
        from .planar import random_planar

        return random_planar(spec.seed, spec.n, spec.params["m"])
    if family == "max-planar":
        from .planar import embed_maximal_planar

        return embed_maximal_planar(spec.seed, spec.n).graph()
    if family == "min-degree-4-planar":
        from .planar import random_min_degree4_planar

        return random_min_degree4_planar(spec.seed, spec.n)
    raise GraphError(f"unknown generator family {spec.family!r}")


# -- isomorphism-free enumeration (test corpora) ------------------------------


def _tree_canonical(n: int, adj: list[set[int]]) -> tuple:
    """AHU canonical form of a free tree, rooted at its center(s)."""

    def rooted(root: int, parent: int) -> tuple:
        return tuple(sorted(rooted(c, root) for c in adj[root] if c != parent))

    if n == 1:
        return ((),)
    degree = [len(adj[v]) for v in range(n)]
    leaves = [v for v in range(n) if degree[v] <= 1]
    removed = len(leaves)
    while removed < n:
        nxt = []
        for v in leaves:
            degree[v] = 0
            for u in adj[v]:
                if degree[u] > 0:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        if not nxt:
            break
        removed += len(nxt)
        leaves = nxt
    centers = leaves
    return min(rooted(c, -1) for c in centers)


def all_trees(n: int) -> list[Graph]:
    """All non-isomorphic trees on n vertices (canonical-form dedup).

    Built by attaching one leaf in every way to every tree on n-1 vertices.
    """
    if n < 1:
        raise GraphError("trees need n >= 1")
    level: dict[tuple, list[tuple[int, int]]] = {((),): []}
    for size in range(2, n + 1):
        nxt: dict[tuple, list[tuple[int, int]]] = {}
        for edges in level.values():
            for v in range(size - 1):
                cand = edges + [(v, size - 1)]
                adj: list[set[int]] = [set() for _ in range(size)]
                for a, b in cand:
                    adj[a].add(b)
                    adj[b].add(a)
                key = _tree_canonical(size, adj)
                if key not in nxt:
                    nxt[key] = cand
        level = nxt
    return [Graph(n, edges) for _, edges in sorted(level.items())]


def _pair_index(i: int, j: int) -> int:
    # Column-major upper triangle, matching the graph6 bit order.
    return j * (j - 1) // 2 + i


def _perm_tables(n: int):
    import numpy as np
    from itertools import permutations as _perms

    npairs = n * (n - 1) // 2
    table = []
    for perm in _perms(range(n)):
        row = [0] * npairs
        for j in range(1, n):
            for i in range(j):
                a, b = perm[i], perm[j]
                row[_pair_index(i, j)] = _pair_index(min(a, b), max(a, b))
        table.append(row)
    return np.array(table, dtype=np.int64), np.int64(1) << np.arange(npairs, dtype=np.int64)


def _canonical_mask(mask: int, n: int, cache={}) -> int:
    """Minimum pair-mask over all vertex relabelings (exact, n <= 8)."""
    import numpy as np

    if n not in cache:
        cache[n] = _perm_tables(n)
    table, pow2 = cache[n]
    npairs = n * (n - 1) // 2
    bits = np.array([(mask >> k) & 1 for k in range(npairs)], dtype=np.int64)
    values = (bits[table] * pow2).sum(axis=1)
    return int(values.min())


def _mask_to_graph(mask: int, n: int) -> Graph:
    edges = []
    for j in range(1, n):
        for i in range(j):
            if (mask >> _pair_index(i, j)) & 1:
                edges.append((i, j))
    return Graph(n, edges)


def all_graphs(n: int) -> list[Graph]:
    """All non-isomorphic simple graphs on n vertices (exact, n <= 7).

    Level k graphs come from attaching a new vertex to every level k-1
    representative with every possible neighborhood, then deduplicating by
    the minimum-relabeling canonical form.
    """
    if not 1 <= n <= 7:
        raise GraphError("exhaustive graph enumeration is capped at n <= 7")
    masks = {0}
    for size in range(2, n + 1):
        prev_pairs = (size - 1) * (size - 2) // 2
        nxt = set()
        for mask in masks:
            for subset in range(1 << (size - 1)):
                grown = mask
                for i in range(size - 1):
                    if (subset >> i) & 1:
                        grown |= 1 << (prev_pairs + i)
                nxt.add(_canonical_mask(grown, size))
        masks = nxt
    return [_mask_to_graph(mask, n) for mask in sorted(masks)]
