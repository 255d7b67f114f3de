"""Core graph substrate: fixed-capacity vertex sets and immutable simple graphs.

Vertices are dense 0-based indices.  Graphs are values: every edit returns a
copy, and vertex deletion returns the old->new index map so callers can track
named vertices through surgery.  Adjacency is stored as one int bitmask per
vertex, which keeps the solver hot loops cheap.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

from .errors import GraphError, VertexRangeError

MAX_VERTICES = 512


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable set of vertex indices drawn from a fixed range 0..capacity-1."""

    __slots__ = ("capacity", "mask")

    def __init__(self, capacity: int, members: Iterable[int] = ()):
        if not 0 < capacity <= MAX_VERTICES:
            raise GraphError(f"capacity must be in 1..{MAX_VERTICES}, got {capacity}")
        mask = 0
        for v in members:
            if not 0 <= v < capacity:
                raise VertexRangeError(f"vertex {v} outside 0..{capacity - 1}")
            mask |= 1 << v
        object.__setattr__(self, "capacity", capacity)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, capacity: int, mask: int) -> VertexSet:
        if mask < 0 or mask >> capacity:
            raise VertexRangeError("mask has bits outside 0..capacity-1")
        obj = object.__new__(cls)
        object.__setattr__(obj, "capacity", capacity)
        object.__setattr__(obj, "mask", mask)
        return obj

    @classmethod
    def empty(cls, capacity: int) -> VertexSet:
        return cls.from_mask(capacity, 0)

    @classmethod
    def full(cls, capacity: int) -> VertexSet:
        return cls.from_mask(capacity, (1 << capacity) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.capacity and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _mask_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def _check_compatible(self, other: VertexSet) -> None:
        if self.capacity != other.capacity:
            raise GraphError("vertex sets have different capacities")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_compatible(other)
        return VertexSet.from_mask(self.capacity, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_compatible(other)
        return VertexSet.from_mask(self.capacity, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check_compatible(other)
        return VertexSet.from_mask(self.capacity, self.mask & ~other.mask)

    def isdisjoint(self, other: VertexSet) -> bool:
        self._check_compatible(other)
        return self.mask & other.mask == 0

    def issubset(self, other: VertexSet) -> bool:
        self._check_compatible(other)
        return self.mask & ~other.mask == 0

    def add(self, v: int) -> VertexSet:
        if not 0 <= v < self.capacity:
            raise VertexRangeError(f"vertex {v} outside 0..{self.capacity - 1}")
        return VertexSet.from_mask(self.capacity, self.mask | (1 << v))

    def remove(self, v: int) -> VertexSet:
        if v not in self:
            raise VertexRangeError(f"vertex {v} not in set")
        return VertexSet.from_mask(self.capacity, self.mask & ~(1 << v))

    def complement(self) -> VertexSet:
        return VertexSet.from_mask(self.capacity, ((1 << self.capacity) - 1) & ~self.mask)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.capacity == other.capacity
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.capacity, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.capacity}, {{{', '.join(map(str, self))}}})"


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1, n <= 512."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 < n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if (adj[u] >> v) & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        self.n = n
        self.m = m
        self._adj = tuple(adj)
        self._closed = tuple(adj[v] | (1 << v) for v in range(n))
        self._second: tuple[int, ...] | None = None

    # -- low-level masks (used heavily by the solvers) --------------------

    def adjacency_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    @property
    def closed_masks(self) -> tuple[int, ...]:
        return self._closed

    @property
    def second_masks(self) -> tuple[int, ...]:
        if self._second is None:
            closed = self._closed
            out = []
            for v in range(self.n):
                mask = closed[v]
                for u in _mask_bits(self._adj[v]):
                    mask |= closed[u]
                out.append(mask)
            self._second = tuple(out)
        return self._second

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} outside 0..{self.n - 1}")

    # -- basic queries -----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self._adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def min_degree(self) -> int:
        return min(a.bit_count() for a in self._adj)

    def max_degree(self) -> int:
        return max(a.bit_count() for a in self._adj)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for k in _mask_bits(rest):
                out.append((u, u + 1 + k))
        return out

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet.from_mask(self.n, self._adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        """All vertices at distance <= 1 from v (always contains v)."""
        self._check_vertex(v)
        return VertexSet.from_mask(self.n, self._closed[v])

    def second_closed_neighborhood(self, v: int) -> VertexSet:
        """All vertices at distance <= 2 from v."""
        self._check_vertex(v)
        return VertexSet.from_mask(self.n, self.second_masks[v])

    def closed_neighborhood_of_set(self, s: VertexSet) -> VertexSet:
        mask = s.mask
        for v in _mask_bits(s.mask):
            mask |= self._closed[v]
        return VertexSet.from_mask(self.n, mask)

    def bfs_depths(self, root: int) -> list[float]:
        """Distance from root per vertex; math.inf for unreachable vertices."""
        self._check_vertex(root)
        depths: list[float] = [math.inf] * self.n
        depths[root] = 0
        frontier = 1 << root
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _mask_bits(frontier):
                nxt |= self._adj[v]
            nxt &= ~seen
            for v in _mask_bits(nxt):
                depths[v] = d
            seen |= nxt
            frontier = nxt
        return depths

    def distance(self, u: int, v: int) -> float:
        """BFS distance; math.inf when u and v are in different components."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        target = 1 << v
        frontier = 1 << u
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in _mask_bits(frontier):
                nxt |= self._adj[w]
            nxt &= ~seen
            if nxt & target:
                return d
            seen |= nxt
            frontier = nxt
        return math.inf

    def component_mask(self, v: int) -> int:
        self._check_vertex(v)
        frontier = 1 << v
        seen = frontier
        while frontier:
            nxt = 0
            for w in _mask_bits(frontier):
                nxt |= self._adj[w]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def components(self) -> list[VertexSet]:
        remaining = (1 << self.n) - 1
        out = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.component_mask(v)
            out.append(VertexSet.from_mask(self.n, comp))
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        return self.component_mask(0).bit_count() == self.n

    # -- value-semantic edits ----------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        return Graph(self.n, self.edges() + [(u, v)])

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        a, b = min(u, v), max(u, v)
        return Graph(self.n, [e for e in self.edges() if e != (a, b)])

    def delete_vertex(self, v: int) -> tuple[Graph, dict[int, int]]:
        """Delete v, densely reindex, and return (graph, old->new index map)."""
        self._check_vertex(v)
        if self.n == 1:
            raise GraphError("cannot delete the last vertex")
        index_map = {}
        for old in range(self.n):
            if old != v:
                index_map[old] = old if old < v else old - 1
        edges = [
            (index_map[a], index_map[b]) for a, b in self.edges() if v not in (a, b)
        ]
        return Graph(self.n - 1, edges), index_map

    def induced_subgraph(self, keep: VertexSet) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by `keep`, densely reindexed, with old->new map."""
        members = keep.members()
        if not members:
            raise GraphError("induced subgraph needs at least one vertex")
        index_map = {old: new for new, old in enumerate(members)}
        edges = [
            (index_map[a], index_map[b])
            for a, b in self.edges()
            if a in index_map and b in index_map
        ]
        return Graph(len(members), edges), index_map

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Multigraph:
    """Loopless multigraph: vertex count plus an edge multiset.

    Only the planar triangulation path produces parallel edges; everything
    else in the package works with simple graphs.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 < n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        normalized = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            normalized.append((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(normalized))
        self.m = len(self.edges)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} outside 0..{self.n - 1}")
        return sum((u == v) + (w == v) for u, w in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return sum(1 for e in self.edges if e == key)

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == self.m

    def as_simple(self) -> Graph:
        """Collapse parallel edges to obtain the underlying simple graph."""
        return Graph(self.n, sorted(set(self.edges)))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


def greedy_maximal_independent_set(g: Graph, within: VertexSet | None = None) -> VertexSet:
    """Lowest-index-first maximal independent subset of `within` (or V)."""
    allowed = within.mask if within is not None else (1 << g.n) - 1
    chosen = 0
    blocked = ~allowed
    for v in range(g.n):
        if not (blocked >> v) & 1:
            chosen |= 1 << v
            blocked |= g._adj[v] | (1 << v)
    return VertexSet.from_mask(g.n, chosen)


# -- validity predicates -----------------------------------------------------


def is_dominating(g: Graph, d: VertexSet, x: VertexSet | None = None) -> bool:
    """True iff N[d] together with the pre-covered set x covers V(g)."""
    covered = x.mask if x is not None else 0
    for v in _mask_bits(d.mask):
        covered |= g.closed_masks[v]
    return covered == (1 << g.n) - 1


def is_packing(g: Graph, p: VertexSet, x: VertexSet | None = None) -> bool:
    """True iff p avoids x and has pairwise disjoint closed neighborhoods."""
    if x is not None and p.mask & x.mask:
        return False
    seen = 0
    for v in _mask_bits(p.mask):
        nb = g.closed_masks[v]
        if seen & nb:
            return False
        seen |= nb
    return True
