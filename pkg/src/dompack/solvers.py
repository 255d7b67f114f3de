"""Exact domination and packing solvers, with X-relativized variants.

`exact_domination` / `exact_packing` are branch-and-bound searches over
bitmask state; `brute_force_*` enumerate vertex subsets outright and exist
purely to validate the branch-and-bound path.  Ties break toward the lowest
vertex index everywhere so witnesses are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import GraphError
from .graph import Graph, VertexSet, is_packing


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    nodes_explored: int
    optimal: bool


def _greedy_cover(n: int, closed: tuple[int, ...], covered: int) -> tuple[int, ...]:
    """Greedy max-coverage dominating completion starting from `covered`."""
    full = (1 << n) - 1
    chosen = []
    while covered != full:
        best_v = -1
        best_gain = 0
        for v in range(n):
            gain = (closed[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        chosen.append(best_v)
        covered |= closed[best_v]
    return tuple(chosen)


def _greedy_packing(second: tuple[int, ...], eligible: int) -> tuple[int, ...]:
    """First-fit packing on the eligible mask (ascending vertex index)."""
    chosen = []
    avail = eligible
    while avail:
        v = (avail & -avail).bit_length() - 1
        chosen.append(v)
        avail &= ~second[v]
    return tuple(chosen)


def exact_domination(g: Graph, x: VertexSet | None = None) -> SolveResult:
    """Minimum D with N[D] u X = V(g); gamma(g) when x is empty or None."""
    n = g.n
    full = (1 << n) - 1
    closed = g.closed_masks
    second = g.second_masks
    start = x.mask if x is not None else 0

    incumbent = _greedy_cover(n, closed, start)
    best_size = len(incumbent)
    best_set = incumbent
    nodes = 0
    chosen: list[int] = []

    def packing_lower_bound(uncovered: int) -> int:
        # Uncovered vertices with pairwise disjoint closed neighborhoods each
        # need their own dominator.
        cnt = 0
        avail = uncovered
        while avail:
            v = (avail & -avail).bit_length() - 1
            cnt += 1
            avail &= ~second[v]
        return cnt

    def dfs(covered: int, size: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if covered == full:
            if size < best_size:
                best_size = size
                best_set = tuple(chosen)
            return
        uncovered = full & ~covered
        if size + packing_lower_bound(uncovered) >= best_size:
            return
        v = (uncovered & -uncovered).bit_length() - 1
        cands = closed[v]
        while cands:
            low = cands & -cands
            u = low.bit_length() - 1
            cands ^= low
            chosen.append(u)
            dfs(covered | closed[u], size + 1)
            chosen.pop()

    dfs(start, 0)
    return SolveResult(best_size, VertexSet(n, best_set), nodes, True)


def exact_packing(g: Graph, x: VertexSet | None = None) -> SolveResult:
    """Maximum P disjoint from X with pairwise disjoint closed neighborhoods."""
    n = g.n
    closed = g.closed_masks
    second = g.second_masks
    eligible0 = ((1 << n) - 1) & ~(x.mask if x is not None else 0)

    incumbent = _greedy_packing(second, eligible0)
    best_size = len(incumbent)
    best_set = incumbent
    nodes = 0
    chosen: list[int] = []

    def cover_upper_bound(eligible: int) -> int:
        # k closed neighborhoods covering the eligible set bound any packing
        # inside it by k (two packing members never share a neighborhood);
        # each round covers the lowest eligible vertex with its best
        # closed neighbor.
        cnt = 0
        avail = eligible
        while avail:
            v = (avail & -avail).bit_length() - 1
            cnt += 1
            best = -1
            cands = closed[v]
            while cands:
                low = cands & -cands
                u = low.bit_length() - 1
                cands ^= low
                gain = (closed[u] & avail).bit_count()
                if gain > best:
                    best = gain
                    pick = u
            avail &= ~closed[pick]
        return cnt

    def dfs(eligible: int, size: int) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if size > best_size:
            best_size = size
            best_set = tuple(chosen)
        if not eligible:
            return
        if size + cover_upper_bound(eligible) <= best_size:
            return
        v = (eligible & -eligible).bit_length() - 1
        chosen.append(v)
        dfs(eligible & ~second[v], size + 1)
        chosen.pop()
        dfs(eligible & ~(1 << v), size)

    dfs(eligible0, 0)
    return SolveResult(best_size, VertexSet(n, best_set), nodes, True)


def brute_force_domination(g: Graph, x: VertexSet | None = None) -> SolveResult:
    """Subset enumeration oracle for exact_domination (use at n <= 8)."""
    n = g.n
    full = (1 << n) - 1
    closed = g.closed_masks
    start = x.mask if x is not None else 0
    checked = 0
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            checked += 1
            covered = start
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return SolveResult(k, VertexSet(n, combo), checked, True)
    raise AssertionError("unreachable: V(g) always dominates")


def brute_force_packing(g: Graph, x: VertexSet | None = None) -> SolveResult:
    """Subset enumeration oracle for exact_packing (use at n <= 8)."""
    n = g.n
    xmask = x.mask if x is not None else 0
    eligible = [v for v in range(n) if not (xmask >> v) & 1]
    checked = 0
    for k in range(len(eligible), -1, -1):
        for combo in combinations(eligible, k):
            checked += 1
            p = VertexSet(n, combo)
            if is_packing(g, p, x):
                return SolveResult(k, p, checked, True)
    raise AssertionError("unreachable: the empty set is always a packing")


def greedy_domination(g: Graph) -> SolveResult:
    """Greedy max-coverage dominating set; H(max degree + 1) guarantee."""
    chosen = _greedy_cover(g.n, g.closed_masks, 0)
    return SolveResult(len(chosen), VertexSet(g.n, chosen), 0, False)


def max_ratio(g: Graph) -> Fraction:
    """gamma(g) / rho(g) as an exact rational."""
    gamma = exact_domination(g).value
    rho = exact_packing(g).value
    return Fraction(gamma, rho)


@dataclass(frozen=True)
class KeyedPackingResult:
    packing: VertexSet
    converged: bool
    iterations: int


def maximal_packing_keyed(
    g: Graph,
    key: str,
    *,
    ordering: tuple[int, ...] | None = None,
    root: int | None = None,
) -> KeyedPackingResult:
    """Maximal packing locally optimal under single-vertex exchange.

    key="index-sum-min": minimize the sum of ordering positions (aux =
    `ordering`, a permutation).  key="depth-sum-max": maximize the sum of BFS
    depths from `root` (graph must be connected).  Exchanges re-complete
    greedily to maximality and are capped at n^2 accepted moves.
    """
    n = g.n
    second = g.second_masks

    if key == "index-sum-min":
        if ordering is None:
            raise GraphError("index-sum-min needs an ordering")
        if sorted(ordering) != list(range(n)):
            raise GraphError("ordering is not a permutation of 0..n-1")
        pos = [0] * n
        for p_idx, v in enumerate(ordering):
            pos[v] = p_idx
        scan = list(ordering)
        weight = pos
        better = lambda a, b: a < b  # noqa: E731
    elif key == "depth-sum-max":
        if root is None:
            raise GraphError("depth-sum-max needs a root")
        depths = g.bfs_depths(root)
        if any(d == math.inf for d in depths):
            raise GraphError("depth-sum-max requires a connected graph")
        weight = [int(d) for d in depths]
        scan = sorted(range(n), key=lambda v: (-weight[v], v))
        better = lambda a, b: a > b  # noqa: E731
    else:
        raise GraphError(f"unknown key {key!r}")

    def complete(mask: int) -> int:
        blocked = 0
        for v in range(n):
            if (mask >> v) & 1:
                blocked |= second[v]
        for v in scan:
            if not (mask >> v) & 1 and not (blocked >> v) & 1:
                mask |= 1 << v
                blocked |= second[v]
        return mask

    def key_of(mask: int) -> int:
        return sum(weight[v] for v in range(n) if (mask >> v) & 1)

    current = complete(0)
    current_key = key_of(current)
    cap = n * n
    iterations = 0
    improved = True
    while improved and iterations < cap:
        improved = False
        members = [v for v in range(n) if (current >> v) & 1]
        for a in members:
            without = current & ~(1 << a)
            blocked = 0
            for v in range(n):
                if (without >> v) & 1:
                    blocked |= second[v]
            for b in range(n):
                if (current >> b) & 1 or (blocked >> b) & 1:
                    continue
                candidate = complete(without | (1 << b))
                cand_key = key_of(candidate)
                if better(cand_key, current_key):
                    current, current_key = candidate, cand_key
                    iterations += 1
                    improved = True
                    break
            if improved:
                break
    converged = not improved
    result = VertexSet.from_mask(n, current)
    assert is_packing(g, result)
    return KeyedPackingResult(result, converged, iterations)
