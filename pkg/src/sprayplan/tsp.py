"""Region visiting order via Christofides' algorithm.

The tour runs on the complete Euclidean graph over the launch point (index 0)
and the region centers (indices 1..n-1). Matching of odd-degree tree vertices
is exact (subset dynamic programming) up to ``EXACT_MATCHING_LIMIT`` vertices
and greedy beyond, which forfeits the 1.5 approximation bound.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import DiseasedRegion, PlanarPoint

log = logging.getLogger(__name__)

EXACT_MATCHING_LIMIT = 18
BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class MetricInstance:
    points: tuple
    dist: np.ndarray

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def from_points(cls, points: Sequence[PlanarPoint]) -> "MetricInstance":
        xy = np.array([[p.x, p.y] for p in points], dtype=float).reshape(len(points), 2)
        diff = xy[:, None, :] - xy[None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        dist.setflags(write=False)
        return cls(tuple(points), dist)


@dataclass(frozen=True)
class TourPlan:
    order: tuple
    length: float


def build_metric_instance(start: PlanarPoint, regions: Sequence[DiseasedRegion]) -> MetricInstance:
    return MetricInstance.from_points([start] + [r.center for r in regions])


def tour_length(order: Sequence[int], dist: np.ndarray) -> float:
    return float(sum(dist[a, b] for a, b in zip(order, order[1:])))


def minimum_spanning_tree(m: MetricInstance) -> list[tuple[int, int]]:
    """Kruskal over all pairs, ties broken by (weight, i, j)."""
    n = m.n
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    pairs = sorted(((float(m.dist[i, j]), i, j) for i in range(n) for j in range(i + 1, n)))
    tree = []
    for _, i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            tree.append((i, j))
            if len(tree) == n - 1:
                break
    return tree


def odd_degree_vertices(tree: Sequence[tuple[int, int]], n: int) -> list[int]:
    degree = [0] * n
    for i, j in tree:
        degree[i] += 1
        degree[j] += 1
    return [v for v in range(n) if degree[v] % 2]


def _exact_matching(odd: list[int], dist: np.ndarray) -> list[tuple[int, int]]:
    k = len(odd)
    w = dist[np.ix_(odd, odd)].tolist()
    full = (1 << k) - 1
    # best[mask] = cheapest perfect matching of the vertices in mask
    best = [float("inf")] * (1 << k)
    choice = [0] * (1 << k)
    best[0] = 0.0
    for mask in range(1, full + 1):
        if bin(mask).count("1") % 2:
            continue
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        wl = w[low]
        b, c = float("inf"), 0
        r = rest
        while r:
            bit = r & -r
            j = bit.bit_length() - 1
            cand = wl[j] + best[rest ^ bit]
            if cand < b:
                b, c = cand, j
            r ^= bit
        best[mask], choice[mask] = b, c

    pairs = []
    mask = full
    while mask:
        low = (mask & -mask).bit_length() - 1
        j = choice[mask]
        pairs.append((odd[low], odd[j]))
        mask ^= (1 << low) | (1 << j)
    return pairs


def _greedy_matching(odd: list[int], dist: np.ndarray) -> list[tuple[int, int]]:
    candidates = sorted(
        (float(dist[a, b]), a, b) for a, b in itertools.combinations(odd, 2)
    )
    used = set()
    pairs = []
    for _, a, b in candidates:
        if a not in used and b not in used:
            used.update((a, b))
            pairs.append((a, b))
    return pairs


def min_weight_perfect_matching(odd: Sequence[int], m: MetricInstance) -> list[tuple[int, int]]:
    odd = sorted(odd)
    if len(odd) % 2:
        raise ValueError(f"perfect matching needs an even vertex count, got {len(odd)}")
    if not odd:
        return []
    if len(odd) <= EXACT_MATCHING_LIMIT:
        return _exact_matching(odd, m.dist)
    log.warning(
        "%d odd-degree vertices exceed the exact matching limit (%d); using greedy "
        "matching, the 1.5x tour bound no longer holds",
        len(odd),
        EXACT_MATCHING_LIMIT,
    )
    return _greedy_matching(odd, m.dist)


def eulerian_circuit(edges: Sequence[tuple[int, int]], start: int) -> list[int]:
    """Hierholzer's algorithm on an undirected multigraph.

    Raises ValueError if a vertex has odd degree or if some edge is not
    reachable from ``start``.
    """
    adj = defaultdict(list)
    for eid, (a, b) in enumerate(edges):
        adj[a].append((b, eid))
        adj[b].append((a, eid))
    for v, inc in adj.items():
        if len(inc) % 2:
            raise ValueError(f"vertex {v} has odd degree {len(inc)}")
    if not edges:
        return [start]
    if start not in adj:
        raise ValueError(f"start vertex {start} has no incident edges")
    for v in adj:
        adj[v].sort()

    used = [False] * len(edges)
    ptr = defaultdict(int)
    stack = [start]
    walk = []
    while stack:
        v = stack[-1]
        inc = adj[v]
        while ptr[v] < len(inc) and used[inc[ptr[v]][1]]:
            ptr[v] += 1
        if ptr[v] == len(inc):
            walk.append(stack.pop())
        else:
            u, eid = inc[ptr[v]]
            used[eid] = True
            stack.append(u)
    if not all(used):
        raise ValueError("multigraph is disconnected; no Eulerian circuit covers every edge")
    walk.reverse()
    return walk


def christofides_tour(m: MetricInstance) -> TourPlan:
    n = m.n
    if n == 1:
        return TourPlan((0, 0), 0.0)
    tree = minimum_spanning_tree(m)
    matching = min_weight_perfect_matching(odd_degree_vertices(tree, n), m)
    walk = eulerian_circuit(list(tree) + list(matching), 0)
    seen = set()
    order = []
    for v in walk:
        if v not in seen:
            seen.add(v)
            order.append(v)
    order.append(0)
    return TourPlan(tuple(order), tour_length(order, m.dist))


def brute_force_tour(m: MetricInstance) -> TourPlan:
    """Exact optimum by enumerating permutations (n <= BRUTE_FORCE_LIMIT)."""
    n = m.n
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} points, got {n}")
    if n == 1:
        return TourPlan((0, 0), 0.0)
    d = m.dist.tolist()
    best_len, best = float("inf"), None
    for perm in itertools.permutations(range(1, n)):
        length = d[0][perm[0]] + d[perm[-1]][0]
        for a, b in zip(perm, perm[1:]):
            length += d[a][b]
        if length < best_len:
            best_len, best = length, perm
    order = (0,) + best + (0,)
    return TourPlan(order, tour_length(order, m.dist))
