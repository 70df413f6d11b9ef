"""Burning schedules: verification, exact search, greedy search and lifting.

A schedule ``v_1..v_L`` gives position ``i`` (1-indexed) the radius ``L - i``;
it is valid when the balls around its centers cover every vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Optional, Sequence

from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    ball,
    distance_matrix,
    induced_subgraph,
    multi_source_bfs,
    require_connected,
)


class ScheduleError(ValueError):
    """Raised when a schedule cannot be built or a precondition is violated."""


@dataclass(frozen=True)
class BurningSchedule:
    centers: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(int(c) for c in self.centers))
        if not self.centers:
            raise ScheduleError("a burning schedule needs at least one center")

    def __len__(self) -> int:
        return len(self.centers)

    @property
    def length(self) -> int:
        return len(self.centers)

    def radius(self, i: int) -> int:
        """Radius of 0-indexed position ``i``."""
        return len(self.centers) - 1 - i

    def balls(self) -> list[tuple[int, int]]:
        """``(center, radius)`` pairs in schedule order."""
        L = len(self.centers)
        return [(c, L - 1 - i) for i, c in enumerate(self.centers)]

    def to_json(self, n: int, valid: bool) -> dict:
        return {"n": n, "length": self.length, "centers": list(self.centers), "valid": valid}


@dataclass(frozen=True)
class BoundsReport:
    """Closed-form reference values for a graph with ``n`` vertices and minimum degree ``k_min``.

    ``thm1_ref`` is ceil(sqrt(3n/(k+1))) with the asymptotic factor dropped.
    It is a reference value, not a guaranteed bound.
    """

    n: int
    k_min: int
    sqrt_ceil: int
    lemma2_size: int
    thm1_ref: int
    bonato_upper: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k_min": self.k_min,
            "sqrt_ceil": self.sqrt_ceil,
            "lemma2_size": self.lemma2_size,
            "thm1_ref": self.thm1_ref,
            "bonato_upper": self.bonato_upper,
        }


def ceil_sqrt_fraction(p: int, q: int = 1) -> int:
    """Exact ceil(sqrt(p/q)) for nonnegative integers, q > 0."""
    if p < 0 or q <= 0:
        raise ValueError("need p >= 0 and q > 0")
    x = math.isqrt(p // q)
    while x * x * q < p:
        x += 1
    while x > 0 and (x - 1) * (x - 1) * q >= p:
        x -= 1
    return x


def reference_bounds(n: int, k: int) -> BoundsReport:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    return BoundsReport(
        n=n,
        k_min=k,
        sqrt_ceil=ceil_sqrt_fraction(n),
        lemma2_size=3 * (n // (k + 1)) - 2,
        thm1_ref=ceil_sqrt_fraction(3 * n, k + 1),
        bonato_upper=2 * ceil_sqrt_fraction(n) + 1,
    )


# --------------------------------------------------------------------------
# verification


def burned_fuel(g: Graph, balls: Sequence[tuple[int, int]]) -> list[int]:
    """For each vertex, max over balls of ``radius - dist(center, v)``; -1 if uncovered.

    Bucket propagation from the largest radius down, O(n + m + L).
    """
    fuel = [-1] * g.n
    if not balls:
        return fuel
    top = max(r for _, r in balls)
    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    for c, r in balls:
        g.check_vertex(c)
        if r > fuel[c]:
            fuel[c] = r
            buckets[r].append(c)
    for level in range(top, 0, -1):
        for u in buckets[level]:
            if fuel[u] != level:
                continue
            for w in g.adj(u):
                if fuel[w] < level - 1:
                    fuel[w] = level - 1
                    buckets[level - 1].append(w)
    return fuel


def verify_schedule(g: Graph, s: BurningSchedule | Sequence[int]) -> bool:
    centers = s.centers if isinstance(s, BurningSchedule) else tuple(s)
    if not centers:
        raise ScheduleError("empty schedule")
    for c in centers:
        g.check_vertex(c)
    L = len(centers)
    fuel = burned_fuel(g, [(c, L - 1 - i) for i, c in enumerate(centers)])
    return all(f >= 0 for f in fuel)


# --------------------------------------------------------------------------
# brute-force oracle


def burning_number_oracle(g: Graph, max_L: int) -> tuple[int, BurningSchedule]:
    """Smallest L <= max_L by enumerating every ordered center tuple of length L.

    Among valid tuples the first one with distinct centers is returned as the
    witness; repeated centers are only returned if no distinct tuple exists.
    """
    require_connected(g)
    if max_L < 1:
        raise ValueError("max_L must be >= 1")
    n = g.n
    full = (1 << n) - 1
    masks: list[list[int]] = []
    for r in range(max_L):
        row = []
        for c in range(n):
            m = 0
            for v in ball(g, c, r):
                m |= 1 << v
            row.append(m)
        masks.append(row)
    for L in range(1, max_L + 1):
        fallback = None
        for tup in product(range(n), repeat=L):
            cover = 0
            for i, c in enumerate(tup):
                cover |= masks[L - 1 - i][c]
            if cover != full:
                continue
            if len(set(tup)) == L:
                return L, BurningSchedule(tup)
            if fallback is None:
                fallback = tup
        if fallback is not None:
            return L, BurningSchedule(fallback)
    raise ScheduleError("no schedule within limit")


# --------------------------------------------------------------------------
# ball tables shared by the exact and greedy searches


class BallTable:
    """Bitmask balls ``mask(c, r)`` for every center, from all-pairs BFS."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.dist = distance_matrix(g)
        self._cum: list[list[int]] = []
        for c in range(g.n):
            layers: list[int] = []
            for v, d in enumerate(self.dist[c]):
                if d is UNREACHABLE:
                    continue
                while len(layers) <= d:
                    layers.append(0)
                layers[d] |= 1 << v
            cum, acc = [], 0
            for layer in layers:
                acc |= layer
                cum.append(acc)
            self._cum.append(cum)
        self._maxball: list[int] = []

    def mask(self, c: int, r: int) -> int:
        cum = self._cum[c]
        return cum[r] if r < len(cum) else cum[-1]

    def maxball(self, r: int) -> int:
        while len(self._maxball) <= r:
            rr = len(self._maxball)
            self._maxball.append(max(self.mask(c, rr).bit_count() for c in range(self.n)))
        return self._maxball[r]


def coverage_lower_bound(g: Graph, table: Optional[BallTable] = None) -> int:
    """Smallest L whose L largest possible balls could hold n vertices in total."""
    require_connected(g)
    table = table or BallTable(g)
    total, L = 0, 0
    while total < g.n:
        total += table.maxball(L)
        L += 1
    return L


def _assemble(L: int, by_radius: dict[int, int], n: int) -> BurningSchedule:
    """Order centers by radius and give unassigned radii the smallest unused vertices."""
    used = set(by_radius.values())
    spare = (v for v in range(n) if v not in used)
    centers = []
    for r in range(L - 1, -1, -1):
        if r not in by_radius:
            by_radius[r] = next(spare)
        centers.append(by_radius[r])
    return BurningSchedule(centers)


# --------------------------------------------------------------------------
# exact solver


def burning_number_exact(g: Graph) -> tuple[int, BurningSchedule]:
    """Exact burning number by iterative deepening over L.

    For each L the search picks the uncovered vertex farthest from the
    centers placed so far (smallest index on ties) and branches over every
    unused radius, largest first, and every unused center within that radius
    of it, smallest index first.  A branch is cut when the largest possible
    balls of the unused radii together hold fewer vertices than remain
    uncovered.
    """
    require_connected(g)
    table = BallTable(g)
    L = coverage_lower_bound(g, table)
    while True:
        found = _search_length(table, L)
        if found is not None:
            return L, _assemble(L, found, g.n)
        L += 1


def _search_length(table: BallTable, L: int) -> Optional[dict[int, int]]:
    n, full, dist = table.n, table.full, table.dist
    maxball = [table.maxball(r) for r in range(L)]
    inf = n + 1
    assigned: dict[int, int] = {}

    def rec(covered: int, used: int, unused: tuple[int, ...], near: list[int]) -> bool:
        if covered == full:
            return True
        if not unused:
            return False
        uncovered = full & ~covered
        if sum(maxball[r] for r in unused) < uncovered.bit_count():
            return False
        u, best = -1, -1
        bits = uncovered
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            if near[v] > best:
                u, best = v, near[v]
            bits ^= low
        du = dist[u]
        for idx, r in enumerate(unused):
            rest = unused[:idx] + unused[idx + 1:]
            for c in range(n):
                if du[c] > r or used >> c & 1:
                    continue
                assigned[r] = c
                dc = dist[c]
                nxt = [a if a < b else b for a, b in zip(near, dc)]
                if rec(covered | table.mask(c, r), used | 1 << c, rest, nxt):
                    return True
                del assigned[r]
        return False

    if rec(0, 0, tuple(range(L - 1, -1, -1)), [inf] * n):
        return dict(assigned)
    return None


# --------------------------------------------------------------------------
# greedy heuristic


def greedy_burning(g: Graph) -> BurningSchedule:
    """Max-coverage greedy schedule, trying L upward from the coverage bound."""
    require_connected(g)
    table = BallTable(g)
    L = coverage_lower_bound(g, table)
    while True:
        covered, used, by_radius = 0, set(), {}
        for r in range(L - 1, -1, -1):
            best_c, best_gain = -1, -1
            uncovered = table.full & ~covered
            for c in range(g.n):
                if c in used:
                    continue
                gain = (table.mask(c, r) & uncovered).bit_count()
                if gain > best_gain:
                    best_c, best_gain = c, gain
            by_radius[r] = best_c
            used.add(best_c)
            covered |= table.mask(best_c, r)
        if covered == table.full:
            return _assemble(L, by_radius, g.n)
        L += 1


# --------------------------------------------------------------------------
# lifting through a dominating structure


def lift_schedule(
    g: Graph,
    h_vertices,
    h_schedule: BurningSchedule,
    hops: int,
    relabel: Optional[Mapping[int, int] | Sequence[int]] = None,
) -> BurningSchedule:
    """Turn a schedule for ``g[h_vertices]`` into one for ``g`` that is ``hops`` longer.

    Every vertex of ``g`` must lie within ``hops`` of ``h_vertices``.  The
    original centers keep their order and gain ``hops`` radius each; the
    ``hops`` trailing fillers are picked greedily by new coverage, falling
    back to the smallest unused vertex.  ``relabel`` maps subgraph indices
    back to ``g``; by default the sorted order of ``h_vertices`` is used.
    """
    if hops < 0:
        raise ScheduleError(f"negative hop count {hops}")
    h_set = sorted(set(h_vertices))
    sub, _ = induced_subgraph(g, h_set)
    if relabel is None:
        relabel = h_set
    for c in h_schedule.centers:
        sub.check_vertex(c)
    if not verify_schedule(sub, h_schedule):
        raise ScheduleError("h_schedule does not burn the induced subgraph")
    dm = multi_source_bfs(g, h_set)
    for v, d in enumerate(dm.dist):
        if d is UNREACHABLE or d > hops:
            raise ScheduleError(f"vertex {v} is farther than {hops} hops from the subgraph")

    centers = [relabel[c] for c in h_schedule.centers]
    L = len(centers) + hops
    balls = [(c, L - 1 - i) for i, c in enumerate(centers)]
    fuel = burned_fuel(g, balls)
    uncovered = {v for v in range(g.n) if fuel[v] < 0}
    used = set(centers)
    for r in range(hops - 1, -1, -1):
        c = _best_filler(g, uncovered, used, r)
        centers.append(c)
        used.add(c)
        if uncovered:
            uncovered -= ball(g, c, r)
    result = BurningSchedule(centers)
    if not verify_schedule(g, result):
        raise ScheduleError("lifted schedule failed verification")
    return result


def _best_filler(g: Graph, uncovered: set[int], used: set[int], r: int) -> int:
    if uncovered:
        # only vertices within r of something uncovered can gain
        near = multi_source_bfs(g, uncovered).within(r)
        best_c, best_gain = -1, 0
        for c in sorted(near):
            if c in used:
                continue
            gain = len(ball(g, c, r) & uncovered)
            if gain > best_gain:
                best_c, best_gain = c, gain
        if best_c >= 0:
            return best_c
    for v in range(g.n):
        if v not in used:
            return v
    # more positions than vertices: the schedule must repeat a center
    return 0
