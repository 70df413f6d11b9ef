"""Connected hop-dominating sets and the two end-to-end burning pipelines."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .burning import (
    BoundsReport,
    BurningSchedule,
    burning_number_exact,
    greedy_burning,
    lift_schedule,
    reference_bounds,
    verify_schedule,
)
from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    induced_subgraph,
    inverse_relabel,
    is_connected_subset,
    max_degree_vertex,
    min_degree,
    multi_source_bfs,
    require_connected,
)

DEFAULT_EXACT_THRESHOLD = 20


@dataclass(frozen=True)
class HopDomWitness:
    vertices: frozenset[int]
    hops: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self, n: int, valid: bool) -> dict:
        return {"n": n, "hops": self.hops, "vertices": sorted(self.vertices), "valid": valid}


@dataclass(frozen=True)
class GrowthStep:
    t: int
    v: int
    path: tuple[int, ...]  # from a vertex of H_t to v_t, 4 vertices
    size_after: int
    a: int  # vertices within distance 1 of H_t


@dataclass(frozen=True)
class GrowthTrace:
    start: int
    steps: tuple[GrowthStep, ...]
    final_a: int  # vertices within distance 1 of the final H

    def a_values(self) -> list[int]:
        """a_0, a_1, ... including the value for the final set."""
        return [s.a for s in self.steps] + [self.final_a]

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["t", "v_t", "path", "size_after", "a_t"]]
        for s in self.steps:
            rows.append([str(s.t), str(s.v), "-".join(map(str, s.path)), str(s.size_after), str(s.a)])
        return rows


def verify_hop_domination(g: Graph, w: HopDomWitness) -> bool:
    if not w.vertices:
        raise GraphError("witness has no vertices")
    for v in w.vertices:
        g.check_vertex(v)
    if not is_connected_subset(g, w.vertices):
        return False
    far = multi_source_bfs(g, w.vertices).max_distance()
    return far is not UNREACHABLE and far <= w.hops


def connected_2hop_dominating(g: Graph, start: Optional[int] = None) -> tuple[HopDomWitness, GrowthTrace]:
    """Grow H from ``start`` by length-3 paths until nothing is at distance 3.

    Each step takes the smallest-index vertex at distance exactly 3 and walks
    back to H along smallest-index predecessors.  Distances are maintained
    incrementally since adding vertices to H only shrinks them.
    """
    require_connected(g)
    if start is None:
        start = max_degree_vertex(g)
    g.check_vertex(start)
    n = g.n
    in_h = [False] * n
    in_h[start] = True
    dist: list[Optional[int]] = [UNREACHABLE] * n
    _relax(g, dist, [start])
    steps = []
    size = 1
    t = 0
    while True:
        a_t = sum(1 for d in dist if d <= 1)
        target = next((v for v in range(n) if dist[v] == 3), None)
        if target is None:
            break
        walk = [target]
        cur = target
        while dist[cur] > 0:
            cur = next(w for w in g.adj(cur) if dist[w] == dist[cur] - 1)
            walk.append(cur)
        p = tuple(reversed(walk))
        fresh = [v for v in p if not in_h[v]]
        for v in fresh:
            in_h[v] = True
        size += len(fresh)
        _relax(g, dist, fresh)
        steps.append(GrowthStep(t, target, p, size, a_t))
        t += 1
    h = frozenset(v for v in range(n) if in_h[v])
    return HopDomWitness(h, 2), GrowthTrace(start, tuple(steps), a_t)


def _relax(g: Graph, dist: list, new_sources: list[int]) -> None:
    queue = deque()
    for s in new_sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj(u):
            dw = dist[w]
            if dw is UNREACHABLE or dw > du:
                dist[w] = du
                queue.append(w)


def nonleaf_cds(g: Graph) -> HopDomWitness:
    require_connected(g)
    if g.n <= 2:
        raise GraphError("graph too small for non-leaf CDS")
    return HopDomWitness(frozenset(v for v in range(g.n) if g.degree(v) >= 2), 1)


def greedy_cds(g: Graph) -> HopDomWitness:
    """BFS tree from the max-degree vertex, pruned of leaves while still dominating."""
    require_connected(g)
    n = g.n
    if n <= 2:
        return HopDomWitness(frozenset(range(n)), 1)
    root = max_degree_vertex(g)
    parent = [-1] * n
    seen = [False] * n
    seen[root] = True
    order = deque([root])
    tree_deg = [0] * n
    while order:
        u = order.popleft()
        for w in g.adj(u):
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                tree_deg[u] += 1
                tree_deg[w] += 1
                order.append(w)
    tree_adj: list[set[int]] = [set() for _ in range(n)]
    for v in range(n):
        if parent[v] >= 0:
            tree_adj[v].add(parent[v])
            tree_adj[parent[v]].add(v)

    in_d = [True] * n
    # closed-neighbourhood hits in D
    hits = [g.degree(v) + 1 for v in range(n)]
    size = n
    progress = True
    while progress and size > 1:
        progress = False
        for v in range(n):
            if not in_d[v] or len(tree_adj[v]) != 1:
                continue
            if hits[v] < 2 or any(hits[w] < 2 for w in g.adj(v)):
                continue
            in_d[v] = False
            size -= 1
            hits[v] -= 1
            for w in g.adj(v):
                hits[w] -= 1
            (p,) = tree_adj[v]
            tree_adj[p].discard(v)
            tree_adj[v].clear()
            progress = True
            break
    return HopDomWitness(frozenset(v for v in range(n) if in_d[v]), 1)


# --------------------------------------------------------------------------
# pipelines


def _burn_subgraph(g: Graph, d: frozenset[int], hops: int, exact_threshold: int):
    sub, relabel = induced_subgraph(g, d)
    if sub.n <= exact_threshold:
        _, sched = burning_number_exact(sub)
        solver = "exact"
    else:
        sched = greedy_burning(sub)
        solver = "greedy"
    lifted = lift_schedule(g, d, sched, hops, inverse_relabel(relabel))
    return sched, lifted, solver


def _bounds_or_none(g: Graph) -> Optional[BoundsReport]:
    k = min_degree(g)
    if g.n < 2 or k < 1:
        return None
    return reference_bounds(g.n, k)


@dataclass(frozen=True)
class MinDegReport:
    n: int
    k_min: int
    h_size: int
    lemma2_bound: int
    h_solver: str
    h_schedule_length: int
    final_length: int
    bounds: Optional[BoundsReport]
    trace: GrowthTrace = field(repr=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k_min": self.k_min,
            "h_size": self.h_size,
            "lemma2_bound": self.lemma2_bound,
            "h_solver": self.h_solver,
            "h_schedule_length": self.h_schedule_length,
            "final_length": self.final_length,
            "bounds": self.bounds.to_json() if self.bounds else None,
        }


def burn_via_mindeg(
    g: Graph, exact_threshold: int = DEFAULT_EXACT_THRESHOLD, start: Optional[int] = None
) -> tuple[BurningSchedule, MinDegReport]:
    """Burn H from the 2-hop construction, then lift with two extra rounds."""
    witness, trace = connected_2hop_dominating(g, start)
    k = min_degree(g)
    h_sched, sched, solver = _burn_subgraph(g, witness.vertices, 2, exact_threshold)
    if not verify_schedule(g, sched):
        raise AssertionError("mindeg pipeline produced an invalid schedule")
    report = MinDegReport(
        n=g.n,
        k_min=k,
        h_size=len(witness),
        lemma2_bound=3 * (g.n // (k + 1)) - 2,
        h_solver=solver,
        h_schedule_length=h_sched.length,
        final_length=sched.length,
        bounds=_bounds_or_none(g),
        trace=trace,
    )
    return sched, report


@dataclass(frozen=True)
class WeakDegReport:
    n: int
    epsilon: Fraction
    leaf_count: int
    non2_fraction: Fraction
    branch: str  # "leaf" or "reduction"
    cds_size: int
    reference_size: Fraction
    core_size: Optional[int]
    trace_length: Optional[int]
    d_solver: str
    d_schedule_length: int
    final_length: int
    bounds: Optional[BoundsReport]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "epsilon": str(self.epsilon),
            "leaf_count": self.leaf_count,
            "non2_fraction": float(self.non2_fraction),
            "branch": self.branch,
            "cds_size": self.cds_size,
            "reference_size": float(self.reference_size),
            "core_size": self.core_size,
            "trace_length": self.trace_length,
            "d_solver": self.d_solver,
            "d_schedule_length": self.d_schedule_length,
            "final_length": self.final_length,
            "bounds": self.bounds.to_json() if self.bounds else None,
        }


def weakdeg_cds(g: Graph, epsilon) -> tuple[HopDomWitness, dict]:
    """Connected dominating set by leaf count: non-leaves, or reduce/solve/lift."""
    from .reduction import MultiGraph, greedy_core_cds, lift_cds, reduce_to_core

    require_connected(g)
    if g.n < 3:
        raise GraphError("weak-degree pipeline needs n >= 3")
    eps = Fraction(epsilon)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    leaves = sum(1 for v in range(g.n) if g.degree(v) == 1)
    info: dict = {"leaf_count": leaves, "epsilon": eps}
    if leaves >= eps * g.n / 3:
        info.update(branch="leaf", reference_size=(1 - eps / 3) * g.n, core_size=None, trace_length=None)
        return nonleaf_cds(g), info
    original = MultiGraph.from_graph(g)
    core, trace = reduce_to_core(original)
    core_cds = greedy_core_cds(core)
    lifted = lift_cds(trace, core_cds, original)
    info.update(
        branch="reduction",
        reference_size=(1 - eps / 12) * g.n,
        core_size=core.vertex_count,
        trace_length=len(trace),
    )
    return HopDomWitness(frozenset(lifted), 1), info


def burn_via_weakdeg(
    g: Graph, epsilon=Fraction(1, 2), exact_threshold: int = DEFAULT_EXACT_THRESHOLD
) -> tuple[BurningSchedule, WeakDegReport]:
    """Burn a connected dominating set, then lift with one extra round."""
    d, info = weakdeg_cds(g, epsilon)
    if not verify_hop_domination(g, d):
        raise AssertionError("weak-degree pipeline produced an invalid dominating set")
    d_sched, sched, solver = _burn_subgraph(g, d.vertices, 1, exact_threshold)
    if not verify_schedule(g, sched):
        raise AssertionError("weak-degree pipeline produced an invalid schedule")
    non2 = sum(1 for v in range(g.n) if g.degree(v) != 2)
    report = WeakDegReport(
        n=g.n,
        epsilon=info["epsilon"],
        leaf_count=info["leaf_count"],
        non2_fraction=Fraction(non2, g.n),
        branch=info["branch"],
        cds_size=len(d),
        reference_size=info["reference_size"],
        core_size=info["core_size"],
        trace_length=info["trace_length"],
        d_solver=solver,
        d_schedule_length=d_sched.length,
        final_length=sched.length,
        bounds=_bounds_or_none(g),
    )
    return sched, report
