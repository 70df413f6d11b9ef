"""Degree-1 removal and degree-2 smoothing on multigraphs, with undo logs.

Smoothing keeps parallel edges and loops: when a degree-2 vertex sits
between two already adjacent vertices, collapsing the new edge would lower
both neighbours' degrees and can lower the graph value.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .domination import HopDomWitness, greedy_cds, verify_hop_domination
from .graph import Graph, GraphError, is_connected_subset


class MultiGraph:
    """Undirected multigraph with loops over an arbitrary set of integer labels.

    A loop adds 2 to its endpoint's degree.
    """

    __slots__ = ("_vertices", "_edges", "_deg")

    def __init__(self, vertices: Union[int, Iterable[int]], edges: Iterable[tuple[int, int]] = ()):
        verts = range(vertices) if isinstance(vertices, int) else vertices
        self._vertices = tuple(sorted(set(verts)))
        members = set(self._vertices)
        counts: Counter = Counter()
        deg = dict.fromkeys(self._vertices, 0)
        for u, v in edges:
            if u not in members or v not in members:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            counts[(min(u, v), max(u, v))] += 1
            deg[u] += 1
            deg[v] += 1
        self._edges = counts
        self._deg = deg

    @classmethod
    def from_graph(cls, g: Graph) -> "MultiGraph":
        return cls(g.n, g.edges)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def edge_multiset(self) -> Counter:
        return Counter(self._edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges with repetition, sorted."""
        return sorted(self._edges.elements())

    def neighbors(self, v: int) -> list[int]:
        """Neighbours with multiplicity; a loop contributes ``v`` twice."""
        out = []
        for (a, b), k in self._edges.items():
            if a == v and b == v:
                out.extend([v] * (2 * k))
            elif a == v:
                out.extend([b] * k)
            elif b == v:
                out.extend([a] * k)
        return sorted(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and +self._edges == +other._edges

    def __repr__(self) -> str:
        return f"MultiGraph(vertices={len(self._vertices)}, edges={sum(self._edges.values())})"


def graph_value(g: Union[MultiGraph, Graph]) -> int:
    """Vertices of degree >= 3 minus vertices of degree 1."""
    verts = g.vertices if isinstance(g, MultiGraph) else range(g.n)
    degs = [g.degree(v) for v in verts]
    return sum(1 for d in degs if d >= 3) - sum(1 for d in degs if d == 1)


def simplify(m: MultiGraph) -> Graph:
    """Drop loops and collapse parallel edges.

    The vertex ``m.vertices[i]`` becomes vertex ``i`` of the result.
    """
    index = {v: i for i, v in enumerate(m.vertices)}
    edges = {(index[u], index[v]) for (u, v) in m.edge_multiset() if u != v}
    return Graph(len(index), edges)


@dataclass(frozen=True)
class LeafRemoval:
    v: int
    neighbor: int

    op = "leaf"

    @property
    def neighbors(self) -> tuple[int, ...]:
        return (self.neighbor,)

    def to_json(self) -> dict:
        return {"op": "leaf", "v": self.v, "neighbors": [self.neighbor]}


@dataclass(frozen=True)
class Smoothing:
    v: int
    x: int
    y: int

    op = "smooth"

    @property
    def neighbors(self) -> tuple[int, ...]:
        return (self.x, self.y)

    def to_json(self) -> dict:
        return {"op": "smooth", "v": self.v, "neighbors": [self.x, self.y]}


Record = Union[LeafRemoval, Smoothing]


@dataclass(frozen=True)
class ReductionTrace:
    vertices: tuple[int, ...]  # labels of the original graph
    records: tuple[Record, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def to_json(self) -> list[dict]:
        return [r.to_json() for r in self.records]

    @classmethod
    def from_json(cls, vertices, data: list[dict]) -> "ReductionTrace":
        records: list[Record] = []
        for item in data:
            nb = item["neighbors"]
            if item["op"] == "leaf" and len(nb) == 1:
                records.append(LeafRemoval(int(item["v"]), int(nb[0])))
            elif item["op"] == "smooth" and len(nb) == 2:
                records.append(Smoothing(int(item["v"]), int(nb[0]), int(nb[1])))
            else:
                raise ValueError(f"malformed trace record {item!r}")
        return cls(tuple(vertices), tuple(records))


class _Work:
    """Mutable adjacency used while reducing."""

    def __init__(self, m: MultiGraph):
        self.alive = set(m.vertices)
        self.adj: dict[int, Counter] = {v: Counter() for v in m.vertices}
        self.deg = {v: m.degree(v) for v in m.vertices}
        for (u, v), k in m.edge_multiset().items():
            self.adj[u][v] += k
            if u != v:
                self.adj[v][u] += k

    def nbrs(self, v: int) -> list[int]:
        out = []
        for w, k in self.adj[v].items():
            out.extend([w] * (2 * k if w == v else k))
        return sorted(out)

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u][v] -= 1
        if not self.adj[u][v]:
            del self.adj[u][v]
        if u != v:
            self.adj[v][u] -= 1
            if not self.adj[v][u]:
                del self.adj[v][u]
        self.deg[u] -= 1
        self.deg[v] -= 1

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u][v] += 1
        if u != v:
            self.adj[v][u] += 1
        self.deg[u] += 1
        self.deg[v] += 1

    def apply(self, rec: Record) -> None:
        v = rec.v
        if v not in self.alive:
            raise GraphError(f"trace removes vertex {v} twice")
        nb = self.nbrs(v)
        if isinstance(rec, LeafRemoval):
            if len(nb) != 1 or nb[0] != rec.neighbor:
                raise GraphError(f"vertex {v} is not a leaf attached to {rec.neighbor}")
            self.remove_edge(v, rec.neighbor)
        else:
            if len(nb) != 2 or v in nb or sorted((rec.x, rec.y)) != nb:
                raise GraphError(f"vertex {v} is not a degree-2 vertex between {rec.x} and {rec.y}")
            self.remove_edge(v, rec.x)
            self.remove_edge(v, rec.y)
            self.add_edge(rec.x, rec.y)
        del self.adj[v]
        del self.deg[v]
        self.alive.discard(v)

    def snapshot(self) -> MultiGraph:
        edges = []
        for u in self.alive:
            for w, k in self.adj[u].items():
                if u <= w:
                    edges.extend([(u, w)] * k)
        return MultiGraph(self.alive, edges)


def reduce_to_core(g: Union[MultiGraph, Graph]) -> tuple[MultiGraph, ReductionTrace]:
    """Peel leaves and smooth degree-2 vertices, smallest index first.

    Stops once the minimum degree is at least 3 or a single vertex remains.
    """
    m = g if isinstance(g, MultiGraph) else MultiGraph.from_graph(g)
    if m.vertex_count == 0:
        raise GraphError("empty graph")
    if not is_connected_subset(simplify(m), range(m.vertex_count)):
        raise GraphError("graph is not connected")
    work = _Work(m)
    heap = [v for v in m.vertices if work.deg[v] in (1, 2)]
    heapq.heapify(heap)
    records: list[Record] = []
    while heap and len(work.alive) > 1:
        v = heapq.heappop(heap)
        if v not in work.alive or work.deg[v] not in (1, 2):
            continue
        nb = work.nbrs(v)
        if work.deg[v] == 1:
            rec: Record = LeafRemoval(v, nb[0])
        else:
            rec = Smoothing(v, nb[0], nb[1])
        work.apply(rec)
        records.append(rec)
        for w in set(nb):
            if w in work.alive and work.deg[w] in (1, 2):
                heapq.heappush(heap, w)
    return work.snapshot(), ReductionTrace(m.vertices, tuple(records))


def replay(original: MultiGraph, trace: ReductionTrace, upto: int | None = None) -> MultiGraph:
    """Apply the first ``upto`` records (all by default) to ``original``."""
    work = _Work(original)
    for rec in trace.records[:upto]:
        work.apply(rec)
    return work.snapshot()


def replay_steps(original: MultiGraph, trace: ReductionTrace) -> Iterable[MultiGraph]:
    """Yield the original and the graph after every record."""
    work = _Work(original)
    yield work.snapshot()
    for rec in trace.records:
        work.apply(rec)
        yield work.snapshot()


def value_monotone_check(g: Union[MultiGraph, Graph]) -> bool:
    m = g if isinstance(g, MultiGraph) else MultiGraph.from_graph(g)
    _, trace = reduce_to_core(m)
    values = [graph_value(step) for step in replay_steps(m, trace)]
    return all(a <= b for a, b in zip(values, values[1:]))


def _is_cds(m: MultiGraph, s: set[int]) -> bool:
    if not s or not s <= set(m.vertices):
        return False
    g = simplify(m)
    index = {v: i for i, v in enumerate(m.vertices)}
    return verify_hop_domination(g, HopDomWitness(frozenset(index[v] for v in s), 1))


def greedy_core_cds(core: MultiGraph) -> set[int]:
    """``greedy_cds`` on the simplified core, in the core's labels."""
    w = greedy_cds(simplify(core))
    return {core.vertices[i] for i in w.vertices}


def lift_cds(
    trace: ReductionTrace, core_cds: Iterable[int], original: MultiGraph, prune: bool = False
) -> set[int]:
    """Undo the reduction, growing a connected dominating set by at most one per record.

    At each restored vertex ``v``: keep ``v`` if the set already touches one
    of its neighbours, otherwise add ``v``'s smallest-index neighbour.
    """
    core = replay(original, trace)
    u_set = set(core_cds)
    if not _is_cds(core, u_set):
        raise GraphError("core_cds is not a connected dominating set of the core")
    for rec in reversed(trace.records):
        if any(w in u_set for w in rec.neighbors):
            u_set.add(rec.v)
        else:
            u_set.add(min(rec.neighbors))
    if prune:
        u_set = prune_cds(original, u_set)
    return u_set


def prune_cds(m: MultiGraph, s: set[int]) -> set[int]:
    """Drop vertices smallest-first while the set stays a connected dominating set."""
    s = set(s)
    changed = True
    while changed:
        changed = False
        for v in sorted(s):
            if len(s) > 1 and _is_cds(m, s - {v}):
                s.discard(v)
                changed = True
                break
    return s
