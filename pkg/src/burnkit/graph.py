"""Immutable simple graphs on dense integer vertices, plus BFS primitives."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

# Distance to a vertex that no source can reach. Never compare it numerically.
UNREACHABLE = None


class GraphError(ValueError):
    """Raised on malformed graphs or out-of-range vertex arguments."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighbor lists are sorted tuples, so every traversal in the package is
    deterministic.
    """

    __slots__ = ("_n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise GraphError(f"duplicate edge {e}")
            normalized.add(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._edges = tuple(sorted(normalized))

    @property
    def n(self) -> int:
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def adj(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise GraphError(f"vertex {v!r} out of range for n={self._n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={len(self._edges)})"


@dataclass(frozen=True)
class DistanceMap:
    """Shortest-path distances from the nearest vertex of ``sources``.

    Unreachable vertices hold ``UNREACHABLE`` (``None``).
    """

    sources: frozenset[int]
    dist: tuple[Optional[int], ...]

    def __getitem__(self, v: int) -> Optional[int]:
        return self.dist[v]

    def reachable(self, v: int) -> bool:
        return self.dist[v] is not UNREACHABLE

    def max_distance(self) -> Optional[int]:
        """Largest finite distance, or ``UNREACHABLE`` if some vertex is unreached."""
        if any(d is UNREACHABLE for d in self.dist):
            return UNREACHABLE
        return max(self.dist, default=0)

    def within(self, radius: int) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.dist) if d is not UNREACHABLE and d <= radius)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("empty graph")
    return min(g.degree(v) for v in range(g.n))


def max_degree_vertex(g: Graph) -> int:
    """Smallest-index vertex of maximum degree."""
    if g.n == 0:
        raise GraphError("empty graph")
    degs = g.degrees()
    return degs.index(max(degs))


def _bfs(g: Graph, sources: Iterable[int], limit: Optional[int] = None) -> list[Optional[int]]:
    dist: list[Optional[int]] = [UNREACHABLE] * g.n
    queue: deque[int] = deque()
    for s in sources:
        if dist[s] is UNREACHABLE:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in g.adj(u):
            if dist[w] is UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def multi_source_bfs(g: Graph, sources: Iterable[int]) -> DistanceMap:
    src = frozenset(sources)
    if not src:
        raise GraphError("multi_source_bfs needs at least one source")
    for s in src:
        g.check_vertex(s)
    return DistanceMap(src, tuple(_bfs(g, sorted(src))))


def distances_from(g: Graph, v: int) -> list[Optional[int]]:
    g.check_vertex(v)
    return _bfs(g, (v,))


def ball(g: Graph, center: int, radius: int) -> frozenset[int]:
    g.check_vertex(center)
    if radius < 0:
        raise GraphError(f"negative radius {radius}")
    dist = _bfs(g, (center,), limit=radius)
    return frozenset(v for v, d in enumerate(dist) if d is not UNREACHABLE)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("empty graph")
    return all(d is not UNREACHABLE for d in _bfs(g, (0,)))


def require_connected(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("empty graph")
    if not is_connected(g):
        raise GraphError("graph is not connected")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s`` with vertices relabeled in sorted order.

    Returns the subgraph and the old->new relabeling.
    """
    verts = sorted(set(s))
    if not verts:
        raise GraphError("induced_subgraph needs a nonempty vertex set")
    for v in verts:
        g.check_vertex(v)
    relabel = {old: new for new, old in enumerate(verts)}
    edges = [
        (relabel[u], relabel[w])
        for u in verts
        for w in g.adj(u)
        if u < w and w in relabel
    ]
    return Graph(len(verts), edges), relabel


def inverse_relabel(relabel: Mapping[int, int]) -> list[int]:
    """Turn an old->new bijection onto ``0..k-1`` into a new->old list."""
    back = [0] * len(relabel)
    for old, new in relabel.items():
        back[new] = old
    return back


def distance_matrix(g: Graph) -> list[list[Optional[int]]]:
    return [_bfs(g, (v,)) for v in range(g.n)]


def is_connected_subset(g: Graph, s: Sequence[int] | frozenset[int] | set[int]) -> bool:
    """True iff ``s`` is nonempty and induces a connected subgraph."""
    members = set(s)
    if not members:
        return False
    start = min(members)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj(u):
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)
