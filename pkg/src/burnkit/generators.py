"""Deterministic graph families and seeded random families."""

from __future__ import annotations

import heapq
from itertools import combinations

from .graph import Graph, GraphError, is_connected
from .rng import SplitMix64


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def star(n_leaves: int) -> Graph:
    """K_{1,n_leaves} with center 0."""
    if n_leaves < 1:
        raise GraphError(f"star needs at least one leaf, got {n_leaves}")
    return Graph(n_leaves + 1, [(0, i) for i in range(1, n_leaves + 1)])


def spider(legs: int, leg_len: int) -> Graph:
    """Center 0 with ``legs`` paths of ``leg_len`` vertices each.

    Leg ``j`` occupies vertices ``1 + j*leg_len .. (j+1)*leg_len``, numbered
    outward from the center.
    """
    if legs < 1 or leg_len < 1:
        raise GraphError(f"spider needs legs >= 1 and leg_len >= 1, got {legs}, {leg_len}")
    edges = []
    for j in range(legs):
        first = 1 + j * leg_len
        edges.append((0, first))
        edges.extend((first + i, first + i + 1) for i in range(leg_len - 1))
    return Graph(1 + legs * leg_len, edges)


def necklace(block_order: int, blocks: int) -> Graph:
    """Cyclic chain of ``blocks`` copies of K_{block_order} minus one edge.

    Block ``i`` uses vertices ``i*q .. i*q+q-1`` (``q = block_order``); its
    missing edge joins its first vertex ``a_i`` and last vertex ``b_i``, and
    ``b_i`` is linked to ``a_{i+1}`` (indices mod ``blocks``).  Every vertex
    ends up with degree ``q - 1``.
    """
    if block_order < 4:
        raise GraphError(f"necklace needs block_order >= 4, got {block_order}")
    if blocks < 3:
        raise GraphError(f"necklace needs blocks >= 3, got {blocks}")
    q = block_order
    edges = []
    for i in range(blocks):
        base = i * q
        a, b = base, base + q - 1
        edges.extend(e for e in combinations(range(base, base + q), 2) if e != (a, b))
        nxt = ((i + 1) % blocks) * q
        edges.append((b, nxt))
    return Graph(blocks * q, edges)


def random_regular(n: int, k: int, seed: int, max_restarts: int = 1000) -> Graph:
    """Connected simple k-regular graph from the pairing model.

    Stubs are shuffled and paired; pairs that would form a loop or a repeated
    edge go back into the pool and the pool is re-paired.  If the pool can no
    longer be completed, or the finished graph is disconnected, the whole
    construction restarts.  The result is deterministic per seed but not
    exactly uniform.
    """
    if (n * k) % 2:
        raise GraphError(f"no {k}-regular graph on {n} vertices: n*k is odd")
    if not 0 <= k < n:
        raise GraphError(f"need 0 <= k < n, got k={k}, n={n}")
    rng = SplitMix64(seed)
    for _ in range(max_restarts):
        edges = _try_pairing(n, k, rng)
        if edges is None:
            continue
        g = Graph(n, edges)
        if n == 0 or is_connected(g):
            return g
    raise GraphError(f"random_regular({n}, {k}, {seed}): retry budget exhausted")


def _try_pairing(n: int, k: int, rng: SplitMix64) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(k)]
    while stubs:
        rng.shuffle(stubs)
        leftover = []
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u > v:
                u, v = v, u
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                leftover.extend((u, v))
        if leftover and not _completable(leftover, edges):
            return None
        stubs = leftover
    return edges


def _completable(stubs: list[int], edges: set[tuple[int, int]]) -> bool:
    # some pair of remaining stubs can still become a new edge
    nodes = sorted(set(stubs))
    return any((u, v) not in edges for u, v in combinations(nodes, 2))


def random_tree(n: int, seed: int) -> Graph:
    return random_connected(n, 0, seed)


def random_connected(n: int, extra_edges: int, seed: int) -> Graph:
    """Random Pruefer-sequence spanning tree plus ``extra_edges`` random extra edges."""
    if n < 1:
        raise GraphError(f"random_connected needs n >= 1, got {n}")
    room = n * (n - 1) // 2 - (n - 1)
    if not 0 <= extra_edges <= room:
        raise GraphError(f"extra_edges must be in [0, {room}] for n={n}, got {extra_edges}")
    rng = SplitMix64(seed)
    tree = _pruefer_tree(n, [rng.below(n) for _ in range(max(n - 2, 0))])
    edges = set(tree)
    if extra_edges <= room // 2:
        while len(edges) < n - 1 + extra_edges:
            u, v = rng.below(n), rng.below(n)
            if u == v:
                continue
            edges.add((min(u, v), max(u, v)))
    else:
        free = [e for e in combinations(range(n), 2) if e not in edges]
        # partial Fisher-Yates over the complement
        for i in range(extra_edges):
            j = i + rng.below(len(free) - i)
            free[i], free[j] = free[j], free[i]
        edges.update(free[:extra_edges])
    return Graph(n, edges)


def _pruefer_tree(n: int, seq: list[int]) -> list[tuple[int, int]]:
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# name -> (constructor, number of integer parameters, uses seed)
FAMILIES = {
    "path": (path, 1, False),
    "cycle": (cycle, 1, False),
    "complete": (complete, 1, False),
    "star": (star, 1, False),
    "spider": (spider, 2, False),
    "necklace": (necklace, 2, False),
    "petersen": (petersen, 0, False),
    "random-regular": (random_regular, 2, True),
    "random-connected": (random_connected, 2, True),
    "random-tree": (random_tree, 1, True),
}


def build(family: str, params: tuple[int, ...] | list[int], seed: int = 0) -> Graph:
    """Construct a named family member; the shared entry point for the CLI and experiments."""
    try:
        fn, arity, seeded = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise GraphError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params, seed) if seeded else fn(*params)
