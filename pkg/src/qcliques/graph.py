"""Immutable simple undirected graphs on dense integer vertex ids.

The representation is adjacency-list based: a sorted tuple of neighbor ids
per vertex, plus frozensets for O(1) membership tests. Graphs are built once
through :func:`build_graph` and never mutated afterwards, so a single graph
can be shared freely across threads. Vertex ids are always 0..n-1; mapping
from external labels lives in :mod:`qcliques.graphio`.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# A vertex subset is a strictly increasing tuple of vertex ids.
VertexSubset = tuple

__all__ = [
    "Graph",
    "SubgraphStats",
    "VertexSubset",
    "build_graph",
    "neighbors",
    "degree_extremes",
    "graph_density",
    "induced_stats",
    "core_decomposition",
    "normalize_subset",
]


class Graph:
    """A simple undirected graph: no self-loops, no parallel edges.

    Attributes:
        vertex_count: number of vertices n (ids 0..n-1).
        edge_count: number of distinct undirected edges m.
        adjacency: per-vertex sorted tuple of neighbor ids.
        degrees: per-vertex degree; degrees[v] == len(adjacency[v]).
        neighbor_sets: per-vertex frozenset of neighbor ids.
    """

    __slots__ = ("vertex_count", "edge_count", "adjacency", "degrees", "neighbor_sets")

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        adj = tuple(tuple(row) for row in adjacency)
        self.adjacency = adj
        self.vertex_count = len(adj)
        self.degrees = tuple(len(row) for row in adj)
        self.edge_count = sum(self.degrees) // 2
        self.neighbor_sets = tuple(frozenset(row) for row in adj)

    def has_edge(self, v: int, w: int) -> bool:
        return w in self.neighbor_sets[v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class SubgraphStats:
    """Structural summary of an induced subgraph.

    ``density`` is an exact rational so threshold comparisons never suffer
    float rounding; it is defined as 1 for subsets of size <= 1, where the
    usual edges-over-possible-pairs ratio would divide by zero.
    """

    size: int
    internal_edges: int
    min_internal_degree: int
    max_internal_degree: int
    density: Fraction
    connected: bool


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from unordered vertex pairs.

    Duplicate pairs (in either orientation) collapse to a single edge.
    Self-loops and out-of-range endpoints are rejected with ValueError.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj: list[set] = [set() for _ in range(n)]
    for pair in edges:
        v, w = pair
        if v == w:
            raise ValueError(f"self-loop rejected: ({v}, {w})")
        if not (0 <= v < n) or not (0 <= w < n):
            raise ValueError(f"edge endpoint out of range for n={n}: ({v}, {w})")
        adj[v].add(w)
        adj[w].add(v)
    return Graph([sorted(s) for s in adj])


def neighbors(g: Graph, v: int) -> VertexSubset:
    """Return the sorted neighbor ids of ``v``."""
    if not (0 <= v < g.vertex_count):
        raise ValueError(f"vertex {v} out of range for n={g.vertex_count}")
    return g.adjacency[v]


def degree_extremes(g: Graph) -> tuple[int, int]:
    """Return (minimum degree, maximum degree) over all vertices."""
    if g.vertex_count == 0:
        raise ValueError("degree extremes are undefined on the empty graph")
    return min(g.degrees), max(g.degrees)


def graph_density(g: Graph) -> float:
    """Return edge count divided by the number of possible vertex pairs."""
    n = g.vertex_count
    if n < 2:
        raise ValueError(f"density needs at least 2 vertices, got {n}")
    return float(Fraction(g.edge_count, n * (n - 1) // 2))


def normalize_subset(g: Graph, members: Iterable[int]) -> VertexSubset:
    """Validate a vertex subset and return it as a sorted duplicate-free tuple."""
    s = sorted(set(members))
    if s and (s[0] < 0 or s[-1] >= g.vertex_count):
        bad = s[0] if s[0] < 0 else s[-1]
        raise ValueError(f"subset member {bad} out of range for n={g.vertex_count}")
    return tuple(s)


def induced_stats(g: Graph, members: Iterable[int]) -> SubgraphStats:
    """Compute size, internal edges, degree extremes, density, and connectivity
    of the subgraph induced by ``members``.

    Only edges with both endpoints inside the subset are counted.
    """
    s = normalize_subset(g, members)
    size = len(s)
    if size == 0:
        return SubgraphStats(0, 0, 0, 0, Fraction(1), True)
    sset = frozenset(s)
    indeg = [len(g.neighbor_sets[v] & sset) for v in s]
    internal_edges = sum(indeg) // 2
    density = Fraction(1) if size == 1 else Fraction(internal_edges, size * (size - 1) // 2)
    return SubgraphStats(
        size=size,
        internal_edges=internal_edges,
        min_internal_degree=min(indeg),
        max_internal_degree=max(indeg),
        density=density,
        connected=_subset_connected(g, s, sset),
    )


def _subset_connected(g: Graph, s: VertexSubset, sset: frozenset) -> bool:
    # BFS restricted to the subset; size <= 1 counts as connected.
    if len(s) <= 1:
        return True
    seen = {s[0]}
    queue = deque((s[0],))
    while queue:
        v = queue.popleft()
        for w in g.neighbor_sets[v] & sset:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(s)


def core_decomposition(g: Graph) -> tuple[tuple, tuple]:
    """Peel the graph by repeatedly removing a minimum-degree vertex.

    Returns ``(core, order)`` where ``core[v]`` is the core number of v and
    ``order`` is the peeling permutation. In ``order`` every vertex has at
    most d neighbors later than itself, where d = max(core) is the graph
    degeneracy. Ties break toward the smallest vertex id, so the ordering is
    deterministic.
    """
    n = g.vertex_count
    deg = list(g.degrees)
    removed = [False] * n
    heap: list = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    core = [0] * n
    order = []
    level = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue  # stale heap entry
        removed[v] = True
        level = max(level, d)
        core[v] = level
        order.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return tuple(core), tuple(order)
