"""Exact enumeration of all maximal cliques.

The enumerator is pivoted Bron-Kerbosch with an outer loop in degeneracy
order: each vertex v spawns one subproblem restricted to its neighborhood,
split into later (candidate) and earlier (excluded) neighbors, so every
maximal clique is reported exactly once at its earliest member. Results are
materialized and canonically sorted; ``iter_maximal_cliques`` streams them
instead for graphs whose clique count does not fit in memory.

Two interchangeable kernels: whole-graph bitmasks for small n, per-vertex
local search on frozensets for large sparse graphs.
"""

from __future__ import annotations

import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, VertexSubset, core_decomposition

__all__ = [
    "CommunitySet",
    "enumerate_maximal_cliques",
    "iter_maximal_cliques",
    "brute_force_maximal_cliques",
]

# Above this vertex count, whole-graph bitmasks get slow; fall back to sets.
_BITMASK_LIMIT = 4096

_BRUTE_FORCE_LIMIT = 20


def _canonical_key(subset: VertexSubset):
    return (-len(subset), subset)


@dataclass(frozen=True)
class CommunitySet:
    """A duplicate-free collection of vertex subsets in canonical order:
    larger subsets first, ties broken lexicographically by member list."""

    communities: tuple

    @classmethod
    def from_iterable(cls, subsets: Iterable[Iterable[int]]) -> "CommunitySet":
        seen = set()
        out = []
        for s in subsets:
            t = tuple(sorted(s))
            if not t:
                raise ValueError("empty community rejected")
            if t not in seen:
                seen.add(t)
                out.append(t)
        out.sort(key=_canonical_key)
        return cls(tuple(out))

    def as_set(self) -> frozenset:
        return frozenset(self.communities)

    def __iter__(self) -> Iterator[VertexSubset]:
        return iter(self.communities)

    def __len__(self) -> int:
        return len(self.communities)

    def __contains__(self, subset) -> bool:
        return tuple(sorted(subset)) in self.as_set()


def enumerate_maximal_cliques(g: Graph, min_size: int = 1, workers: int = 1) -> CommunitySet:
    """Enumerate every maximal clique of ``g`` with at least ``min_size`` members.

    ``workers`` splits the outer vertex loop across threads; the graph is
    shared read-only and the canonically sorted output is identical for any
    worker count. The size filter applies at emission only, so it cannot
    perturb maximality.
    """
    if min_size < 1:
        raise ValueError(f"min_size must be >= 1, got {min_size}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    found = []
    for clique in _run_roots(g, workers):
        if len(clique) >= min_size:
            found.append(clique)
    return CommunitySet.from_iterable(found)


def iter_maximal_cliques(g: Graph, min_size: int = 1) -> Iterator[VertexSubset]:
    """Yield maximal cliques one at a time, in search order (not canonical).

    Deterministic for a fixed graph, single-threaded, O(largest clique)
    working memory beyond the graph itself.
    """
    if min_size < 1:
        raise ValueError(f"min_size must be >= 1, got {min_size}")
    _, order = core_decomposition(g)
    pos = [0] * g.vertex_count
    for i, v in enumerate(order):
        pos[v] = i
    for v in order:
        for clique in _root_cliques(g, v, pos):
            if len(clique) >= min_size:
                yield clique


def brute_force_maximal_cliques(g: Graph) -> CommunitySet:
    """Test oracle: check all 2^n subsets for completeness and maximality."""
    n = g.vertex_count
    if n > _BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force capped at n <= {_BRUTE_FORCE_LIMIT}, got {n}")
    masks = _adjacency_masks(g)
    out = []
    for mask in range(1, 1 << n):
        members = _bits(mask)
        if any(mask & ~(masks[v] | (1 << v)) for v in members):
            continue  # some member misses a co-member: not complete
        if any(masks[v] & mask == mask for v in range(n) if not mask >> v & 1):
            continue  # extendable by an outside vertex adjacent to all members
        out.append(tuple(members))
    return CommunitySet.from_iterable(out)


# ----------------------------------------------------------------- kernels


def _adjacency_masks(g: Graph) -> list:
    masks = [0] * g.vertex_count
    for v, row in enumerate(g.adjacency):
        m = 0
        for w in row:
            m |= 1 << w
        masks[v] = m
    return masks


def _bits(mask: int) -> list:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _run_roots(g: Graph, workers: int) -> list:
    n = g.vertex_count
    _, order = core_decomposition(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 500))
    if workers == 1 or n < 256:
        out = []
        for v in order:
            out.extend(_root_cliques(g, v, pos))
        return out
    chunks = [order[i::workers] for i in range(workers)]

    def run_chunk(chunk):
        acc = []
        for v in chunk:
            acc.extend(_root_cliques(g, v, pos))
        return acc

    out = []
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(run_chunk, chunks):
            out.extend(part)
    return out


def _root_cliques(g: Graph, v: int, pos: list) -> list:
    """All maximal cliques whose earliest member (in degeneracy order) is v."""
    nbrs = g.adjacency[v]
    if not nbrs:
        return [(v,)]
    if g.vertex_count <= _BITMASK_LIMIT:
        return _root_bitmask(g, v, pos)
    return _root_sets(g, v, pos)


def _root_bitmask(g: Graph, v: int, pos: list) -> list:
    local = g.adjacency[v]  # sorted global ids
    index = {w: i for i, w in enumerate(local)}
    ladj = [0] * len(local)
    for i, w in enumerate(local):
        m = 0
        for x in g.neighbor_sets[w] & g.neighbor_sets[v]:
            m |= 1 << index[x]
        ladj[i] = m
    p_mask = 0
    x_mask = 0
    pv = pos[v]
    for i, w in enumerate(local):
        if pos[w] > pv:
            p_mask |= 1 << i
        else:
            x_mask |= 1 << i
    out = []

    def bk(r: list, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        union = p | x
        best_u, best_cover = -1, -1
        m = union
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cover = (ladj[u] & p).bit_count()
            if cover > best_cover:
                best_u, best_cover = u, cover
        branch = p & ~ladj[best_u]
        while branch:
            low = branch & -branch
            w = low.bit_length() - 1
            branch ^= low
            wb = 1 << w
            bk(r + [local[w]], p & ladj[w], x & ladj[w])
            p &= ~wb
            x |= wb

    bk([v], p_mask, x_mask)
    return out


def _root_sets(g: Graph, v: int, pos: list) -> list:
    nbr = g.neighbor_sets
    pv = pos[v]
    p = {w for w in g.adjacency[v] if pos[w] > pv}
    x = {w for w in g.adjacency[v] if pos[w] < pv}
    out = []

    def bk(r: list, p: set, x: set) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        best_u, best_cover = -1, -1
        for u in sorted(p | x):
            cover = len(nbr[u] & p)
            if cover > best_cover:
                best_u, best_cover = u, cover
        for w in sorted(p - nbr[best_u]):
            bk(r + [w], p & nbr[w], x & nbr[w])
            p.remove(w)
            x.add(w)

    bk([v], p, x)
    return out
