"""Partition quality scoring and the quasi-clique membership predicate.

The modularity score Q of a partition is the sum over blocks of the
internal-edge fraction minus the squared degree fraction, where block degree
sums count full-graph degrees (boundary edges included). All threshold
comparisons in the quasi-clique predicate use exact rational arithmetic so
boundary cases (for example a degree bound of exactly 3 out of 4) never
depend on float rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph, SubgraphStats, induced_stats, normalize_subset

__all__ = [
    "Partition",
    "ModularityReport",
    "QuasiCliqueParams",
    "exact_fraction",
    "partition_from_blocks",
    "modularity",
    "modularity_value",
    "is_quasi_clique",
    "cover_to_partition",
    "degenerate_partitions",
]

COVER_POLICIES = ("most-neighbors", "lowest-index")


def exact_fraction(value) -> Fraction:
    """Interpret a ratio-like input as an exact rational.

    Floats are read through their shortest decimal repr, so 0.8 means 4/5
    rather than the nearest binary double; strings accept both decimal
    ("0.75") and ratio ("3/4") forms.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact fraction")


@dataclass(frozen=True)
class Partition:
    """Disjoint exhaustive assignment of vertices to blocks 0..block_count-1.

    Every block index in range must be non-empty; use
    :func:`partition_from_blocks` or the ``from_assignment`` factory rather
    than constructing directly.
    """

    block_of: tuple
    block_count: int

    @classmethod
    def from_assignment(cls, block_of: Sequence[int]) -> "Partition":
        bo = tuple(block_of)
        if not bo:
            raise ValueError("partition needs at least one vertex")
        k = max(bo) + 1
        seen = [False] * k
        for b in bo:
            if not (0 <= b < k):
                raise ValueError(f"block index {b} out of range")
            seen[b] = True
        if not all(seen):
            missing = seen.index(False)
            raise ValueError(f"block {missing} is empty; indices must be compact")
        return cls(bo, k)

    def blocks(self) -> list:
        out: list = [[] for _ in range(self.block_count)]
        for v, b in enumerate(self.block_of):
            out[b].append(v)
        return out

    def relabeled(self) -> "Partition":
        """Relabel blocks in order of first vertex occurrence (canonical form)."""
        mapping: dict = {}
        bo = []
        for b in self.block_of:
            if b not in mapping:
                mapping[b] = len(mapping)
            bo.append(mapping[b])
        return Partition(tuple(bo), len(mapping))


def partition_from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Partition:
    """Build a partition of 0..n-1 from explicit disjoint exhaustive blocks."""
    block_of = [-1] * n
    k = 0
    for block in blocks:
        members = list(block)
        if not members:
            raise ValueError("empty block rejected")
        for v in members:
            if not (0 <= v < n):
                raise ValueError(f"vertex {v} out of range for n={n}")
            if block_of[v] != -1:
                raise ValueError(f"vertex {v} assigned to two blocks")
            block_of[v] = k
        k += 1
    if any(b == -1 for b in block_of):
        missing = block_of.index(-1)
        raise ValueError(f"vertex {missing} not covered by any block")
    return Partition(tuple(block_of), k)


@dataclass(frozen=True)
class ModularityReport:
    """Q plus its per-block decomposition (e_i/m, (d_i/2m)^2)."""

    q: float
    per_block: tuple


@dataclass(frozen=True)
class QuasiCliqueParams:
    """Relaxation knobs for quasi-clique membership.

    A subset S qualifies when its minimum internal degree is at least
    lam*(|S|-1), its internal density is at least gamma, |S| >= min_size,
    and (if require_connected) the induced subgraph is connected. lam and
    gamma live in (0, 1]; at lam = gamma = 1 the predicate is exactly
    "S induces a complete subgraph".
    """

    lam: Fraction
    gamma: Fraction
    min_size: int = 3
    require_connected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lam", exact_fraction(self.lam))
        object.__setattr__(self, "gamma", exact_fraction(self.gamma))
        if not (0 < self.lam <= 1):
            raise ValueError(f"lam must be in (0, 1], got {self.lam}")
        if not (0 < self.gamma <= 1):
            raise ValueError(f"gamma must be in (0, 1], got {self.gamma}")
        if self.min_size < 1:
            raise ValueError(f"min_size must be >= 1, got {self.min_size}")

    def degree_threshold(self, size: int) -> int:
        """Smallest integer min-degree that satisfies the degree bound at ``size``."""
        num = self.lam.numerator * (size - 1)
        return -(-num // self.lam.denominator) if size >= 1 else 0

    def edge_threshold(self, size: int) -> int:
        """Smallest integer edge count that satisfies the density bound at ``size``."""
        pairs = size * (size - 1) // 2
        return -(-self.gamma.numerator * pairs // self.gamma.denominator)


def _block_sums(g: Graph, p: Partition) -> tuple:
    if len(p.block_of) != g.vertex_count:
        raise ValueError(
            f"partition covers {len(p.block_of)} vertices, graph has {g.vertex_count}"
        )
    e = [0] * p.block_count
    d = [0] * p.block_count
    bo = p.block_of
    for v in range(g.vertex_count):
        b = bo[v]
        d[b] += g.degrees[v]
        for w in g.adjacency[v]:
            if w > v and bo[w] == b:
                e[b] += 1
    return e, d


def modularity(g: Graph, p: Partition) -> ModularityReport:
    """Score a partition: Q = sum_i (e_i/m - (d_i/2m)^2).

    e_i counts edges internal to block i; d_i sums full-graph degrees over
    block i, so edges leaving the block still contribute to d_i.
    """
    m = g.edge_count
    if m == 0:
        raise ValueError("modularity is undefined on an edgeless graph (m=0)")
    e, d = _block_sums(g, p)
    assert sum(e) <= m and sum(d) == 2 * m
    per_block = []
    total = Fraction(0)
    for ei, di in zip(e, d):
        internal = Fraction(ei, m)
        squared = Fraction(di, 2 * m) ** 2
        total += internal - squared
        per_block.append((float(internal), float(squared)))
    q = float(total)
    assert -1.0 <= q < 1.0
    return ModularityReport(q=q, per_block=tuple(per_block))


def modularity_value(g: Graph, p: Partition) -> Fraction:
    """Exact rational Q, for tie-sensitive comparisons."""
    m = g.edge_count
    if m == 0:
        raise ValueError("modularity is undefined on an edgeless graph (m=0)")
    e, d = _block_sums(g, p)
    assert sum(e) <= m and sum(d) == 2 * m
    return sum((Fraction(ei, m) - Fraction(di, 2 * m) ** 2 for ei, di in zip(e, d)), Fraction(0))


def is_quasi_clique(
    g: Graph, members: Iterable[int], params: QuasiCliqueParams
) -> tuple[bool, SubgraphStats]:
    """Evaluate the quasi-clique conditions on a subset.

    Returns (verdict, stats); stats are computed either way. Comparisons are
    exact: the degree bound holds iff min internal degree >= lam*(|S|-1) as
    rationals, the density bound iff density >= gamma.
    """
    stats = induced_stats(g, members)
    ok = (
        stats.size >= params.min_size
        and stats.min_internal_degree >= params.lam * (stats.size - 1)
        and stats.density >= params.gamma
        and (stats.connected or not params.require_connected)
    )
    return ok, stats


def cover_to_partition(g: Graph, cover, policy: str = "most-neighbors") -> Partition:
    """Flatten a (possibly overlapping) cover into a partition.

    Vertices claimed by several communities go to the one where they have
    the most neighbors ("most-neighbors", ties to the lower community index)
    or simply to the lowest community index ("lowest-index"). Uncovered
    vertices become singleton blocks; emptied blocks are dropped and indices
    compacted, communities first in input order, then singletons by vertex id.
    """
    if policy not in COVER_POLICIES:
        raise ValueError(f"unknown policy {policy!r}; expected one of {COVER_POLICIES}")
    subsets = [normalize_subset(g, s) for s in cover]
    n = g.vertex_count
    if n == 0 and not subsets:
        raise ValueError("cannot partition an empty graph from an empty cover")
    claims: dict = {}
    for ci, s in enumerate(subsets):
        for v in s:
            claims.setdefault(v, []).append(ci)
    assigned: dict = {}
    for v, cis in claims.items():
        if len(cis) == 1 or policy == "lowest-index":
            assigned[v] = cis[0]
        else:
            member_sets = [frozenset(subsets[ci]) for ci in cis]
            links = [len(g.neighbor_sets[v] & ms) for ms in member_sets]
            assigned[v] = cis[max(range(len(cis)), key=lambda i: (links[i], -cis[i]))]
    block_of = [-1] * n
    next_block = 0
    remap: dict = {}
    for ci in range(len(subsets)):
        if any(assigned.get(v) == ci for v in subsets[ci]):
            remap[ci] = next_block
            next_block += 1
    for v, ci in assigned.items():
        block_of[v] = remap[ci]
    for v in range(n):
        if block_of[v] == -1:
            block_of[v] = next_block
            next_block += 1
    return Partition.from_assignment(block_of)


def degenerate_partitions(
    g: Graph,
    reference: Partition,
    epsilon,
    budget: int,
    seed: int,
) -> list:
    """Hunt for distinct partitions whose Q stays within ``epsilon`` of the
    reference, by seeded random single-vertex moves and block merges.

    This is a demonstrator of near-optimal solution multiplicity, not an
    optimizer: it returns up to ``budget`` partitions (each different from
    the reference), scored exactly so that epsilon=0 means exact Q ties.
    Deterministic for a fixed seed. Returns a list of (Partition, Q) pairs.
    """
    eps = exact_fraction(epsilon)
    if eps < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    if budget == 0:
        return []
    threshold = modularity_value(g, reference) - eps
    rng = random.Random(seed)
    ref_key = reference.relabeled().block_of
    found: dict = {}
    bases = [reference]
    attempts = 300 + 120 * budget
    for _ in range(attempts):
        if len(found) >= budget:
            break
        cand = bases[0] if len(bases) == 1 else rng.choice(bases)
        # a short walk; intermediate states may dip below the bound, only the
        # endpoint is scored
        for _ in range(1 + rng.randrange(3)):
            step = _perturb(cand, rng)
            if step is None:
                break
            cand = step
        cand = cand.relabeled()
        key = cand.block_of
        if key == ref_key or key in found:
            continue
        q = modularity_value(g, cand)
        if q >= threshold:
            found[key] = (cand, float(q))
            bases.append(cand)
    return list(found.values())


def _perturb(p: Partition, rng: random.Random):
    n = len(p.block_of)
    k = p.block_count
    do_merge = k >= 2 and rng.random() < 0.5
    if do_merge:
        a, b = rng.sample(range(k), 2)
        bo = [a if x == b else x for x in p.block_of]
        return _compacted(bo)
    v = rng.randrange(n)
    own = p.block_of[v]
    sizes = [0] * k
    for x in p.block_of:
        sizes[x] += 1
    targets = [b for b in range(k) if b != own]
    if sizes[own] > 1:
        targets.append(k)  # split v off into a fresh singleton block
    if not targets:
        return None
    t = rng.choice(targets)
    bo = list(p.block_of)
    bo[v] = t
    return _compacted(bo)


def _compacted(block_of: list) -> Partition:
    live = sorted(set(block_of))
    remap = {b: i for i, b in enumerate(live)}
    return Partition(tuple(remap[b] for b in block_of), len(live))
