"""Seeded synthetic graph generators.

All randomness flows through ``random.Random(seed)`` (the Mersenne Twister
from the standard library, whose seeded sequence is stable across Python
versions), so every generator is reproducible from its echoed parameter
record: ``regenerate(output.spec_echo)`` rebuilds an identical graph.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cliques import CommunitySet
from .graph import Graph, build_graph
from .metrics import Partition, QuasiCliqueParams

__all__ = [
    "GeneratorOutput",
    "gnp",
    "ring_of_cliques",
    "configuration_model",
    "planted_quasi_clique",
    "regenerate",
]


@dataclass(frozen=True)
class GeneratorOutput:
    """A generated graph plus whatever ground truth the model defines.

    ``spec_echo`` holds the full JSON-serializable parameter record,
    including the seed, sufficient to regenerate the identical graph.
    """

    graph: Graph
    ground_truth: Optional[CommunitySet]
    natural_partition: Optional[Partition]
    spec_echo: dict


def gnp(n: int, p: float, seed: int) -> GeneratorOutput:
    """Uniform random graph: each vertex pair is an edge with probability p.

    Uses geometric gap skipping, so generation is O(n + m) rather than
    O(n^2) for sparse p. Deterministic for a fixed (n, p, seed).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    if p >= 1.0:
        edges = [(v, w) for v in range(n) for w in range(v + 1, n)]
    elif p > 0.0:
        log_skip = math.log1p(-p)
        v, w = 1, -1
        while v < n:
            w += 1 + int(math.log1p(-rng.random()) / log_skip)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((w, v))
    graph = build_graph(n, edges)
    echo = {"model": "gnp", "n": n, "p": p, "seed": seed}
    return GeneratorOutput(graph, None, None, echo)


def ring_of_cliques(clique_count: int, clique_size: int) -> GeneratorOutput:
    """A cycle of disjoint complete graphs, consecutive pairs joined by one
    bridge edge between designated port vertices.

    Clique i occupies ids [i*c, (i+1)*c); its outgoing port is local vertex
    0 and its incoming port local vertex 1, so every clique carries exactly
    two bridge endpoints. The natural partition has one block per clique and
    the ground truth is the cliques themselves.
    """
    l, c = clique_count, clique_size
    if l < 3:
        raise ValueError(f"clique_count must be >= 3, got {l}")
    if c < 3:
        raise ValueError(f"clique_size must be >= 3, got {c}")
    edges = []
    for i in range(l):
        base = i * c
        for a in range(c):
            for b in range(a + 1, c):
                edges.append((base + a, base + b))
        edges.append((base, ((i + 1) % l) * c + 1))
    n = l * c
    graph = build_graph(n, edges)
    cliques = [tuple(range(i * c, (i + 1) * c)) for i in range(l)]
    truth = CommunitySet.from_iterable(cliques)
    natural = Partition.from_assignment([v // c for v in range(n)])
    echo = {"model": "ring", "clique_count": l, "clique_size": c}
    return GeneratorOutput(graph, truth, natural, echo)


def configuration_model(
    degrees: Sequence[int], seed: int, max_retries: int = 100
) -> GeneratorOutput:
    """Simple graph with exactly the prescribed degree sequence.

    Stub matching with repair: a shuffled stub pairing is attempted, then
    offending pairs (self-loops, duplicates) are rewired against randomly
    chosen accepted edges; if repair fails the whole attempt is rejected.
    The degree sequence of the result always equals the input exactly.
    """
    degs = [int(d) for d in degrees]
    n = len(degs)
    if any(d < 0 for d in degs):
        raise ValueError("degrees must be non-negative")
    if sum(degs) % 2 != 0:
        raise ValueError(f"degree sum {sum(degs)} is odd; no graph exists")
    if max_retries < 1:
        raise ValueError(f"max_retries must be >= 1, got {max_retries}")
    if not _erdos_gallai(degs):
        raise ValueError("degree sequence is not realizable as a simple graph")
    rng = random.Random(seed)
    stubs = [v for v, d in enumerate(degs) for _ in range(d)]
    for _ in range(max_retries):
        rng.shuffle(stubs)
        edge_list: list = []
        edge_set: set = set()
        bad = []
        for i in range(0, len(stubs), 2):
            a, b = stubs[i], stubs[i + 1]
            if a > b:
                a, b = b, a
            if a == b or (a, b) in edge_set:
                bad.append((stubs[i], stubs[i + 1]))
            else:
                edge_set.add((a, b))
                edge_list.append((a, b))
        if _repair(bad, edge_list, edge_set, rng):
            graph = build_graph(n, edge_list)
            assert list(graph.degrees) == degs
            echo = {
                "model": "config",
                "degrees": degs,
                "seed": seed,
                "max_retries": max_retries,
            }
            return GeneratorOutput(graph, None, None, echo)
    raise ValueError(f"configuration model failed after {max_retries} attempts")


def _erdos_gallai(degrees: Sequence[int]) -> bool:
    n = len(degrees)
    ds = sorted(degrees, reverse=True)
    if n == 0:
        return True
    if ds[0] >= n:
        return False
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + ds[i]
    prefix = 0
    for k in range(1, n + 1):
        prefix += ds[k - 1]
        # first index >= k whose degree drops below k (ds is sorted desc)
        lo, hi = k, n
        while lo < hi:
            mid = (lo + hi) // 2
            if ds[mid] < k:
                hi = mid
            else:
                lo = mid + 1
        bounded = (lo - k) * k + suffix[lo]
        if prefix > k * (k - 1) + bounded:
            return False
    return True


def _repair(bad: list, edge_list: list, edge_set: set, rng: random.Random) -> bool:
    """Rewire each offending stub pair against a random accepted edge."""
    for a, b in bad:
        fixed = False
        for _ in range(200):
            if not edge_list:
                break
            idx = rng.randrange(len(edge_list))
            c, d = edge_list[idx]
            if rng.random() < 0.5:
                c, d = d, c
            # replace (c, d) with (a, c) and (b, d)
            e1 = (a, c) if a < c else (c, a)
            e2 = (b, d) if b < d else (d, b)
            if a == c or b == d or e1 == e2 or e1 in edge_set or e2 in edge_set:
                continue
            edge_set.remove(edge_list[idx])
            edge_list[idx] = e1
            edge_set.add(e1)
            edge_list.append(e2)
            edge_set.add(e2)
            fixed = True
            break
        if not fixed:
            return False
    return True


def planted_quasi_clique(
    n: int,
    background_p: float,
    plant_specs: Sequence,
    seed: int,
) -> GeneratorOutput:
    """Background random graph with dense subsets planted on the lowest ids.

    Each plant spec is (size, lam, gamma); edges inside the plant are added
    on top of the background until the minimum internal degree reaches the
    degree bound and the internal edge count reaches the density bound, so
    every plant passes the quasi-clique test at its own parameters.
    """
    if not (0.0 <= background_p < 1.0):
        raise ValueError(f"background_p must be in [0, 1), got {background_p}")
    specs = []
    for size, lam, gam in plant_specs:
        size = int(size)
        if size < 1:
            raise ValueError(f"plant size must be >= 1, got {size}")
        # reuse the params type for domain validation and exact thresholds
        specs.append((size, QuasiCliqueParams(lam=lam, gamma=gam, min_size=1)))
    if sum(size for size, _ in specs) > n:
        raise ValueError(
            f"plants need {sum(size for size, _ in specs)} vertices but n={n}"
        )
    rng = random.Random(seed)
    edge_set: set = set()
    if background_p > 0.0:
        log_skip = math.log1p(-background_p)
        v, w = 1, -1
        while v < n:
            w += 1 + int(math.log1p(-rng.random()) / log_skip)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edge_set.add((w, v))
    offset = 0
    truths = []
    for size, plant_params in specs:
        ids = list(range(offset, offset + size))
        offset += size
        _densify(ids, plant_params, edge_set, rng)
        truths.append(tuple(ids))
    graph = build_graph(n, edge_set)
    truth = CommunitySet.from_iterable(truths) if truths else CommunitySet(())
    echo = {
        "model": "planted",
        "n": n,
        "background_p": background_p,
        "plants": [
            [size, str(p.lam), str(p.gamma)] for size, p in specs
        ],
        "seed": seed,
    }
    return GeneratorOutput(graph, truth, None, echo)


def _densify(ids: list, params: QuasiCliqueParams, edge_set: set, rng: random.Random) -> None:
    size = len(ids)
    dt = params.degree_threshold(size)
    et = params.edge_threshold(size)
    local = {v: set() for v in ids}
    member = set(ids)
    for a, b in edge_set:
        if a in member and b in member:
            local[a].add(b)
            local[b].add(a)

    def add(a: int, b: int) -> None:
        if a > b:
            a, b = b, a
        edge_set.add((a, b))
        local[a].add(b)
        local[b].add(a)

    while True:
        u = min(ids, key=lambda v: (len(local[v]), v))
        if len(local[u]) < dt:
            open_peers = [v for v in ids if v != u and v not in local[u]]
            w = min(open_peers, key=lambda v: (len(local[v]), v))
            add(u, w)
            continue
        internal = sum(len(local[v]) for v in ids) // 2
        if internal < et:
            missing = [
                (a, b)
                for i, a in enumerate(ids)
                for b in ids[i + 1 :]
                if b not in local[a]
            ]
            add(*rng.choice(missing))
            continue
        break


def regenerate(spec_echo: dict) -> GeneratorOutput:
    """Rebuild a generator output from an echoed parameter record."""
    model = spec_echo["model"]
    if model == "gnp":
        return gnp(spec_echo["n"], spec_echo["p"], spec_echo["seed"])
    if model == "ring":
        return ring_of_cliques(spec_echo["clique_count"], spec_echo["clique_size"])
    if model == "config":
        return configuration_model(
            spec_echo["degrees"], spec_echo["seed"], spec_echo["max_retries"]
        )
    if model == "planted":
        plants = [
            (size, Fraction(lam), Fraction(gam))
            for size, lam, gam in spec_echo["plants"]
        ]
        return planted_quasi_clique(
            spec_echo["n"], spec_echo["background_p"], plants, spec_echo["seed"]
        )
    raise ValueError(f"unknown generator model {model!r}")
