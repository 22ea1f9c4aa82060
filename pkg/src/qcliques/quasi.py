"""Enumeration of all maximal quasi-cliques.

Maximality here is local: a passing subset is reported iff no single added
vertex yields another passing subset. The membership property is not
hereditary (a failing subset can grow into a passing one), so the search
cannot restrict itself to passing intermediate states. Instead it walks a
set-enumeration tree rooted at each vertex in degeneracy order and prunes
with upper bounds that are conservative by construction:

* every member of a passing superset must eventually reach the minimum
  degree bound, so candidates that cannot are peeled away;
* a node is cut only when no feasible final size admits both the degree and
  the density bound under best-case counting;
* a candidate adjacent to every current member acts as a pivot: any maximal
  subset avoiding it must contain one of its non-neighbors, because adding a
  vertex adjacent to the whole subset never breaks the conditions.

When the degree parameter exceeds 1/2 any two members of a passing subset
are adjacent or share a member neighbor, so the per-root universe shrinks
to a distance-2 ball; this is what makes large sparse graphs tractable.
"""

from __future__ import annotations

import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cliques import CommunitySet
from .graph import Graph, core_decomposition, normalize_subset
from .metrics import QuasiCliqueParams, exact_fraction, is_quasi_clique

__all__ = [
    "is_locally_maximal",
    "enumerate_maximal_quasi_cliques",
    "brute_force_quasi_cliques",
    "sweep",
    "SweepCell",
]

_BRUTE_FORCE_LIMIT = 16


def is_locally_maximal(g: Graph, members: Iterable[int], params: QuasiCliqueParams) -> bool:
    """True iff no single outside vertex can be added while still passing.

    The subset itself must already pass the quasi-clique conditions; a
    ValueError is raised otherwise.
    """
    ok, stats = is_quasi_clique(g, members, params)
    if not ok:
        raise ValueError("subset does not satisfy the quasi-clique conditions")
    member_set = frozenset(normalize_subset(g, members))
    return not _extension_exists(
        g, member_set, stats.size, stats.internal_edges, stats.min_internal_degree, params
    )


def _extension_exists(
    g: Graph,
    member_set: frozenset,
    size: int,
    internal_edges: int,
    min_indeg: int,
    params: QuasiCliqueParams,
) -> bool:
    """Does any single-vertex extension of ``member_set`` pass the predicate?

    Only vertices with a neighbor inside can qualify: an isolated addition
    has internal degree 0, below the (strictly positive) degree bound. A
    member below the degree bound at the grown size must gain the new vertex
    as a neighbor, so when such members exist the candidate pool is the
    intersection of their neighborhoods.
    """
    s2 = size + 1
    dt = params.degree_threshold(s2)
    et = params.edge_threshold(s2)
    if min_indeg + 1 < dt:
        return False  # the weakest member cannot be repaired by one new neighbor
    nbr = g.neighbor_sets
    crit = [v for v in member_set if len(nbr[v] & member_set) < dt]
    if crit:
        crit.sort(key=lambda v: len(nbr[v]))
        pool = set(nbr[crit[0]])
        for w in crit[1:]:
            pool &= nbr[w]
            if not pool:
                return False
        pool -= member_set
    else:
        pool = set()
        for v in member_set:
            pool |= nbr[v]
        pool -= member_set
    for x in pool:
        links = len(nbr[x] & member_set)
        # adding x keeps connectivity (links >= 1) and raises the size, so
        # degree and edge counts are the only conditions left to check
        if links >= dt and internal_edges + links >= et:
            return True
    return False


def enumerate_maximal_quasi_cliques(
    g: Graph, params: QuasiCliqueParams, workers: int = 1
) -> CommunitySet:
    """Enumerate every locally maximal quasi-clique at the given parameters.

    Exact: output equals the brute-force filter of all subsets wherever that
    is computable. ``workers`` splits root vertices across threads over the
    shared read-only graph; the canonical output is identical for any count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    n = g.vertex_count
    if n == 0:
        return CommunitySet.from_iterable([])
    _, order = core_decomposition(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    deg_thr = [params.degree_threshold(s) for s in range(n + 2)]
    edge_thr = [params.edge_threshold(s) for s in range(n + 2)]
    use_ball = params.lam > Fraction(1, 2)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 500))
    if workers == 1 or n < 256:
        found = []
        for v in order:
            found.extend(_search_root(g, v, pos, params, deg_thr, edge_thr, use_ball))
    else:
        chunks = [order[i::workers] for i in range(workers)]

        def run_chunk(chunk):
            acc = []
            for v in chunk:
                acc.extend(_search_root(g, v, pos, params, deg_thr, edge_thr, use_ball))
            return acc

        found = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(run_chunk, chunks):
                found.extend(part)
    return CommunitySet.from_iterable(found)


def _search_root(
    g: Graph,
    root: int,
    pos: list,
    params: QuasiCliqueParams,
    deg_thr: list,
    edge_thr: list,
    use_ball: bool,
) -> list:
    """All locally maximal quasi-cliques whose earliest member is ``root``."""
    n = g.vertex_count
    min_size = params.min_size
    require_connected = params.require_connected
    t0 = deg_thr[min_size]  # degree bound is nondecreasing in size
    nbr = g.neighbor_sets
    pv = pos[root]
    hop1 = [w for w in g.adjacency[root] if pos[w] > pv]
    if len(hop1) < t0:
        return []
    if use_ball:
        # any two members of a passing set are adjacent or share a member
        # neighbor, so everything lives within two later-hops of the root
        univ = {root}
        univ.update(hop1)
        for w in hop1:
            for x in g.adjacency[w]:
                if pos[x] > pv:
                    univ.add(x)
    else:
        univ = {x for x in range(n) if pos[x] > pv}
        univ.add(root)
    if t0 > 0 and len(univ) > 1:
        deg_in = {x: len(nbr[x] & univ) for x in univ}
        stack = [x for x, dx in deg_in.items() if dx < t0]
        while stack:
            x = stack.pop()
            if x not in univ:
                continue
            if x == root:
                return []
            univ.discard(x)
            for w in nbr[x] & univ:
                deg_in[w] -= 1
                if deg_in[w] < t0:
                    stack.append(w)
    if len(univ) < min_size:
        return []

    vids = sorted(univ, key=lambda x: pos[x])  # root lands at local id 0
    index = {x: i for i, x in enumerate(vids)}
    ladj = [0] * len(vids)
    for i, x in enumerate(vids):
        m = 0
        for w in nbr[x] & univ:
            m |= 1 << index[w]
        ladj[i] = m
    out = []

    def rec(s_mask: int, members: list, cand_mask: int) -> None:
        size = len(members)
        indegs = [(ladj[i] & s_mask).bit_count() for i in members]
        e_s = sum(indegs) // 2
        min_indeg = min(indegs)
        cands = _bits(cand_mask)
        links = {w: (ladj[w] & s_mask).bit_count() for w in cands}
        if (
            size >= min_size
            and min_indeg >= deg_thr[size]
            and e_s >= edge_thr[size]
            and (not require_connected or _mask_connected(ladj, s_mask))
        ):
            dt1 = deg_thr[size + 1]
            et1 = edge_thr[size + 1]
            if min_indeg + 1 < dt1:
                out.append(tuple(members))  # no single vertex can repair the minimum
            else:
                crit_mask = 0
                for i, d in zip(members, indegs):
                    if d < dt1:
                        crit_mask |= 1 << i
                local_ext = any(
                    links[w] >= dt1
                    and e_s + links[w] >= et1
                    and ladj[w] & crit_mask == crit_mask
                    for w in cands
                )
                if not local_ext:
                    # extensions may also live outside this root's universe
                    gset = frozenset(vids[i] for i in members)
                    if not _extension_exists(g, gset, size, e_s, min_indeg, params):
                        out.append(tuple(members))
        if not cand_mask:
            return
        k_min = max(1, min_size - size)
        # per-candidate filter: w needs some feasible final size where its
        # best-case internal degree meets the bound; the slack is unimodal in
        # the number of additions, so one probe at the saturation point works
        while True:
            big_k = len(cands)
            if big_k < k_min:
                return
            dropped = False
            for w in cands:
                cdeg_w = (ladj[w] & cand_mask).bit_count()
                k_hat = min(max(cdeg_w + 1, k_min), big_k)
                if links[w] + min(cdeg_w, k_hat - 1) < deg_thr[size + k_hat]:
                    cand_mask &= ~(1 << w)
                    dropped = True
            if not dropped:
                break
            cands = _bits(cand_mask)
        big_k = len(cands)
        # node bound: some final size must admit both conditions under
        # best-case counting (min over members of reachable degree is the
        # min of two affine pieces; density adds the top-k candidate links)
        sat_min = min(ind + (ladj[i] & cand_mask).bit_count() for i, ind in zip(members, indegs))
        links_sorted = sorted((links[w] for w in cands), reverse=True)
        prefix = [0]
        for lw in links_sorted:
            prefix.append(prefix[-1] + lw)
        feasible = False
        for k in range(k_min, big_k + 1):
            s2 = size + k
            if min(sat_min, min_indeg + k) < deg_thr[s2]:
                continue
            if e_s + k * (k - 1) // 2 + prefix[k] < edge_thr[s2]:
                continue
            feasible = True
            break
        if not feasible:
            return
        pivot = -1
        best_cover = -1
        for w in cands:
            if links[w] == size:  # adjacent to every current member
                cover = (ladj[w] & cand_mask).bit_count()
                if cover > best_cover:
                    pivot, best_cover = w, cover
        if pivot >= 0:
            branch_mask = (cand_mask & ~ladj[pivot]) | (1 << pivot)
        else:
            branch_mask = cand_mask
        for w in _bits(branch_mask):
            wb = 1 << w
            rec(s_mask | wb, members + [w], cand_mask & ~wb)
            cand_mask &= ~wb

    rec(1, [0], ((1 << len(vids)) - 1) & ~1)
    return [tuple(sorted(vids[i] for i in t)) for t in out]


def brute_force_quasi_cliques(g: Graph, params: QuasiCliqueParams) -> CommunitySet:
    """Test oracle: filter all 2^n subsets by the predicate, then keep those
    with no passing single-vertex extension."""
    n = g.vertex_count
    if n > _BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force capped at n <= {_BRUTE_FORCE_LIMIT}, got {n}")
    masks = [0] * n
    for v, row in enumerate(g.adjacency):
        m = 0
        for w in row:
            m |= 1 << w
        masks[v] = m
    deg_thr = [params.degree_threshold(s) for s in range(n + 1)]
    edge_thr = [params.edge_threshold(s) for s in range(n + 1)]
    min_size = params.min_size
    passes = bytearray(1 << n)
    for mask in range(1, 1 << n):
        members = _bits(mask)
        size = len(members)
        if size < min_size:
            continue
        indegs = [(masks[v] & mask).bit_count() for v in members]
        if min(indegs) < deg_thr[size]:
            continue
        if sum(indegs) // 2 < edge_thr[size]:
            continue
        if params.require_connected and not _mask_connected(masks, mask):
            continue
        passes[mask] = 1
    out = []
    for mask in range(1, 1 << n):
        if not passes[mask]:
            continue
        if any(passes[mask | (1 << v)] for v in range(n) if not mask >> v & 1):
            continue
        out.append(tuple(_bits(mask)))
    return CommunitySet.from_iterable(out)


@dataclass(frozen=True)
class SweepCell:
    """Summary of one (lam, gamma) grid cell of a parameter sweep."""

    lam: Fraction
    gamma: Fraction
    min_size: int
    community_count: int
    size_histogram: dict
    coverage: float
    mean_overlap: float
    communities: CommunitySet


def sweep(g: Graph, lambdas, gammas, min_size: int = 3, workers: int = 1) -> list:
    """Enumerate over a (lam, gamma) grid and summarize each cell.

    Cells are computed independently; each one records the community count,
    a size histogram, the fraction of vertices covered by at least one
    community, and the mean number of communities per covered vertex.
    """
    lams = [exact_fraction(x) for x in lambdas]
    gams = [exact_fraction(x) for x in gammas]
    if not lams or not gams:
        raise ValueError("parameter lists must be non-empty")
    cells = []
    for lam in lams:
        for gam in gams:
            params = QuasiCliqueParams(lam=lam, gamma=gam, min_size=min_size)
            cs = enumerate_maximal_quasi_cliques(g, params, workers=workers)
            sizes = Counter(len(c) for c in cs)
            covered: set = set()
            total = 0
            for c in cs:
                covered.update(c)
                total += len(c)
            n = g.vertex_count
            cells.append(
                SweepCell(
                    lam=params.lam,
                    gamma=params.gamma,
                    min_size=min_size,
                    community_count=len(cs),
                    size_histogram=dict(sorted(sizes.items())),
                    coverage=len(covered) / n if n else 0.0,
                    mean_overlap=total / len(covered) if covered else 0.0,
                    communities=cs,
                )
            )
    return cells


def _bits(mask: int) -> list:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask_connected(adj_masks: list, mask: int) -> bool:
    if mask == 0:
        return True
    low = mask & -mask
    visited = low
    frontier = low
    while frontier:
        reach = 0
        m = frontier
        while m:
            b = m & -m
            reach |= adj_masks[b.bit_length() - 1]
            m ^= b
        frontier = reach & mask & ~visited
        visited |= frontier
    return visited == mask
