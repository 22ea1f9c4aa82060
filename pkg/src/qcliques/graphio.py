"""Reading and writing graphs, community sets, and partitions.

Edge-list text format: one whitespace-separated label pair per line, lines
starting with '#' ignored, blank lines skipped. Labels are arbitrary
whitespace-free tokens. :func:`read_edge_list` maps labels to dense ids in
first-appearance order and tolerates duplicate and reversed edges
(real-world snapshots have both); self-loops are hard errors because they
would corrupt degree semantics downstream.

The canonical writer emits a ``# n=.. m=..`` header followed by each edge
once, smaller id first, sorted, so equal graphs serialize to identical
bytes. :func:`read_graph` is its paired reader: it requires the header and
integer labels, which lets it restore exact vertex ids (including isolated
vertices) so read-after-write is the identity.
"""

from __future__ import annotations

import json
import re
from typing import Optional

from .cliques import CommunitySet
from .graph import Graph, build_graph, induced_stats
from .metrics import Partition

__all__ = [
    "read_edge_list",
    "read_graph",
    "write_graph",
    "read_communities",
    "write_communities",
    "read_partition",
    "write_partition",
    "identity_labels",
]

COMMUNITY_FORMATS = ("tsv", "structured")

_SCHEMA_COMMUNITIES = "qcliques.communities/1"

_HEADER_RE = re.compile(r"^#\s*n=(\d+)\s+m=(\d+)\s*$")


def identity_labels(n: int) -> tuple:
    return tuple(str(v) for v in range(n))


def _as_text(data) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8")
    if isinstance(data, str):
        return data
    raise TypeError(f"expected bytes or str, got {type(data).__name__}")


def read_edge_list(data) -> tuple[Graph, tuple]:
    """Parse a label-pair edge list into a graph and its label map.

    Returns (graph, labels) where labels[id] is the original token; ids are
    assigned in first-appearance order.
    """
    text = _as_text(data)
    ids: dict = {}
    order: list = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected two labels, got {len(tokens)}")
        a, b = tokens
        if a == b:
            raise ValueError(f"line {lineno}: self-loop on {a!r}")
        for tok in (a, b):
            if tok not in ids:
                ids[tok] = len(order)
                order.append(tok)
        edges.append((ids[a], ids[b]))
    return build_graph(len(order), edges), tuple(order)


def write_graph(g: Graph, labels=None, spec_echo: Optional[dict] = None) -> bytes:
    """Serialize a graph canonically: header, then each edge once, smaller
    id first, sorted. Equal inputs produce identical bytes."""
    labels = identity_labels(g.vertex_count) if labels is None else tuple(labels)
    if len(labels) != g.vertex_count:
        raise ValueError(
            f"label map covers {len(labels)} vertices, graph has {g.vertex_count}"
        )
    lines = [f"# n={g.vertex_count} m={g.edge_count}"]
    if spec_echo is not None:
        lines.append("# spec " + json.dumps(spec_echo, sort_keys=True, separators=(",", ":")))
    for v in range(g.vertex_count):
        for w in g.adjacency[v]:
            if w > v:
                lines.append(f"{labels[v]} {labels[w]}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_graph(data) -> tuple[Graph, tuple]:
    """Paired reader for :func:`write_graph` output.

    Requires the canonical header and integer labels below the declared
    vertex count, so ids (and isolated vertices) survive the round trip
    exactly. For arbitrary third-party edge lists use :func:`read_edge_list`.
    """
    text = _as_text(data)
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = _HEADER_RE.match(line)
            if header and n is None:
                n, m = int(header.group(1)), int(header.group(2))
            continue
        if n is None:
            raise ValueError("missing canonical '# n=.. m=..' header before edges")
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected two labels, got {len(tokens)}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(
                f"line {lineno}: non-integer label {tokens!r}; use read_edge_list"
            ) from None
        if a == b:
            raise ValueError(f"line {lineno}: self-loop on {a}")
        edges.append((a, b))
    if n is None:
        raise ValueError("missing canonical '# n=.. m=..' header")
    g = build_graph(n, edges)
    if g.edge_count != m:
        raise ValueError(f"header declares m={m} but file carries {g.edge_count} edges")
    return g, identity_labels(n)


def write_communities(
    cs: CommunitySet,
    labels=None,
    fmt: str = "tsv",
    graph: Optional[Graph] = None,
    params: Optional[dict] = None,
    invocation: Optional[dict] = None,
) -> bytes:
    """Serialize a community set.

    tsv: one community per line, tab-separated member labels, canonical
    order. structured: JSON lines with a self-describing header record
    (schema tag, count, optional parameters and invocation), then one record
    per community carrying per-community stats when a graph is supplied.
    Both round-trip losslessly through :func:`read_communities`.
    """
    if fmt not in COMMUNITY_FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {COMMUNITY_FORMATS}")
    lab = (lambda v: str(v)) if labels is None else (lambda v: labels[v])
    if fmt == "tsv":
        lines = ["\t".join(lab(v) for v in community) for community in cs]
        return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
    header: dict = {"schema": _SCHEMA_COMMUNITIES, "count": len(cs)}
    if params is not None:
        header["params"] = params
    if invocation is not None:
        header["invocation"] = invocation
    records = [json.dumps(header, sort_keys=True, separators=(",", ":"))]
    for community in cs:
        rec: dict = {"members": [lab(v) for v in community], "size": len(community)}
        if graph is not None:
            stats = induced_stats(graph, community)
            rec.update(
                internal_edges=stats.internal_edges,
                min_degree=stats.min_internal_degree,
                max_degree=stats.max_internal_degree,
                density=float(stats.density),
                connected=stats.connected,
            )
        records.append(json.dumps(rec, sort_keys=True, separators=(",", ":")))
    return ("\n".join(records) + "\n").encode("utf-8")


def read_communities(data, labels=None, fmt: str = "tsv") -> CommunitySet:
    """Paired reader for :func:`write_communities` output."""
    if fmt not in COMMUNITY_FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {COMMUNITY_FORMATS}")
    text = _as_text(data)
    if labels is None:
        to_id = int
    else:
        inverse = {tok: v for v, tok in enumerate(labels)}

        def to_id(tok: str) -> int:
            try:
                return inverse[tok]
            except KeyError:
                raise ValueError(f"unknown label {tok!r}") from None
    subsets = []
    if fmt == "tsv":
        for raw in text.splitlines():
            if not raw.strip():
                continue
            subsets.append(tuple(to_id(tok) for tok in raw.split("\t")))
        return CommunitySet.from_iterable(subsets)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return CommunitySet.from_iterable([])
    header = json.loads(lines[0])
    if header.get("schema") != _SCHEMA_COMMUNITIES:
        raise ValueError(f"unexpected schema {header.get('schema')!r}")
    for ln in lines[1:]:
        rec = json.loads(ln)
        subsets.append(tuple(to_id(tok) for tok in rec["members"]))
    return CommunitySet.from_iterable(subsets)


def write_partition(p: Partition, labels=None) -> bytes:
    """One line per vertex: label, tab, block index."""
    lab = (lambda v: str(v)) if labels is None else (lambda v: labels[v])
    lines = [f"{lab(v)}\t{b}" for v, b in enumerate(p.block_of)]
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_partition(data, labels) -> Partition:
    """Parse a 'label TAB block-index' file covering every vertex exactly once.

    Arbitrary block indices are accepted and compacted to 0..k-1 in order of
    first occurrence by vertex id.
    """
    text = _as_text(data)
    inverse = {tok: v for v, tok in enumerate(labels)}
    raw_block: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split("\t") if "\t" in line else line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'label<TAB>block'")
        tok, block = tokens
        if tok not in inverse:
            raise ValueError(f"line {lineno}: unknown label {tok!r}")
        v = inverse[tok]
        if v in raw_block:
            raise ValueError(f"line {lineno}: duplicate assignment for {tok!r}")
        try:
            raw_block[v] = int(block)
        except ValueError:
            raise ValueError(f"line {lineno}: block index {block!r} is not an integer") from None
    if len(raw_block) != len(labels):
        missing = [tok for tok, v in inverse.items() if v not in raw_block]
        raise ValueError(f"partition misses {len(missing)} vertices (e.g. {missing[:3]})")
    remap: dict = {}
    block_of = []
    for v in range(len(labels)):
        b = raw_block[v]
        if b not in remap:
            remap[b] = len(remap)
        block_of.append(remap[b])
    return Partition.from_assignment(block_of)
