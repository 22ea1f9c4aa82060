"""Command-line interface.

Subcommands: cliques, quasicliques, modularity, generate, sweep, compare.
Exit codes: 0 success, 1 usage error, 2 data error. Output bytes are a pure
function of input bytes, flags, and seed; --threads affects wall time only.
Decimal relaxation parameters are parsed to exact rationals (0.75 -> 3/4)
before any threshold computation, and every structured output embeds the
full invocation for auditability.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cliques import enumerate_maximal_cliques
from .generate import configuration_model, gnp, planted_quasi_clique, ring_of_cliques
from .graphio import (
    read_edge_list,
    read_graph,
    write_communities,
    write_graph,
    write_partition,
    read_partition,
)
from .metrics import (
    COVER_POLICIES,
    QuasiCliqueParams,
    cover_to_partition,
    exact_fraction,
    modularity,
)
from .quasi import enumerate_maximal_quasi_cliques, sweep

__all__ = ["main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ratio(text: str) -> Fraction:
    try:
        value = exact_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a ratio: {text!r} ({exc})")
    if not (0 < value <= 1):
        raise argparse.ArgumentTypeError(f"must be in (0, 1], got {text}")
    return value


def _ratio_list(text: str) -> list:
    items = [tok for tok in text.split(",") if tok.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty list")
    return [_ratio(tok.strip()) for tok in items]


def _int_list(text: str) -> list:
    try:
        return [int(tok.strip()) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r} ({exc})")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> _Parser:
    parser = _Parser(prog="qcliques", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cliques", help="enumerate all maximal cliques")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--min-size", type=_positive_int, default=1)
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--format", choices=("tsv", "structured"), default="tsv")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=_cmd_cliques)

    p = sub.add_parser("quasicliques", help="enumerate all maximal quasi-cliques")
    p.add_argument("--input", required=True)
    p.add_argument("--lambda", dest="lam", type=_ratio, required=True,
                   help="minimum-degree ratio in (0,1]")
    p.add_argument("--gamma", type=_ratio, required=True, help="density ratio in (0,1]")
    p.add_argument("--min-size", type=_positive_int, default=3)
    p.add_argument("--require-connected", action="store_true")
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--format", choices=("tsv", "structured"), default="tsv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_quasicliques)

    p = sub.add_parser("modularity", help="score a partition")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True, help="'label TAB block' file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_modularity)

    p = sub.add_parser("generate", help="generate a synthetic graph")
    p.add_argument("--model", choices=("gnp", "config", "ring", "planted"), required=True)
    p.add_argument("--n", type=int, default=None, help="vertex count (gnp, planted)")
    p.add_argument("--p", type=float, default=None, help="edge probability (gnp)")
    p.add_argument("--degrees", type=_int_list, default=None, help="degree sequence (config)")
    p.add_argument("--cliques", type=int, default=None, help="clique count (ring)")
    p.add_argument("--size", type=int, default=None, help="clique size (ring)")
    p.add_argument("--background-p", type=float, default=None, help="background probability (planted)")
    p.add_argument("--plant", action="append", default=None, metavar="SIZE:LAMBDA:GAMMA",
                   help="plant spec, repeatable (planted)")
    p.add_argument("--seed", type=int, default=None, help="random seed (gnp, config, planted)")
    p.add_argument("--out", default=None)
    p.add_argument("--truth-out", default=None, help="write ground-truth communities (tsv)")
    p.add_argument("--partition-out", default=None, help="write the natural partition")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sweep", help="enumerate over a parameter grid")
    p.add_argument("--input", required=True)
    p.add_argument("--lambdas", type=_ratio_list, required=True, help="comma-separated list")
    p.add_argument("--gammas", type=_ratio_list, required=True)
    p.add_argument("--min-size", type=_positive_int, default=3)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="quasi-clique cover vs. modularity, side by side")
    p.add_argument("--input", required=True)
    p.add_argument("--lambda", dest="lam", type=_ratio, required=True)
    p.add_argument("--gamma", type=_ratio, required=True)
    p.add_argument("--min-size", type=_positive_int, default=3)
    p.add_argument("--threads", type=_positive_int, default=1)
    p.add_argument("--policy", choices=COVER_POLICIES, default="most-neighbors")
    p.add_argument("--partition", default=None, help="optional partition to score as well")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qcliques: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"qcliques: error: {exc}", file=sys.stderr)
        return 2


# ------------------------------------------------------------------ helpers


def _load_graph(path: str):
    with open(path, "rb") as fh:
        data = fh.read()
    head = data.lstrip()[:4]
    if head.startswith(b"# n="):
        return read_graph(data)
    return read_edge_list(data)


def _emit(data: bytes, out_path) -> None:
    if out_path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(out_path, "wb") as fh:
            fh.write(data)


def _invocation(args) -> dict:
    record = {}
    for key, value in sorted(vars(args).items()):
        if key == "func" or value is None:
            continue
        if isinstance(value, Fraction):
            value = str(value)
        elif isinstance(value, list):
            value = [str(x) if isinstance(x, Fraction) else x for x in value]
        record[key] = value
    return record


def _json_doc(payload: dict) -> bytes:
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode("utf-8")


def _cover_summary(cs, n: int) -> dict:
    covered: set = set()
    total = 0
    sizes: dict = {}
    for c in cs:
        covered.update(c)
        total += len(c)
        sizes[len(c)] = sizes.get(len(c), 0) + 1
    return {
        "count": len(cs),
        "size_histogram": {str(k): sizes[k] for k in sorted(sizes)},
        "coverage": len(covered) / n if n else 0.0,
        "mean_overlap": total / len(covered) if covered else 0.0,
    }


# --------------------------------------------------------------- subcommands


def _cmd_cliques(args) -> int:
    g, labels = _load_graph(args.input)
    cs = enumerate_maximal_cliques(g, min_size=args.min_size, workers=args.threads)
    data = write_communities(
        cs,
        labels,
        fmt=args.format,
        graph=g if args.format == "structured" else None,
        params={"min_size": args.min_size},
        invocation=_invocation(args) if args.format == "structured" else None,
    )
    _emit(data, args.out)
    return 0


def _cmd_quasicliques(args) -> int:
    g, labels = _load_graph(args.input)
    params = QuasiCliqueParams(
        lam=args.lam,
        gamma=args.gamma,
        min_size=args.min_size,
        require_connected=args.require_connected,
    )
    cs = enumerate_maximal_quasi_cliques(g, params, workers=args.threads)
    data = write_communities(
        cs,
        labels,
        fmt=args.format,
        graph=g if args.format == "structured" else None,
        params={
            "lambda": str(params.lam),
            "gamma": str(params.gamma),
            "min_size": params.min_size,
            "require_connected": params.require_connected,
        },
        invocation=_invocation(args) if args.format == "structured" else None,
    )
    _emit(data, args.out)
    return 0


def _cmd_modularity(args) -> int:
    g, labels = _load_graph(args.input)
    with open(args.partition, "rb") as fh:
        p = read_partition(fh.read(), labels)
    report = modularity(g, p)
    payload = {
        "schema": "qcliques.modularity/1",
        "invocation": _invocation(args),
        "n": g.vertex_count,
        "m": g.edge_count,
        "block_count": p.block_count,
        "q": report.q,
        "per_block": [
            {"internal_edge_fraction": e, "squared_degree_fraction": d}
            for e, d in report.per_block
        ],
    }
    _emit(_json_doc(payload), args.out)
    return 0


def _require(args, names: list) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--model {args.model} requires {', '.join(missing)}")


def _cmd_generate(args) -> int:
    if args.model == "gnp":
        _require(args, ["n", "p", "seed"])
        result = gnp(args.n, args.p, args.seed)
    elif args.model == "config":
        _require(args, ["degrees", "seed"])
        result = configuration_model(args.degrees, args.seed)
    elif args.model == "ring":
        _require(args, ["cliques", "size"])
        result = ring_of_cliques(args.cliques, args.size)
    else:
        _require(args, ["n", "background_p", "plant", "seed"])
        plants = []
        for spec in args.plant:
            parts = spec.split(":")
            if len(parts) != 3:
                raise UsageError(f"--plant expects SIZE:LAMBDA:GAMMA, got {spec!r}")
            try:
                plants.append((int(parts[0]), exact_fraction(parts[1]), exact_fraction(parts[2])))
            except (ValueError, TypeError) as exc:
                raise UsageError(f"bad --plant {spec!r}: {exc}")
        result = planted_quasi_clique(args.n, args.background_p, plants, args.seed)
    _emit(write_graph(result.graph, spec_echo=result.spec_echo), args.out)
    if args.truth_out is not None:
        if result.ground_truth is None:
            raise UsageError(f"model {args.model} has no ground truth")
        _emit(write_communities(result.ground_truth, fmt="tsv"), args.truth_out)
    if args.partition_out is not None:
        if result.natural_partition is None:
            raise UsageError(f"model {args.model} has no natural partition")
        _emit(write_partition(result.natural_partition), args.partition_out)
    return 0


def _cmd_sweep(args) -> int:
    g, _ = _load_graph(args.input)
    cells = sweep(g, args.lambdas, args.gammas, min_size=args.min_size)
    header = {
        "schema": "qcliques.sweep/1",
        "invocation": _invocation(args),
        "n": g.vertex_count,
        "m": g.edge_count,
        "cells": len(cells),
    }
    lines = [json.dumps(header, sort_keys=True, separators=(",", ":"))]
    for cell in cells:
        lines.append(
            json.dumps(
                {
                    "lambda": str(cell.lam),
                    "gamma": str(cell.gamma),
                    "lambda_float": float(cell.lam),
                    "gamma_float": float(cell.gamma),
                    "min_size": cell.min_size,
                    "count": cell.community_count,
                    "size_histogram": {str(k): v for k, v in cell.size_histogram.items()},
                    "coverage": cell.coverage,
                    "mean_overlap": cell.mean_overlap,
                },
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    _emit(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_compare(args) -> int:
    g, labels = _load_graph(args.input)
    params = QuasiCliqueParams(lam=args.lam, gamma=args.gamma, min_size=args.min_size)
    cs = enumerate_maximal_quasi_cliques(g, params, workers=args.threads)
    payload = {
        "schema": "qcliques.compare/1",
        "invocation": _invocation(args),
        "n": g.vertex_count,
        "m": g.edge_count,
        "quasi_cliques": _cover_summary(cs, g.vertex_count),
        "params": {
            "lambda": str(params.lam),
            "gamma": str(params.gamma),
            "min_size": params.min_size,
        },
    }
    if len(cs) > 0 or g.vertex_count > 0:
        cover_part = cover_to_partition(g, cs, policy=args.policy)
        cover_report = modularity(g, cover_part)
        payload["cover_partition"] = {
            "policy": args.policy,
            "block_count": cover_part.block_count,
            "q": cover_report.q,
        }
    if args.partition is not None:
        with open(args.partition, "rb") as fh:
            supplied = read_partition(fh.read(), labels)
        supplied_report = modularity(g, supplied)
        payload["supplied_partition"] = {
            "block_count": supplied.block_count,
            "q": supplied_report.q,
        }
    _emit(_json_doc(payload), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
