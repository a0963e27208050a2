"""Command-line front end.

Subcommands read and write the shared JSON formats on files or standard
streams ("-" means stdin).  Exit codes: 0 success, 1 malformed input,
2 verification or decomposition rejection, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, List, Optional

from . import bounds as bounds_mod
from . import generators
from .immersion import ABSENT, BUDGET, FOUND, find_immersion, verify_immersion
from .jsonio import (
    cut_witness_to_json,
    failure_to_json,
    graph_from_json,
    graph_to_json,
    immersion_from_json,
    immersion_to_json,
    linearity_from_json,
    linearity_to_json,
    structure_from_json,
    structure_to_json,
    torso_to_json,
    treecut_from_json,
)
from .multigraph import Multigraph
from .pathdecomp import FailureWitness, linear_decompose, verify_linear_certificate
from .treecut import edge_sum, structure_decompose, torso_at, verify_structure

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_REJECTED = 2
EXIT_BUDGET = 3


def _read_json(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _read_graph(path: str) -> Multigraph:
    return graph_from_json(_read_json(path))


def _emit(obj: Any) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _parse_W(spec: str, G: Multigraph) -> frozenset:
    if spec == "all":
        return G.vertices
    W = frozenset(x for x in spec.split(",") if x)
    unknown = W - G.vertices
    if unknown:
        raise ValueError(f"unknown vertices in --W: {sorted(unknown)}")
    return W


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "pk":
        G = generators.gen_pk(args.k)
    elif args.family == "pk-chorded":
        G = generators.gen_pk_chorded(args.k)
    elif args.family == "complete":
        G = generators.gen_complete(args.n)
    else:
        G = generators.gen_random_multigraph(
            args.n, args.edges, args.max_multiplicity, args.seed
        )
    _emit(graph_to_json(G))
    return EXIT_OK


def _cmd_find_immersion(args: argparse.Namespace) -> int:
    G = _read_graph(args.host)
    H = _read_graph(args.pattern)
    result = find_immersion(G, H, strong=args.strong, budget=args.budget)
    if result.status == BUDGET:
        _emit("budget")
        return EXIT_BUDGET
    if result.status == ABSENT:
        _emit("absent")
        return EXIT_OK
    _emit(immersion_to_json(result.certificate))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.artifact == "immersion":
        G = _read_graph(args.host)
        H = _read_graph(args.pattern)
        cert = immersion_from_json(_read_json(args.cert))
        bad = verify_immersion(G, H, cert)
    elif args.artifact == "linear":
        G = _read_graph(args.graph)
        W = _parse_W(args.W, G)
        cert = linearity_from_json(_read_json(args.cert))
        bad = verify_linear_certificate(G, W, cert, args.a, args.w, args.p)
    else:
        G = _read_graph(args.graph)
        result = structure_from_json(_read_json(args.structure))
        bad = verify_structure(
            G, result.decomposition, result.certificates, args.alpha
        )
    if bad:
        for msg in bad:
            print(msg, file=sys.stderr)
        return EXIT_REJECTED
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    if args.shape == "linear":
        W = _parse_W(args.W, G)
        result = linear_decompose(G, W, m=args.m, w_limit=args.w_limit)
        if isinstance(result, FailureWitness):
            _emit(failure_to_json(result))
            return EXIT_REJECTED
        _emit(linearity_to_json(result))
        return EXIT_OK
    result = structure_decompose(G, args.alpha)
    if isinstance(result, FailureWitness):
        _emit(failure_to_json(result))
        return EXIT_REJECTED
    _emit(structure_to_json(result))
    return EXIT_OK


def _cmd_edge_sum(args: argparse.Namespace) -> int:
    G1 = _read_graph(args.g1)
    G2 = _read_graph(args.g2)
    pi = _read_json(args.pi)
    if not isinstance(pi, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in pi.items()
    ):
        raise ValueError("--pi must be a JSON object mapping edge ids to edge ids")
    _emit(graph_to_json(edge_sum(G1, args.v1, G2, args.v2, pi)))
    return EXIT_OK


def _cmd_torso(args: argparse.Namespace) -> int:
    G = _read_graph(args.graph)
    D = treecut_from_json(_read_json(args.decomp))
    _emit(torso_to_json(torso_at(G, D, args.node)))
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    if args.quantity == "d-of-k":
        print(bounds_mod.d_of_k(args.k))
    elif args.quantity == "theorem31":
        c = bounds_mod.theorem31_constants(_read_graph(args.pattern))
        _emit(
            {
                field: getattr(c, field)
                for field in ("m", "a", "a0", "k", "s", "w0", "w", "p")
            }
        )
    elif args.quantity == "converse":
        print(bounds_mod.converse_n(args.d, args.a, args.w, args.p))
    else:
        print(bounds_mod.converse_n_alpha(args.alpha))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immtools",
        description="Multigraph immersion search, path-like and tree-cut "
        "decompositions, and their certificates.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker budget for independent flow computations (1 = serial)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a generated multigraph as JSON")
    gsub = gen.add_subparsers(dest="family", required=True)
    p = gsub.add_parser("pk", help="path with edges thickened to multiplicity k")
    p.add_argument("k", type=int)
    p = gsub.add_parser("pk-chorded", help="thickened path plus distance-two chords")
    p.add_argument("k", type=int)
    p = gsub.add_parser("complete", help="simple complete graph")
    p.add_argument("n", type=int)
    p = gsub.add_parser("random", help="seeded random multigraph")
    p.add_argument("n", type=int)
    p.add_argument("edges", type=int)
    p.add_argument("max_multiplicity", type=int)
    p.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=_cmd_gen)

    fi = sub.add_parser("find-immersion", help="search for an immersion certificate")
    fi.add_argument("--host", required=True)
    fi.add_argument("--pattern", required=True)
    fi.add_argument("--strong", action="store_true")
    fi.add_argument("--budget", type=int, default=None)
    fi.set_defaults(func=_cmd_find_immersion)

    ver = sub.add_parser("verify", help="check an emitted certificate")
    vsub = ver.add_subparsers(dest="artifact", required=True)
    p = vsub.add_parser("immersion")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--cert", required=True)
    p = vsub.add_parser("linear")
    p.add_argument("--graph", required=True)
    p.add_argument("--W", required=True, help='comma-separated vertices or "all"')
    p.add_argument("--cert", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p = vsub.add_parser("structure")
    p.add_argument("--graph", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--alpha", type=int, required=True)
    ver.set_defaults(func=_cmd_verify)

    dec = sub.add_parser("decompose", help="compute a decomposition certificate")
    dsub = dec.add_subparsers(dest="shape", required=True)
    p = dsub.add_parser("linear")
    p.add_argument("--graph", required=True)
    p.add_argument("--W", required=True, help='comma-separated vertices or "all"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--w-limit", dest="w_limit", type=int, required=True)
    p = dsub.add_parser("structure")
    p.add_argument("--graph", required=True)
    p.add_argument("--alpha", type=int, required=True)
    dec.set_defaults(func=_cmd_decompose)

    es = sub.add_parser("edge-sum", help="glue two graphs along matched boundary edges")
    es.add_argument("--g1", required=True)
    es.add_argument("--v1", required=True)
    es.add_argument("--g2", required=True)
    es.add_argument("--v2", required=True)
    es.add_argument("--pi", required=True, help="JSON object mapping edge ids")
    es.set_defaults(func=_cmd_edge_sum)

    to = sub.add_parser("torso", help="torso of a tree-cut decomposition at a node")
    to.add_argument("--graph", required=True)
    to.add_argument("--decomp", required=True)
    to.add_argument("--node", required=True)
    to.set_defaults(func=_cmd_torso)

    bo = sub.add_parser("bounds", help="quantitative constants as decimals")
    bsub = bo.add_subparsers(dest="quantity", required=True)
    p = bsub.add_parser("d-of-k")
    p.add_argument("k", type=int)
    p = bsub.add_parser("theorem31")
    p.add_argument("pattern")
    p = bsub.add_parser("converse")
    p.add_argument("d", type=int)
    p.add_argument("a", type=int)
    p.add_argument("w", type=int)
    p.add_argument("p", type=int)
    p = bsub.add_parser("converse-alpha")
    p.add_argument("alpha", type=int)
    bo.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
