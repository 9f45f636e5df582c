"""Command-line interface: ``strongdim {sdim,oracle,verify,srgraph,decompose,generate}``.

Exit codes: 0 success, 1 verification failed, 2 parse/usage error,
3 disconnected input, 4 vertex cover search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decomposition import build_decomposition_tree
from .errors import BudgetExceeded, Disconnected, ParseError, SizeTooSmall, StrongDimError, UnknownVertex
from .frame import solve
from .generate import generate_instances, parse_components
from .graph import is_connected
from .io import decomposition_dot, format_edge_list, graph_dot, read_edge_list
from .resolver import is_strong_resolving_set
from .srgraph import strong_resolving_graph
from .vertex_cover import min_vertex_cover

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_BUDGET = 4


def _load_connected(path):
    g = read_edge_list(path)
    if not is_connected(g):
        raise Disconnected(f"{path}: graph is not connected")
    return g


def _emit(report: dict, as_json: bool, out):
    if as_json:
        json.dump(report, out, indent=2)
        out.write("\n")
        return
    out.write(f"dimension: {report['dimension']}\n")
    out.write(f"set: {' '.join(report['set'])}\n")
    if report["components"]:
        out.write("components:\n")
        for c in report["components"]:
            out.write(f"  [{c['class']}] {' '.join(c['vertices'])}: mvc={c['mvc']} chosen_j={c['chosen_j']}\n")


def cmd_sdim(args, out):
    g = _load_connected(args.input)
    summary = solve(g, budget=args.budget)
    report = {
        "dimension": summary.dimension,
        "set": summary.resolving_set,
        "components": [
            {"class": t.kind, "mvc": t.mvc, "chosen_j": t.chosen_j, "vertices": t.vertices}
            for t in summary.trace
        ],
    }
    _emit(report, args.json, out)
    return 0


def cmd_oracle(args, out):
    g = _load_connected(args.input)
    cover = min_vertex_cover(strong_resolving_graph(g), args.budget)
    _emit({"dimension": cover.size, "set": cover.labels(g), "components": []}, args.json, out)
    return 0


def cmd_verify(args, out):
    g = _load_connected(args.input)
    labels = [x for chunk in args.set for x in chunk.split(",") if x]
    ok, pair = is_strong_resolving_set(g, g.ids(labels))
    if ok:
        out.write("OK\n")
        return 0
    out.write(f"FAIL {g.labels[pair[0]]} {g.labels[pair[1]]}\n")
    return EXIT_FAIL


def cmd_srgraph(args, out):
    g = _load_connected(args.input)
    out.write(graph_dot(strong_resolving_graph(g), "SR"))
    return 0


def cmd_decompose(args, out):
    g = _load_connected(args.input)
    out.write(decomposition_dot(build_decomposition_tree(g)))
    return 0


def cmd_generate(args, out):
    try:
        specs = parse_components(args.components)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    instances = generate_instances(specs, args.count, args.seed, args.max_components, args.max_vertices)
    if args.out is None:
        if args.count != 1:
            raise ParseError("--out is required when --count > 1")
        inst = instances[0]
        out.write(format_edge_list(inst.graph, json.dumps(inst.metadata(), sort_keys=True)))
        return 0
    os.makedirs(args.out, exist_ok=True)
    for k, inst in enumerate(instances):
        stem = os.path.join(args.out, f"instance_{k:04d}")
        with open(stem + ".txt", "w", encoding="utf-8") as fh:
            fh.write(format_edge_list(inst.graph, f"strongdim instance seed={inst.seed}"))
        with open(stem + ".json", "w", encoding="utf-8") as fh:
            json.dump(inst.metadata(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    out.write(f"wrote {len(instances)} instance(s) to {args.out}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="edge-list file")
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (("sdim", cmd_sdim, "strong metric dimension via block decomposition"),
                              ("oracle", cmd_oracle, "brute force: exact cover of the strong resolving graph")):
        p = with_input(name, func, help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--budget", type=int, default=None, help="vertex cover search-node limit")

    p = with_input("verify", cmd_verify, "check a strong resolving set")
    p.add_argument("set", nargs="+", help="vertex labels (space or comma separated)")

    with_input("srgraph", cmd_srgraph, "DOT of the strong resolving graph")
    with_input("decompose", cmd_decompose, "DOT of the block / separation-vertex tree")

    p = sub.add_parser("generate", help="seeded composed test instances")
    p.add_argument("--components", required=True, help="e.g. cycle:3-9,grid:2x2-3x3,cograph:8,random:7")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=lambda s: int(s, 0) & (2**64 - 1), default=0, help="64-bit seed")
    p.add_argument("--max-components", type=int, default=None,
                   help="sample 1..K components from the list instead of using each once")
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--out", default=None, help="directory for instance_NNNN.{txt,json}")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, UnknownVertex, SizeTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Disconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except StrongDimError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
