"""Command line front end.

Verbs mirror the library: ``sparsity check``, ``orient
bounded|antisym|hom``, ``tree dfst|priority``, ``order
edges|neighbourhoods``, ``flow delta|paths|check``, ``encode refine``
and ``suite oracle|lemmas|pipeline``.

Exit codes: 0 success, 1 domain error (report starts with
``ERROR <code>``), 2 usage or input-parse error.  All output is
deterministic given identical inputs and seed.
"""

from __future__ import annotations

import argparse
import sys

from . import flows, sparsity, spanning, suites
from .core import (
    as_graph,
    parse_digraph,
    parse_hypergraph,
    serialize_orientation,
)
from .encoding import (
    parse_set_function,
    refine_to_injective,
    serialize_gmap,
    serialize_set_function,
)
from .errors import ParseError, SparseHGError


class _Abort(Exception):
    """Early exit with a fully formatted report."""

    def __init__(self, exit_code: int, lines):
        super().__init__(lines[0] if lines else "")
        self.exit_code = exit_code
        self.lines = lines


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _Abort(2, ["ERROR IO", f"detail {exc}"]) from None


def _load_hypergraph(path: str):
    return parse_hypergraph(_read(path))


def _load_graph(path: str):
    return as_graph(parse_hypergraph(_read(path)))


def _witness_line(labels, witness) -> str:
    return "witness " + " ".join(labels[v] for v in witness)


def _not_sparse(code: str, labels, witness) -> _Abort:
    return _Abort(1, [f"ERROR {code}", _witness_line(labels, witness)])


# --- verb handlers ----------------------------------------------------------


def _cmd_sparsity_check(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    if args.oracle:
        report = sparsity.is_k_sparse_bruteforce(h, args.k, cap=args.cap)
        method = "bruteforce"
    else:
        report = sparsity.is_k_sparse(h, args.k)
        method = "flow"
    if not report.is_sparse:
        raise _not_sparse("NotKSparse", h.vertex_labels, report.witness)
    return [f"ok {args.k}-sparse method={method}"]


def _orientation_lines(f) -> list[str]:
    return serialize_orientation(f).splitlines()


def _cmd_orient_bounded(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    try:
        f = sparsity.bounded_orientation(h, args.k)
    except SparseHGError as exc:
        if getattr(exc, "witness", None) is not None:
            raise _not_sparse(exc.code, h.vertex_labels, exc.witness)
        raise
    return _orientation_lines(f)


def _cmd_orient_antisym(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    try:
        f = sparsity.antisymmetric_orientation(h, args.k)
    except SparseHGError as exc:
        if getattr(exc, "witness", None) is not None:
            raise _not_sparse(exc.code, h.vertex_labels, exc.witness)
        raise
    return _orientation_lines(f)


def _cmd_orient_hom(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    target = parse_digraph(_read(args.target))
    try:
        f = sparsity.antisymmetric_orientation(h, args.k)
    except SparseHGError as exc:
        if getattr(exc, "witness", None) is not None:
            raise _not_sparse(exc.code, h.vertex_labels, exc.witness)
        raise
    quotient = sparsity.directed_quotient(f)
    mapping = sparsity.find_homomorphism(quotient, target)
    return [
        f"{h.vertex_labels[v]} -> {target.vertex_labels[mapping[v]]}"
        for v in range(h.num_vertices)
    ]


def _cmd_tree_dfst(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    root = _resolve_vertex(h, args.root) if args.root is not None else 0
    tree = spanning.build_dfst(h, root)
    lines = []
    for v in tree.nodes:
        parent = tree.parent[v]
        kind, level = tree.vertex_types[v]
        attach = ",".join(
            h.edge_labels[e] for e in sorted(tree.attach_edges[v])
        )
        aux = ",".join(h.vertex_labels[w] for w in sorted(tree.aux_sets[v]))
        lines.append(
            f"{h.vertex_labels[v]}"
            f" parent={h.vertex_labels[parent] if parent is not None else '-'}"
            f" type={kind}{level}"
            f" F={attach or '-'}"
            f" A={aux or '-'}"
        )
    return lines


def _cmd_tree_priority(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    root = _resolve_vertex(h, args.root) if args.root is not None else 0
    targets = [_resolve_edge(h, label) for label in args.leaves.split(",")]
    tree = spanning.build_priority_tree(h, root, targets, m=args.m)
    lines = []
    for edges, cls in tree.construction_log:
        glued = ",".join(h.edge_labels[e] for e in edges)
        lines.append(f"glued {glued} class {cls}")
    for cls, members in enumerate(tree.vertex_classes):
        if members:
            names = " ".join(h.vertex_labels[v] for v in sorted(members))
            lines.append(f"P{cls} {names}")
    lines.append(
        "L " + ",".join(h.edge_labels[e] for e in tree.leaf_edges)
    )
    return lines


def _cmd_order_edges(args) -> list[str]:
    h = _load_hypergraph(args.hypergraph)
    ordering = spanning.edge_ordering(h)
    return [
        f"{h.edge_labels[ei]} "
        + " ".join(h.vertex_labels[v] for v in ordering[ei])
        for ei in range(h.num_edges)
    ]


def _cmd_order_neighbourhoods(args) -> list[str]:
    g = parse_digraph(_read(args.digraph))
    ordering = spanning.neighbourhood_ordering(g)
    lines = []
    for v in g.vertices():
        names = " ".join(g.vertex_labels[w] for w in ordering[v])
        lines.append(f"{g.vertex_labels[v]}{' ' + names if names else ''}")
    return lines


def _cmd_flow_delta(args) -> list[str]:
    g = _load_graph(args.graph)
    d = flows.parse_distribution(_read(args.dist), g)
    try:
        f = flows.compute_delta_flow(g, d, args.k)
    except SparseHGError as exc:
        if getattr(exc, "witness", None) is not None:
            raise _not_sparse(exc.code, g.vertex_labels, exc.witness)
        raise
    return flows.serialize_flow(f).splitlines()


def _cmd_flow_paths(args) -> list[str]:
    g = _load_graph(args.graph)
    d = flows.parse_distribution(_read(args.dist), g)
    if args.flow is not None:
        f = flows.parse_flow(_read(args.flow), g)
    else:
        try:
            f = flows.compute_delta_flow(g, d, args.k)
        except SparseHGError as exc:
            if getattr(exc, "witness", None) is not None:
                raise _not_sparse(exc.code, g.vertex_labels, exc.witness)
            raise
    acyclic = flows.cancel_cycles(f)
    family = flows.decompose_flow_paths(g, acyclic, d)
    return [
        "path " + " ".join(g.vertex_labels[v] for v in path)
        for path in family.paths
    ]


def _cmd_flow_check(args) -> list[str]:
    g = _load_graph(args.graph)
    d = flows.parse_distribution(_read(args.dist), g)
    f = flows.parse_flow(_read(args.flow), g)
    if not flows.check_delta_flow(f, d):
        raise _Abort(
            1, ["ERROR InvalidFlow", "detail defect does not match delta - 1"]
        )
    edge_bound, vertex_bound = flows.bounds(f)
    return [
        "ok delta-flow",
        f"edge-bound {edge_bound}",
        f"vertex-bound {vertex_bound}",
    ]


def _cmd_encode_refine(args) -> list[str]:
    g = _load_graph(args.graph)
    h = parse_set_function(_read(args.sets), g)
    try:
        h0, gmap = refine_to_injective(g, h, args.k)
    except SparseHGError as exc:
        if getattr(exc, "witness", None) is not None:
            raise _not_sparse(exc.code, g.vertex_labels, exc.witness)
        raise
    lines = ["# h0"]
    lines.extend(serialize_set_function(h0, g).splitlines())
    lines.append("# gmap")
    lines.extend(serialize_gmap(gmap, g).splitlines())
    return lines


def _cmd_suite(args) -> list[str]:
    sizes = suites.parse_sizes(args.sizes, args.name)
    return suites.run_suite(args.name, args.seed, args.n, sizes)


def _resolve_vertex(h, label: str) -> int:
    try:
        return h.vertex_id(label)
    except KeyError:
        raise _Abort(2, ["ERROR UndeclaredVertex", f"detail unknown vertex {label!r}"]) from None


def _resolve_edge(h, label: str) -> int:
    try:
        return h.edge_id(label.strip())
    except KeyError:
        raise _Abort(2, ["ERROR UndeclaredVertex", f"detail unknown edge {label!r}"]) from None


# --- parser -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsehg",
        description="Sparse hypergraph orientations, spanning structures, "
        "flows and set encodings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=None,
                        help="write the report to this file")
    groups = parser.add_subparsers(dest="group", required=True)

    sparsity_p = groups.add_parser("sparsity", help="sparsity decisions")
    sparsity_sub = sparsity_p.add_subparsers(dest="verb", required=True)
    check = sparsity_sub.add_parser("check", help="decide k-sparsity",
                                    parents=[common])
    check.add_argument("hypergraph")
    check.add_argument("--k", type=int, required=True)
    check.add_argument("--oracle", action="store_true",
                       help="use the subset-enumeration oracle")
    check.add_argument("--cap", type=int, default=20,
                       help="vertex cap for the oracle")
    check.set_defaults(handler=_cmd_sparsity_check)

    orient_p = groups.add_parser("orient", help="edge orientations")
    orient_sub = orient_p.add_subparsers(dest="verb", required=True)
    bounded = orient_sub.add_parser("bounded", help="preimages bounded by k", parents=[common])
    bounded.add_argument("hypergraph")
    bounded.add_argument("--k", type=int, required=True)
    bounded.set_defaults(handler=_cmd_orient_bounded)
    antisym = orient_sub.add_parser(
        "antisym", help="antisymmetric quotient, preimages within m*k^2"
    , parents=[common])
    antisym.add_argument("hypergraph")
    antisym.add_argument("--k", type=int, required=True)
    antisym.set_defaults(handler=_cmd_orient_antisym)
    hom = orient_sub.add_parser(
        "hom", help="homomorphism of the oriented quotient into a digraph"
    , parents=[common])
    hom.add_argument("hypergraph")
    hom.add_argument("--k", type=int, required=True)
    hom.add_argument("--target", required=True, help="digraph file")
    hom.set_defaults(handler=_cmd_orient_hom)

    tree_p = groups.add_parser("tree", help="spanning structures")
    tree_sub = tree_p.add_subparsers(dest="verb", required=True)
    dfst = tree_sub.add_parser("dfst", help="depth-first spanning tree", parents=[common])
    dfst.add_argument("hypergraph")
    dfst.add_argument("--root", help="root vertex label (default least id)")
    dfst.set_defaults(handler=_cmd_tree_dfst)
    prio = tree_sub.add_parser("priority", help="priority tree", parents=[common])
    prio.add_argument("hypergraph")
    prio.add_argument("--root", help="root vertex label (default least id)")
    prio.add_argument("--leaves", required=True,
                      help="comma-separated target edge labels")
    prio.add_argument("--m", type=int, default=None,
                      help="number of classes (default: rank)")
    prio.set_defaults(handler=_cmd_tree_priority)

    order_p = groups.add_parser("order", help="derived linear orders")
    order_sub = order_p.add_subparsers(dest="verb", required=True)
    edges = order_sub.add_parser("edges", help="order each edge's members", parents=[common])
    edges.add_argument("hypergraph")
    edges.set_defaults(handler=_cmd_order_edges)
    nbhd = order_sub.add_parser(
        "neighbourhoods", help="order each in-neighbourhood of a digraph"
    , parents=[common])
    nbhd.add_argument("digraph")
    nbhd.set_defaults(handler=_cmd_order_neighbourhoods)

    flow_p = groups.add_parser("flow", help="distribution flows")
    flow_sub = flow_p.add_subparsers(dest="verb", required=True)
    delta = flow_sub.add_parser("delta", help="compute a delta-flow", parents=[common])
    delta.add_argument("graph")
    delta.add_argument("--k", type=int, required=True)
    delta.add_argument("--dist", required=True, help="distribution file")
    delta.set_defaults(handler=_cmd_flow_delta)
    paths = flow_sub.add_parser("paths", help="decompose into paths", parents=[common])
    paths.add_argument("graph")
    paths.add_argument("--k", type=int, default=1)
    paths.add_argument("--dist", required=True)
    paths.add_argument("--flow", help="flow file (default: compute)")
    paths.set_defaults(handler=_cmd_flow_paths)
    fcheck = flow_sub.add_parser("check", help="verify a delta-flow", parents=[common])
    fcheck.add_argument("graph")
    fcheck.add_argument("--dist", required=True)
    fcheck.add_argument("--flow", required=True)
    fcheck.set_defaults(handler=_cmd_flow_check)

    encode_p = groups.add_parser("encode", help="set-by-vertex encodings")
    encode_sub = encode_p.add_subparsers(dest="verb", required=True)
    refine = encode_sub.add_parser(
        "refine", help="make a set-to-vertex map injective"
    , parents=[common])
    refine.add_argument("graph")
    refine.add_argument("--k", type=int, required=True)
    refine.add_argument("--sets", required=True, help="set-function file")
    refine.set_defaults(handler=_cmd_encode_refine)

    suite = groups.add_parser("suite", help="seeded verification suites",
                              parents=[common])
    suite.add_argument("name", choices=("oracle", "lemmas", "pipeline"))
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--n", type=int, default=10,
                       help="instances per size")
    suite.add_argument("--sizes",
                       help="comma-separated vertex counts (empty for none)")
    suite.set_defaults(handler=_cmd_suite)

    return parser


def run(argv, out=None) -> int:
    """Execute one command line; returns the exit code."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        lines = args.handler(args)
        code = 0
    except _Abort as abort:
        lines = abort.lines
        code = abort.exit_code
    except ParseError as exc:
        lines = [f"ERROR {exc.code}", f"detail {exc}"]
        code = 2
    except SparseHGError as exc:
        lines = [f"ERROR {exc.code}", f"detail {exc}"]
        code = 1
    except ValueError as exc:
        # bad user-supplied numbers (k <= 0, malformed counts)
        lines = ["ERROR Usage", f"detail {exc}"]
        code = 2
    text = "".join(line + "\n" for line in lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        out.write(text)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
