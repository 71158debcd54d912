"""Depth-first spanning trees, priority trees and the orders they induce.

A depth-first spanning tree picks one tree node per absorbed vertex
group; the auxiliary sets A_v partition the vertex set and every edge
meets the tree in a chain.  A priority tree glues shortest hyperpath
suffixes toward chosen target edges, stratifying vertices into classes
P_0, P_1, ...  Both structures induce linear orders used elsewhere:
edge member orders, in-neighbourhood orders, and a linear order on the
priority tree's vertices.
"""

from sparsehg import (
    DirectedGraph,
    Hypergraph,
    aux_order,
    build_dfst,
    build_priority_tree,
    dfst_orientation,
    edge_ordering,
    neighbourhood_ordering,
    priority_tree_linear_order,
    validate_dfst,
    validate_priority_tree,
)


def banner(title: str) -> None:
    print(f"\n== {title} ==")


h = Hypergraph(
    ["a", "b", "c", "d", "e", "f"],
    [(0, 1, 2), (2, 3), (1, 3, 4), (4, 5), (0, 5)],
)

banner("depth-first spanning tree rooted at a")
tree = build_dfst(h, 0)
assert validate_dfst(h, tree) == []
for v in tree.nodes:
    parent = tree.parent[v]
    kind, level = tree.vertex_types[v]
    aux = ",".join(h.vertex_labels[w] for w in sorted(tree.aux_sets[v]))
    print(
        f"node {h.vertex_labels[v]}:"
        f" parent {h.vertex_labels[parent] if parent is not None else '-'},"
        f" type {kind}{level}, absorbs {{{aux}}}"
    )

banner("the auxiliary order ranks each edge's members")
order = aux_order(tree)
for ei, members in enumerate(h.edges):
    ranked = order.sorted(members)
    print(
        f"edge {ei}:",
        " <= ".join(h.vertex_labels[v] for v in ranked),
    )

banner("least member under that order orients each edge")
f = dfst_orientation(h)
for ei in range(h.num_edges):
    print(f"edge {ei} -> {h.vertex_labels[f.assignment[ei]]}")
print("per-edge orders:", edge_ordering(h))

banner("priority tree toward two target edges")
t = build_priority_tree(h, 0, [1, 3])
assert validate_priority_tree(h, t) == []
for edges, cls in t.construction_log:
    print(f"glued path {list(edges)} into class {cls}")
for cls, members in enumerate(t.vertex_classes):
    if members:
        names = " ".join(h.vertex_labels[v] for v in sorted(members))
        print(f"P{cls}: {names}")
linear = priority_tree_linear_order(t)
print(
    "linear order:",
    " <= ".join(h.vertex_labels[v] for v in linear.sorted(t.nodes)),
)

banner("in-neighbourhood orders of a digraph")
g = DirectedGraph(["x", "y", "z"], [(0, 1), (0, 2), (1, 2)])
for v, ranked in sorted(neighbourhood_ordering(g).items()):
    names = " ".join(g.vertex_labels[w] for w in ranked)
    print(f"{g.vertex_labels[v]}: {names or '(none)'}")
