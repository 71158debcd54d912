"""Delta-flows: realizing a demand distribution along graph edges.

A distribution delta on the vertices of a graph is k-sparse when every
set Z satisfies delta(Z) <= |Z| + k|B(Z)|, with B(Z) the edges leaving
Z.  Sparse distributions admit a delta-flow (defect delta(v)-1 at every
demanded vertex) with edge values bounded by k; cancelling cycles and
peeling paths turns the flow into a partial vertex-to-vertex map whose
preimage sizes realize the distribution exactly.
"""

from sparsehg import (
    Flow,
    bounds,
    cancel_cycles,
    check_delta_flow,
    compute_delta_flow,
    decompose_flow_paths,
    defect,
    function_from_flow,
    is_k_sparse_distribution,
    serialize_flow,
)
from sparsehg.generators import grid_graph

g = grid_graph(2, 3)
labels = g.vertex_labels


def banner(title: str) -> None:
    print(f"\n== {title} ==")


def named(d) -> str:
    return ", ".join(f"{labels[v]}={c}" for v, c in enumerate(d) if c)


banner("a 2x3 grid with demands")
d = [3, 0, 0, 0, 0, 2]
print("distribution:", named(d))
ok, witness = is_k_sparse_distribution(g, d, 1)
print("1-sparse:", ok)

banner("a delta-flow bounded by k = 1")
f = compute_delta_flow(g, d, 1)
print(serialize_flow(f), end="")
print("defects:", named(defect(f)))
print("delta-flow check:", check_delta_flow(f, d))
print("edge bound, vertex bound:", bounds(f))

banner("overloading one vertex breaks sparsity")
ok, witness = is_k_sparse_distribution(g, [5, 0, 0, 0, 0, 0], 1)
print("sparse:", ok, "- violating set", [labels[v] for v in witness])

banner("cycle cancelling strips a circulation")
# add one unit around the left square of the grid
circulation = {(0, 1): 1, (1, 4): 1, (3, 4): -1, (0, 3): -1}
mixed = Flow(g, {key: f.value(*key) + circulation.get(key, 0)
                 for key in set(dict(f.items())) | set(circulation)})
print("defect unchanged by the circulation:", defect(mixed) == defect(f))
cancelled = cancel_cycles(mixed)
print("after cancelling:")
print(serialize_flow(cancelled), end="")

banner("paths, and the function they encode")
family = decompose_flow_paths(g, cancelled, d)
for path in family.paths:
    print("path:", " -> ".join(labels[v] for v in path))
# function_from_flow cancels internally, so the mixed flow works too
gmap = function_from_flow(g, d, mixed)
for v in sorted(gmap):
    print(f"gmap: {labels[v]} -> {labels[gmap[v]]}")
counts = [0] * g.num_vertices
for v in gmap.values():
    counts[v] += 1
print("preimage sizes match the distribution:", counts == d)
