"""Flows on undirected graphs that realize sparse distributions.

A distribution assigns a demand to every vertex; it is k-sparse when no
vertex set demands more than its size plus k per border edge.  For
sparse distributions a max-flow computation yields an integer flow
whose defect is delta - 1 almost everywhere; canceling cycles and
decomposing the rest into paths turns the flow into a function g with
|g^-1(v)| = delta(v).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import UndirectedGraph, _content_lines
from .errors import (
    CapExceeded,
    DuplicateLabel,
    InvalidFlow,
    NotSparseDistribution,
    ParseError,
    UndeclaredVertex,
)
from .maxflow import FlowNetwork


def border(g: UndirectedGraph, z) -> list[int]:
    """Edge ids of B_G(Z): edges with exactly one endpoint in z."""
    inside = set(z)
    return [
        ei
        for ei, (u, v) in enumerate(g.edges)
        if (u in inside) != (v in inside)
    ]


def distribution_sum(d, xs) -> int:
    return sum(d[v] for v in xs)


def induced_distribution(h, g: UndirectedGraph) -> list[int]:
    """Per-vertex preimage counts of a set-to-vertex function."""
    entries = getattr(h, "entries", h)
    d = [0] * g.num_vertices
    for _, v in entries:
        if not 0 <= v < g.num_vertices:
            raise UndeclaredVertex(f"image vertex {v} not in graph")
        d[v] += 1
    return d


class Flow:
    """Antisymmetric integer flow, stored as net values per edge.

    ``values`` maps ordered vertex pairs to integers; mirrored entries
    must agree up to sign and the support must lie on graph edges.
    """

    def __init__(self, graph: UndirectedGraph, values=None):
        self.graph = graph
        self._values: dict[tuple[int, int], int] = {}
        for (u, v), val in dict(values or {}).items():
            if val == 0:
                continue
            if graph.edge_between(u, v) is None:
                raise InvalidFlow(f"flow on non-edge ({u},{v})")
            key, signed = ((u, v), val) if u < v else ((v, u), -val)
            if key in self._values and self._values[key] != signed:
                raise InvalidFlow(f"inconsistent mirror values on edge {key}")
            self._values[key] = signed
        self._values = {k: v for k, v in self._values.items() if v != 0}

    def value(self, u: int, v: int) -> int:
        if u == v:
            return 0
        if u < v:
            return self._values.get((u, v), 0)
        return -self._values.get((v, u), 0)

    def items(self):
        """Nonzero values on canonically ordered edges, sorted."""
        return sorted(self._values.items())

    def is_zero(self) -> bool:
        return not self._values


def defect(f: Flow) -> list[int]:
    """d_f(v) = sum over u of f(v,u)."""
    d = [0] * f.graph.num_vertices
    for (u, v), val in f.items():
        d[u] += val
        d[v] -= val
    return d


def check_delta_flow(f: Flow, d) -> bool:
    """f is a delta-flow: d_f(v) = delta(v)-1, or delta(v)=0 = d_f(v).

    A vertex with delta(v)=0 and d_f(v)=-1 passes via the first branch.
    """
    df = defect(f)
    return all(
        df[v] == d[v] - 1 or (d[v] == 0 and df[v] == 0)
        for v in f.graph.vertices()
    )


def bounds(f: Flow) -> tuple[int, int]:
    """(edge bound, vertex bound): max |f(u,v)| and max_v sum_u |f(u,v)|."""
    edge_bound = 0
    per_vertex = [0] * f.graph.num_vertices
    for (u, v), val in f.items():
        edge_bound = max(edge_bound, abs(val))
        per_vertex[u] += abs(val)
        per_vertex[v] += abs(val)
    return edge_bound, max(per_vertex, default=0)


def is_k_sparse_distribution_bruteforce(
    g: UndirectedGraph, d, k: int, cap: int = 20
):
    """Check delta(Z) <= |Z| + k|B(Z)| over every subset Z.

    Subsets are bitmasks with vertex i on bit i; the first violating
    mask (in numeric order) becomes the witness.
    """
    n = g.num_vertices
    if n > cap:
        raise CapExceeded(f"brute force capped at {cap} vertices, got {n}")
    total = 1 << n
    sums = np.zeros(1, dtype=np.int64)
    pop = np.zeros(1, dtype=np.int64)
    for v in range(n):
        sums = np.concatenate([sums, sums + d[v]])
        pop = np.concatenate([pop, pop + 1])
    masks = np.arange(total, dtype=np.int64)
    border_count = np.zeros(total, dtype=np.int64)
    for u, v in g.edges:
        border_count += ((masks >> u) ^ (masks >> v)) & 1
    violating = sums > pop + k * border_count
    if not violating.any():
        return True, None
    mask = int(np.nonzero(violating)[0][0])
    witness = [v for v in range(n) if mask >> v & 1]
    return False, witness


def _delta_network(g: UndirectedGraph, d, k: int):
    """Auxiliary network: source 0, sink 1, vertex v at node 2+v.

    Arcs are inserted in increasing id order so augmentation is
    deterministic.  Returns the network, the per-edge arc indices for
    both directions, and the sparse target value (total source
    capacity)."""
    net = FlowNetwork(2 + g.num_vertices)
    target = 0
    for v in g.vertices():
        cap = max(0, d[v] - 1)
        net.add_edge(0, 2 + v, cap)
        target += cap
    for v in g.vertices():
        net.add_edge(2 + v, 1, 1 if d[v] == 0 else 0)
    forward = []
    backward = []
    for u, v in g.edges:
        forward.append(net.add_edge(2 + u, 2 + v, k))
        backward.append(net.add_edge(2 + v, 2 + u, k))
    return net, forward, backward, target


def is_k_sparse_distribution(g: UndirectedGraph, d, k: int):
    """Flow-based sparsity check with a violating set from the min cut."""
    net, _, _, target = _delta_network(g, d, k)
    value = net.max_flow(0, 1)
    if value == target:
        return True, None
    side = net.source_side(0)
    witness = sorted(v for v in g.vertices() if 2 + v in side)
    assert witness
    assert distribution_sum(d, witness) > len(witness) + k * len(
        border(g, witness)
    )
    return False, witness


def compute_delta_flow(g: UndirectedGraph, d, k: int) -> Flow:
    """Maximum-flow construction of a delta-flow, edge-bounded by k."""
    sparse, witness = is_k_sparse_distribution(g, d, k)
    if not sparse:
        raise NotSparseDistribution(
            f"distribution is not {k}-sparse", witness=witness
        )
    net, forward, backward, target = _delta_network(g, d, k)
    value = net.max_flow(0, 1)
    assert value == target
    values = {}
    for ei, (u, v) in enumerate(g.edges):
        values[(u, v)] = net.flow_on(forward[ei]) - net.flow_on(backward[ei])
    f = Flow(g, values)
    assert check_delta_flow(f, d)
    edge_bound, vertex_bound = bounds(f)
    assert edge_bound <= k
    max_degree = max((g.degree(v) for v in g.vertices()), default=0)
    assert vertex_bound <= max_degree * k
    return f


def _find_positive_cycle(f: Flow):
    """Least-id depth-first search for a cycle of positive-flow arcs."""
    g = f.graph
    color = {v: 0 for v in g.vertices()}  # 0 white, 1 on stack, 2 done
    for start in g.vertices():
        if color[start] != 0:
            continue
        stack = [(start, iter(g.adjacency[start]))]
        color[start] = 1
        on_path = [start]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if f.value(u, w) <= 0:
                    continue
                if color[w] == 1:
                    return on_path[on_path.index(w) :]
                if color[w] == 0:
                    color[w] = 1
                    on_path.append(w)
                    stack.append((w, iter(g.adjacency[w])))
                    advanced = True
                    break
            if not advanced:
                color[u] = 2
                on_path.pop()
                stack.pop()
    return None


def cancel_cycles(f: Flow) -> Flow:
    """Subtract the minimum value around positive cycles until acyclic.

    The defect is unchanged at every vertex and neither bound grows."""
    values = {key: val for key, val in f.items()}
    current = Flow(f.graph, values)
    while True:
        cycle = _find_positive_cycle(current)
        if cycle is None:
            break
        closed = cycle + [cycle[0]]
        c = min(
            current.value(closed[i], closed[i + 1])
            for i in range(len(cycle))
        )
        assert c > 0
        updates = dict(current.items())
        for i in range(len(cycle)):
            u, v = closed[i], closed[i + 1]
            key, sign = ((u, v), 1) if u < v else ((v, u), -1)
            updates[key] = updates.get(key, 0) - sign * c
        current = Flow(f.graph, updates)
    assert defect(current) == defect(f)
    old_bounds = bounds(f)
    new_bounds = bounds(current)
    assert new_bounds[0] <= old_bounds[0] and new_bounds[1] <= old_bounds[1]
    return current


@dataclass
class PathFamily:
    """Vertex paths plus directed per-arc usage counts."""

    paths: tuple
    usage: dict

    def start_counts(self, n: int) -> list[int]:
        counts = [0] * n
        for path in self.paths:
            counts[path[0]] += 1
        return counts

    def end_counts(self, n: int) -> list[int]:
        counts = [0] * n
        for path in self.paths:
            counts[path[-1]] += 1
        return counts


def decompose_flow_paths(g: UndirectedGraph, f: Flow, d) -> PathFamily:
    """Path family of an acyclic delta-flow.

    For every vertex v and each of its delta(v) demands (in vertex-id
    order), grow a path: stop at the first vertex no path has ended at
    yet, otherwise follow the least-id arc with flow left over.  Ends
    are distinct, starts realize delta, and arc usage stays below the
    flow value.
    """
    if not check_delta_flow(f, d):
        raise InvalidFlow("not a delta-flow for the given distribution")
    if _find_positive_cycle(f) is not None:
        raise InvalidFlow("flow has a positive cycle")
    n = g.num_vertices
    beta = [0] * n
    mu: dict[tuple[int, int], int] = {}
    paths = []
    for v in range(n):
        for _ in range(d[v]):
            path = [v]
            u = v
            while beta[u] != 0:
                nxt = None
                for w in g.adjacency[u]:
                    if f.value(u, w) > mu.get((u, w), 0):
                        nxt = w
                        break
                assert nxt is not None, "path cannot continue"
                mu[(u, nxt)] = mu.get((u, nxt), 0) + 1
                assert nxt not in path, "path revisits a vertex"
                path.append(nxt)
                u = nxt
            beta[u] = 1
            paths.append(tuple(path))
    family = PathFamily(tuple(paths), mu)
    assert family.start_counts(n) == list(d)
    assert all(c <= 1 for c in family.end_counts(n))
    assert all(f.value(u, w) >= cnt for (u, w), cnt in mu.items())
    return family


def validate_path_family(g: UndirectedGraph, p: PathFamily, m: int) -> bool:
    """Every vertex and every edge lies on at most m of the paths."""
    vertex_load = [0] * g.num_vertices
    edge_load = [0] * g.num_edges
    for path in p.paths:
        for v in set(path):
            vertex_load[v] += 1
        for u, w in set(zip(path, path[1:])):
            ei = g.edge_between(u, w)
            edge_load[ei] += 1
    return all(c <= m for c in vertex_load) and all(
        c <= m for c in edge_load
    )


def function_from_flow(g: UndirectedGraph, d, f: Flow) -> dict[int, int]:
    """Partial map g with |g^-1(v)| = delta(v), built from a delta-flow.

    Cancels cycles, decomposes into paths and maps each path's end to
    its start."""
    if not check_delta_flow(f, d):
        raise InvalidFlow("not a delta-flow for the given distribution")
    acyclic = cancel_cycles(f)
    family = decompose_flow_paths(g, acyclic, d)
    gmap: dict[int, int] = {}
    for path in family.paths:
        assert path[-1] not in gmap
        gmap[path[-1]] = path[0]
    counts = [0] * g.num_vertices
    for v in gmap.values():
        counts[v] += 1
    assert counts == list(d)
    return gmap


# --- file formats -----------------------------------------------------------


def parse_distribution(text: str, g: UndirectedGraph) -> list[int]:
    """Lines `<vertex-label> <count>`; omitted vertices default to 0."""
    d = [0] * g.num_vertices
    seen = set()
    for lineno, parts in _content_lines(text):
        if len(parts) != 2:
            raise ParseError("expected `<vertex> <count>`", line=lineno)
        label, count_text = parts
        try:
            v = g.vertex_id(label)
        except KeyError:
            raise UndeclaredVertex(
                f"unknown vertex {label!r}", line=lineno
            ) from None
        if v in seen:
            raise DuplicateLabel(f"vertex {label!r} repeated", line=lineno)
        seen.add(v)
        try:
            count = int(count_text)
        except ValueError:
            count = -1
        if count < 0:
            raise ParseError(
                f"count must be a nonnegative integer, got {count_text!r}",
                line=lineno,
            )
        d[v] = count
    return d


def serialize_distribution(d, g: UndirectedGraph) -> str:
    lines = [
        f"{g.vertex_labels[v]} {d[v]}" for v in g.vertices() if d[v] != 0
    ]
    return "".join(line + "\n" for line in lines)


def parse_flow(text: str, g: UndirectedGraph) -> Flow:
    """Lines `<u> <v> <value>`; pairs must be edges, given once each."""
    values: dict[tuple[int, int], int] = {}
    for lineno, parts in _content_lines(text):
        if len(parts) != 3:
            raise ParseError("expected `<u> <v> <value>`", line=lineno)
        try:
            u, v = g.vertex_id(parts[0]), g.vertex_id(parts[1])
        except KeyError as exc:
            raise UndeclaredVertex(
                f"unknown vertex {exc.args[0]!r}", line=lineno
            ) from None
        if u == v or g.edge_between(u, v) is None:
            raise ParseError(
                f"{parts[0]},{parts[1]} is not an edge", line=lineno
            )
        try:
            val = int(parts[2])
        except ValueError:
            raise ParseError(
                f"value must be an integer, got {parts[2]!r}", line=lineno
            ) from None
        key = (u, v) if u < v else (v, u)
        if key in values:
            raise ParseError(
                f"edge {parts[0]},{parts[1]} given twice", line=lineno
            )
        values[key] = val if u < v else -val
    return Flow(g, values)


def serialize_flow(f: Flow) -> str:
    labels = f.graph.vertex_labels
    lines = [
        f"{labels[u]} {labels[v]} {val}" for (u, v), val in f.items()
    ]
    return "".join(line + "\n" for line in lines)
