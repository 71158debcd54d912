from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sparsehg.core import (
    DirectedGraph,
    Hypergraph,
    Orientation,
    UndirectedGraph,
    as_graph,
    connected_components,
    induced_subhypergraph,
    is_connected,
    parse_digraph,
    parse_hypergraph,
    preimage_counts,
    serialize_digraph,
    serialize_hypergraph,
)
from sparsehg.errors import (
    DuplicateLabel,
    DuplicateVertexInEdge,
    NotAGraph,
    ParseError,
    UndeclaredVertex,
)
from sparsehg.generators import random_hypergraph, rng_for


def triangle() -> Hypergraph:
    return Hypergraph(["a", "b", "c"], [(0, 1), (1, 2), (0, 2)])


def test_basic_accessors():
    h = triangle()
    assert h.num_vertices == 3
    assert h.num_edges == 3
    assert h.rank() == 2
    assert list(h.vertices()) == [0, 1, 2]
    assert h.incident_edges[1] == (0, 1)
    assert h.vertex_id("b") == 1
    assert h.edge_id(h.edge_labels[2]) == 2


def test_unknown_labels_raise():
    h = triangle()
    with pytest.raises(KeyError):
        h.vertex_id("z")
    with pytest.raises(KeyError):
        h.edge_id("nope")


def test_rank_counts_largest_edge():
    h = Hypergraph(["a", "b", "c", "d"], [(0,), (1, 2, 3)])
    assert h.rank() == 3


def test_orientation_validates_membership():
    h = triangle()
    f = Orientation(h, [0, 1, 2])
    assert preimage_counts(f) == [1, 1, 1]
    with pytest.raises(ValueError):
        Orientation(h, [2, 1, 2])  # 2 not in edge {0,1}


def test_as_graph_accepts_only_pairs():
    g = as_graph(triangle())
    assert isinstance(g, UndirectedGraph)
    assert g.degree(0) == 2
    h = Hypergraph(["a", "b", "c"], [(0, 1, 2)])
    with pytest.raises(NotAGraph):
        as_graph(h)


def test_digraph_neighbours_and_antisymmetry():
    g = DirectedGraph(["x", "y", "z"], [(0, 1), (1, 2)])
    assert g.out_neighbours[0] == (1,)
    assert g.in_neighbours[2] == (1,)
    assert g.is_antisymmetric()
    g2 = DirectedGraph(["x", "y"], [(0, 1), (1, 0)])
    assert not g2.is_antisymmetric()


HG_TEXT = """\
# comment
v a
v b
v c
e ab a b      # trailing comment
e abc a b c
"""


def test_parse_hypergraph():
    h = parse_hypergraph(HG_TEXT)
    assert h.vertex_labels == ("a", "b", "c")
    assert h.edges == ((0, 1), (0, 1, 2))
    assert h.edge_labels == ("ab", "abc")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(DuplicateLabel) as exc:
        parse_hypergraph("v a\nv a\n")
    assert "line 2" in str(exc.value)
    with pytest.raises(UndeclaredVertex):
        parse_hypergraph("v a\ne e1 a b\n")
    with pytest.raises(DuplicateVertexInEdge):
        parse_hypergraph("v a\ne e1 a a\n")
    with pytest.raises(ParseError):
        parse_hypergraph("w a\n")


def test_hypergraph_round_trip():
    h = parse_hypergraph(HG_TEXT)
    again = parse_hypergraph(serialize_hypergraph(h))
    assert again.vertex_labels == h.vertex_labels
    assert again.edges == h.edges
    assert again.edge_labels == h.edge_labels


def test_digraph_round_trip():
    g = parse_digraph("v x\nv y\na x y\na y x\n")
    again = parse_digraph(serialize_digraph(g))
    assert sorted(again.arcs) == sorted(g.arcs)


@given(st.integers(min_value=0, max_value=2**32))
def test_random_hypergraph_round_trip(seed):
    rng = rng_for(seed)
    h = random_hypergraph(rng, 6, 3, 5)
    again = parse_hypergraph(serialize_hypergraph(h))
    assert again.edges == h.edges
    assert again.vertex_labels == h.vertex_labels


def test_induced_subhypergraph_keeps_inside_edges():
    h = Hypergraph(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3), (0, 1, 2)])
    sub = induced_subhypergraph(h, [0, 1, 2])
    assert list(sub.vertex_labels) == ["a", "b", "c"]
    assert sub.edges == ((0, 1), (1, 2), (0, 1, 2))
    with pytest.raises(UndeclaredVertex):
        induced_subhypergraph(h, [0, 9])


def test_connected_components_partition_and_order():
    h = Hypergraph(list("abcdef"), [(0, 1), (3, 4), (4, 5)])
    comps = connected_components(h)
    assert comps == [[0, 1], [2], [3, 4, 5]]
    assert not is_connected(h)
    assert is_connected(Hypergraph(["a"], []))


@given(st.integers(min_value=0, max_value=2**32))
def test_components_partition_property(seed):
    rng = rng_for(seed, 99)
    h = random_hypergraph(rng, 8, 3, 6)
    comps = connected_components(h)
    flat = [v for comp in comps for v in comp]
    assert sorted(flat) == list(range(8))
    # edges never straddle two components
    comp_of = {v: i for i, comp in enumerate(comps) for v in comp}
    for e in h.edges:
        assert len({comp_of[v] for v in e}) <= 1
